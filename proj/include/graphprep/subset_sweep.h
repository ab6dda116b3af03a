// Copyright 2026 The graphprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHPREP_SUBSET_SWEEP_H
#define GRAPHPREP_SUBSET_SWEEP_H

#include <cstddef>
#include <cstdint>
#include <span>

namespace graphprep {

/// Best nonempty K found by a sweep. For a set K, D(K) is K together with
/// every outside vertex that has an odd number of neighbors in K; the sweep
/// minimizes |D(K)|.
struct SweepResult {
    size_t d_size = 0;
    uint64_t k_mask = 0;
    uint64_t d_mask = 0;

    bool operator==(const SweepResult &) const = default;
};

/// Total order used to pick the winner: smaller |D|, then smaller |K|, then
/// smaller K as an integer. Independent of thread count.
bool sweep_better(const SweepResult &a, const SweepResult &b);

/// Adjacency rows as bitmasks, n = rows.size() in [1, 63].
///
/// OpenMP kernel: the 2^n - 1 nonempty subsets are visited in Gray-code order,
/// split into contiguous chunks; each chunk keeps the running neighbor-parity
/// mask so a step costs one XOR.
SweepResult min_local_set_sweep(std::span<const uint64_t> rows);

/// Serial reference kernel: enumerates K in binary order and recomputes the
/// parity mask from scratch. Kept for cross-checking and benchmarking.
SweepResult min_local_set_sweep_serial(std::span<const uint64_t> rows);

}  // namespace graphprep

#endif
