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

#include <bit>
#include <stdexcept>

#include "graphprep/subset_sweep.h"

namespace graphprep {

SweepResult min_local_set_sweep_serial(std::span<const uint64_t> rows) {
    const size_t n = rows.size();
    if (n == 0 || n > 63) {
        throw std::invalid_argument("subset sweep needs 1..63 vertices");
    }
    SweepResult best{n + 1, 0, 0};
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t k = 1; k < total; k++) {
        uint64_t odd_seen = 0;
        for (size_t u = 0; u < n; u++) {
            if (std::popcount(rows[u] & k) & 1) {
                odd_seen |= uint64_t{1} << u;
            }
        }
        uint64_t d = k | odd_seen;
        SweepResult cand{static_cast<size_t>(std::popcount(d)), k, d};
        if (sweep_better(cand, best)) {
            best = cand;
        }
    }
    return best;
}

}  // namespace graphprep
