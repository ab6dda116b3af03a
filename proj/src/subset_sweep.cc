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

#include <omp.h>

#include <bit>
#include <stdexcept>

#include "graphprep/subset_sweep.h"

namespace graphprep {

bool sweep_better(const SweepResult &a, const SweepResult &b) {
    if (a.d_size != b.d_size) {
        return a.d_size < b.d_size;
    }
    int ka = std::popcount(a.k_mask);
    int kb = std::popcount(b.k_mask);
    if (ka != kb) {
        return ka < kb;
    }
    return a.k_mask < b.k_mask;
}

SweepResult min_local_set_sweep(std::span<const uint64_t> rows) {
    const size_t n = rows.size();
    if (n == 0 || n > 63) {
        throw std::invalid_argument("subset sweep needs 1..63 vertices");
    }
    const uint64_t total = uint64_t{1} << n;
    // Chunks of 2^12 Gray-code steps keep the per-chunk setup negligible.
    const uint64_t chunk = std::min<uint64_t>(total, uint64_t{1} << 12);
    const int64_t num_chunks = static_cast<int64_t>(total / chunk);

    SweepResult best{n + 1, 0, 0};
#pragma omp parallel
    {
        SweepResult local{n + 1, 0, 0};
#pragma omp for schedule(static)
        for (int64_t c = 0; c < num_chunks; c++) {
            uint64_t lo = static_cast<uint64_t>(c) * chunk;
            uint64_t hi = lo + chunk;
            uint64_t k = lo ^ (lo >> 1);
            uint64_t parity = 0;
            for (uint64_t m = k; m; m &= m - 1) {
                parity ^= rows[std::countr_zero(m)];
            }
            for (uint64_t i = lo;;) {
                if (k != 0) {
                    uint64_t d = k | parity;
                    SweepResult cand{static_cast<size_t>(std::popcount(d)), k, d};
                    if (sweep_better(cand, local)) {
                        local = cand;
                    }
                }
                if (++i == hi) {
                    break;
                }
                int bit = std::countr_zero(i);
                k ^= uint64_t{1} << bit;
                parity ^= rows[bit];
            }
        }
#pragma omp critical(graphprep_sweep_merge)
        {
            if (sweep_better(local, best)) {
                best = local;
            }
        }
    }
    return best;
}

}  // namespace graphprep
