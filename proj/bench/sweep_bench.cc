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
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "graphprep/subset_sweep.h"

namespace {

std::vector<uint64_t> random_rows(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<uint64_t> rows(n, 0);
    for (size_t u = 0; u < n; u++) {
        for (size_t v = u + 1; v < n; v++) {
            if (coin(rng)) {
                rows[u] |= uint64_t{1} << v;
                rows[v] |= uint64_t{1} << u;
            }
        }
    }
    return rows;
}

void BM_SweepSerial(benchmark::State &state) {
    auto rows = random_rows(static_cast<size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphprep::min_local_set_sweep_serial(rows));
    }
    state.SetItemsProcessed(state.iterations() * ((int64_t{1} << state.range(0)) - 1));
}

void BM_SweepParallel(benchmark::State &state) {
    auto rows = random_rows(static_cast<size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphprep::min_local_set_sweep(rows));
    }
    state.SetItemsProcessed(state.iterations() * ((int64_t{1} << state.range(0)) - 1));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
