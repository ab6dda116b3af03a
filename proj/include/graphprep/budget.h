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

#ifndef GRAPHPREP_BUDGET_H
#define GRAPHPREP_BUDGET_H

#include <cstddef>
#include <string_view>

namespace graphprep {

/// Limits for the exponential searches.
struct Budgets {
    /// Largest vertex count accepted by the exact subset sweep.
    size_t max_subset_vertices = 24;
    /// Largest number of graphs an orbit search may visit.
    size_t max_orbit_size = 200000;
    /// Largest edge count accepted by exact edge coloring.
    size_t max_exact_coloring_edges = 20;
    /// Largest random-measurement count verified exhaustively.
    size_t max_exhaustive_measurements = 20;

    /// Applies overrides of the form "key=value,key=value". Unknown keys throw.
    void apply_overrides(std::string_view spec);
    /// Defaults, overridden by the GRAPHPREP_BUDGET environment variable when set.
    static Budgets from_environment();
};

}  // namespace graphprep

#endif
