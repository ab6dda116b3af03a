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

#include "graphprep/budget.h"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace graphprep {

void Budgets::apply_overrides(std::string_view spec) {
    while (!spec.empty()) {
        size_t comma = spec.find(',');
        std::string_view item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty()) {
            continue;
        }
        size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("budget override '" + std::string(item) + "' is not key=value");
        }
        std::string key(item.substr(0, eq));
        std::string value(item.substr(eq + 1));
        size_t parsed_len = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(value, &parsed_len);
        } catch (const std::exception &) {
            parsed_len = 0;
        }
        if (parsed_len != value.size() || value.empty()) {
            throw std::invalid_argument("budget override '" + key + "' has non-numeric value '" + value + "'");
        }
        if (key == "max_subset_vertices") {
            max_subset_vertices = v;
        } else if (key == "max_orbit_size") {
            max_orbit_size = v;
        } else if (key == "max_exact_coloring_edges") {
            max_exact_coloring_edges = v;
        } else if (key == "max_exhaustive_measurements") {
            max_exhaustive_measurements = v;
        } else {
            throw std::invalid_argument("unknown budget key '" + key + "'");
        }
    }
}

Budgets Budgets::from_environment() {
    Budgets b;
    if (const char *env = std::getenv("GRAPHPREP_BUDGET")) {
        b.apply_overrides(env);
    }
    return b;
}

}  // namespace graphprep
