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
#ifndef GRAPHPREP_PLANNER_H
#define GRAPHPREP_PLANNER_H

#include <cmath>
#include <cstddef>

#include "graphprep/budget.h"
#include "graphprep/graph.h"
#include "graphprep/schedule.h"

namespace graphprep {

/// Depth slack over ceil(m / sqrt(n)) for the one-ancilla measurement plan.
inline constexpr size_t kEdgeByEdgeDepthSlack = 8;
/// Depth slack over ceil(m' / sqrt(n')) for the ancilla-free measurement plan.
inline constexpr size_t kNoAncillaDepthSlack = 8;
/// Layer cap for the constant-depth plans.
inline constexpr size_t kConstantDepthLayers = 7;

/// ceil(m / sqrt(n)) + slack.
size_t sqrt_depth_bound(size_t m, size_t n, size_t slack);

struct PlanRequest {
    Measure measure = Measure::SNL;
    bool allow_unitaries = true;
    bool lc_optimize = false;
    Budgets budgets;
};

/// Dispatches to the plan optimizing the first two parameters of `measure`.
Schedule plan(const Graph &g, const PlanRequest &req);

/// All qubits allocated in |+>, then one layer of CZs per edge color.
/// With lc_optimize, prepares an orbit member of minimum chromatic index.
Schedule plan_edge_by_edge_unitary(const Graph &g, bool lc_optimize, const Budgets &budgets = {});

/// Measurements only, one ancilla. Every CZ is a measurement gadget; targets
/// not yet entangled serve as extra gadget ancillas. With lc_optimize,
/// prepares an orbit member with fewest edges.
Schedule plan_edge_by_edge_measurement(const Graph &g, bool lc_optimize = false, const Budgets &budgets = {});

/// Expands to maximum degree 3, creates the expanded graph in at most four
/// edge-color layers (unitary) or three gadget slots (measurements only), then
/// contracts with one layer of X measurements. With lc_optimize, prepares an
/// orbit member needing the fewest helper qubits.
Schedule plan_constant_depth(const Graph &g, bool allow_unitaries, bool lc_optimize = false,
                             const Budgets &budgets = {});

/// One |V|-qubit operation: a CZ network (unitary) or the projective
/// measurement onto the graph-state basis.
Schedule plan_global_operator(const Graph &g, bool allow_unitaries);

/// Measurements only, no ancilla: moves to an orbit member of minimum degree
/// delta_loc, builds every edge away from a minimum-degree vertex v with
/// gadgets that borrow v, then attaches v with one (delta_loc + 1)-qubit
/// measurement.
Schedule plan_no_ancilla_measurement(const Graph &g, bool lc_optimize = false, const Budgets &budgets = {});

}  // namespace graphprep

#endif
