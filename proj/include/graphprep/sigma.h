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
#ifndef GRAPHPREP_SIGMA_H
#define GRAPHPREP_SIGMA_H

#include <optional>

#include "graphprep/bitvec.h"
#include "graphprep/gf2.h"
#include "graphprep/graph.h"

namespace graphprep {

/// One bit per vertex.
using SigmaConfig = BitVec;

/// Characteristic vector of the pressed vertices.
struct PressSet {
    BitVec vertices;
};

/// Pressing v flips every neighbor of v (v itself is unchanged).
SigmaConfig press(const Graph &g, const SigmaConfig &c, Vertex v);

/// Presses every vertex of `r`.
SigmaConfig press_all(const Graph &g, const SigmaConfig &c, const BitVec &r);

/// Rows are the vertices outside D, columns the vertices of D, both ascending.
Gf2Matrix submatrix_a_d(const Graph &g, const BitVec &d_set);

/// Press set R outside D whose presses flip exactly `target` on D. `target`
/// has one bit per vertex of D, in ascending vertex order. Returns nullopt when
/// no such R exists. Throws BadSubsetError on size mismatches.
std::optional<PressSet> solve_press_outside(const Graph &g, const BitVec &d_set, const BitVec &target);

/// Every configuration on D is reachable by pressing outside D.
bool reachable_all(const Graph &g, const BitVec &d_set);

}  // namespace graphprep

#endif
