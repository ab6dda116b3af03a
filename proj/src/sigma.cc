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
#include "graphprep/sigma.h"

#include "graphprep/errors.h"

namespace graphprep {

namespace {

void check_set(const Graph &g, const BitVec &set) {
    if (set.size() != g.num_vertices()) {
        throw BadSubsetError("vertex set has " + std::to_string(set.size()) + " bits, graph has " +
                             std::to_string(g.num_vertices()) + " vertices");
    }
}

}  // namespace

SigmaConfig press(const Graph &g, const SigmaConfig &c, Vertex v) {
    if (v >= g.num_vertices()) {
        throw OutOfRangeError("press at vertex " + std::to_string(v) + " outside graph");
    }
    check_set(g, c);
    return c ^ g.neighbors(v);
}

SigmaConfig press_all(const Graph &g, const SigmaConfig &c, const BitVec &r) {
    check_set(g, r);
    SigmaConfig out = c;
    for (Vertex v : r.ones()) {
        out = press(g, out, v);
    }
    return out;
}

Gf2Matrix submatrix_a_d(const Graph &g, const BitVec &d_set) {
    check_set(g, d_set);
    std::vector<Vertex> inside = d_set.ones();
    Gf2Matrix a(0, inside.size());
    for (Vertex u = 0; u < g.num_vertices(); u++) {
        if (d_set.get(u)) {
            continue;
        }
        BitVec row(inside.size());
        for (size_t j = 0; j < inside.size(); j++) {
            row.set(j, g.has_edge(u, inside[j]));
        }
        a.append_row(std::move(row));
    }
    return a;
}

std::optional<PressSet> solve_press_outside(const Graph &g, const BitVec &d_set, const BitVec &target) {
    check_set(g, d_set);
    if (target.size() != d_set.popcount()) {
        throw BadSubsetError("target must have one bit per vertex of D");
    }
    Gf2Matrix a = submatrix_a_d(g, d_set);
    // x indexes the outside vertices; A_D^T x = target.
    std::optional<Gf2Vector> x = solve(a.transpose(), target);
    if (!x.has_value()) {
        return std::nullopt;
    }
    PressSet r{BitVec(g.num_vertices())};
    size_t row = 0;
    for (Vertex u = 0; u < g.num_vertices(); u++) {
        if (!d_set.get(u)) {
            r.vertices.set(u, x->get(row++));
        }
    }
    return r;
}

bool reachable_all(const Graph &g, const BitVec &d_set) {
    Gf2Matrix a = submatrix_a_d(g, d_set);
    return rank(a) == d_set.popcount();
}

}  // namespace graphprep
