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

#include "graphprep/locmin.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "graphprep/edge_coloring.h"
#include "graphprep/errors.h"
#include "graphprep/gf2.h"
#include "graphprep/subset_sweep.h"

namespace graphprep {

namespace {

/// Adjacency rows of a graph with at most 64 vertices.
using Rows = std::vector<uint64_t>;

struct RowsHash {
    size_t operator()(const Rows &r) const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : r) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return static_cast<size_t>(h);
    }
};

Rows to_rows(const Graph &g) {
    if (g.num_vertices() > 64) {
        throw TooLargeError("orbit search supports at most 64 vertices");
    }
    Rows rows(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        rows[v] = g.neighbors(v).empty() ? 0 : g.neighbors(v).words()[0];
    }
    return rows;
}

Graph from_rows(const Rows &rows) {
    Graph g(rows.size());
    for (Vertex u = 0; u < rows.size(); u++) {
        for (uint64_t m = rows[u] >> u >> 1; m; m &= m - 1) {
            g.add_edge(u, u + 1 + std::countr_zero(m));
        }
    }
    return g;
}

void lc_rows(Rows &rows, size_t v) {
    uint64_t nb = rows[v];
    for (uint64_t m = nb; m; m &= m - 1) {
        int u = std::countr_zero(m);
        rows[u] ^= nb & ~(uint64_t{1} << u);
    }
}

size_t rows_min_degree(const Rows &rows) {
    size_t best = rows.size();
    for (uint64_t r : rows) {
        best = std::min<size_t>(best, std::popcount(r));
    }
    return best;
}

/// Breadth-first orbit walk. `visit(rows, index)` returns false to stop early.
struct OrbitWalk {
    std::vector<Rows> nodes;
    std::vector<size_t> parent;
    std::vector<Vertex> step;
    bool complete = false;

    template <class Visit>
    void run(const Graph &seed, size_t max_nodes, bool throw_on_budget, Visit &&visit) {
        std::unordered_map<Rows, size_t, RowsHash> seen;
        nodes.push_back(to_rows(seed));
        parent.push_back(0);
        step.push_back(0);
        seen.emplace(nodes[0], 0);
        size_t n = seed.num_vertices();
        for (size_t head = 0; head < nodes.size(); head++) {
            if (!visit(nodes[head], head)) {
                return;
            }
            for (size_t v = 0; v < n; v++) {
                if (std::popcount(nodes[head][v]) < 2) {
                    continue;
                }
                Rows next = nodes[head];
                lc_rows(next, v);
                if (seen.count(next)) {
                    continue;
                }
                if (nodes.size() >= max_nodes) {
                    if (throw_on_budget) {
                        throw BudgetExceededError("orbit exceeds " + std::to_string(max_nodes) + " graphs");
                    }
                    return;
                }
                seen.emplace(next, nodes.size());
                nodes.push_back(std::move(next));
                parent.push_back(head);
                step.push_back(v);
            }
        }
        complete = true;
    }

    LcSequence path(size_t index) const {
        LcSequence s;
        while (index != 0) {
            s.steps.push_back(step[index]);
            index = parent[index];
        }
        std::reverse(s.steps.begin(), s.steps.end());
        return s;
    }
};

BitVec neighbor_parity(const Graph &g, const BitVec &set) {
    // Bit u set iff u has an odd number of neighbors in `set`.
    BitVec parity(g.num_vertices());
    for (Vertex v : set.ones()) {
        parity ^= g.neighbors(v);
    }
    return parity;
}

}  // namespace

EvenlySeenWitness EvenlySeenWitness::make(const Graph &g, BitVec k_set, BitVec d_set) {
    if (k_set.size() != g.num_vertices() || d_set.size() != g.num_vertices()) {
        throw InvalidWitnessError("witness sets must have one bit per vertex");
    }
    if (k_set.none() || !k_set.is_subset_of(d_set)) {
        throw InvalidWitnessError("witness needs a nonempty K inside D");
    }
    BitVec odd = neighbor_parity(g, k_set);
    if (!odd.is_subset_of(d_set)) {
        throw InvalidWitnessError("a vertex outside D sees K an odd number of times");
    }
    return EvenlySeenWitness(std::move(k_set), std::move(d_set));
}

bool is_evenly_seen(const Graph &g, const BitVec &d_set) {
    if (d_set.size() != g.num_vertices()) {
        throw SizeMismatchError("vertex set has wrong length");
    }
    BitVec odd = neighbor_parity(g, d_set);
    return odd.is_subset_of(d_set);
}

bool is_d_locally_evenly_seen(const Graph &g, const BitVec &k_set, const BitVec &d_set) {
    if (k_set.size() != g.num_vertices() || d_set.size() != g.num_vertices()) {
        throw SizeMismatchError("vertex set has wrong length");
    }
    if (k_set.none() || !k_set.is_subset_of(d_set)) {
        throw BadNestingError("K must be nonempty and contained in D");
    }
    return neighbor_parity(g, k_set).is_subset_of(d_set);
}

LcSequence reduce_degree(const Graph &g, const EvenlySeenWitness &w) {
    if (w.k_set().size() != g.num_vertices() || !is_d_locally_evenly_seen(g, w.k_set(), w.d_set())) {
        throw InvalidWitnessError("witness does not hold for this graph");
    }
    const size_t d = w.d();
    const size_t limit = 2 * w.k_set().popcount();
    const BitVec &dset = w.d_set();
    Graph cur = g;
    BitVec k = w.k_set();
    LcSequence seq;
    while (cur.min_degree() + 1 > d) {
        std::optional<Vertex> odd;
        for (Vertex v : k.ones()) {
            if (cur.neighbors(v).dot(k)) {
                odd = v;
                break;
            }
        }
        if (odd.has_value()) {
            local_complement_in_place(cur, *odd);
            seq.steps.push_back(*odd);
            k.reset(*odd);
        } else {
            // Flip the K-parity of the lowest K vertex through an outside
            // neighbor; outside vertices all see K evenly, so K stays valid.
            std::optional<Vertex> outside;
            for (Vertex v : k.ones()) {
                BitVec out = cur.neighbors(v);
                out.subtract(dset);
                if (auto u = out.first()) {
                    outside = *u;
                    break;
                }
            }
            if (!outside.has_value()) {
                throw std::logic_error("degree reduction stalled: K vertex with all neighbors in D");
            }
            local_complement_in_place(cur, *outside);
            seq.steps.push_back(*outside);
        }
        if (seq.steps.size() > limit) {
            throw std::logic_error("degree reduction exceeded 2|K| steps");
        }
    }
    return seq;
}

DeltaLocResult delta_loc_exact(const Graph &g, const Budgets &budgets, SweepKernel kernel) {
    size_t n = g.num_vertices();
    if (n == 0) {
        throw EmptySetError("minimum degree is undefined on the empty graph");
    }
    if (n > budgets.max_subset_vertices || n > 63) {
        throw TooLargeError("exact subset sweep limited to " + std::to_string(budgets.max_subset_vertices) +
                            " vertices, graph has " + std::to_string(n));
    }
    std::vector<uint64_t> rows(n);
    for (Vertex v = 0; v < n; v++) {
        rows[v] = g.neighbors(v).words()[0];
    }
    SweepResult best =
        kernel == SweepKernel::Parallel ? min_local_set_sweep(rows) : min_local_set_sweep_serial(rows);
    BitVec k(n);
    BitVec d(n);
    for (Vertex v = 0; v < n; v++) {
        k.set(v, (best.k_mask >> v) & 1);
        d.set(v, (best.d_mask >> v) & 1);
    }
    EvenlySeenWitness w = EvenlySeenWitness::make(g, std::move(k), std::move(d));
    LcSequence reduction = reduce_degree(g, w);
    return DeltaLocResult{best.d_size - 1, std::move(w), std::move(reduction)};
}

size_t delta_loc_orbit_oracle(const Graph &g, size_t max_orbit_size) {
    if (g.num_vertices() == 0) {
        throw EmptySetError("minimum degree is undefined on the empty graph");
    }
    size_t best = g.num_vertices();
    OrbitWalk walk;
    walk.run(g, max_orbit_size, true, [&](const Rows &rows, size_t) {
        best = std::min(best, rows_min_degree(rows));
        return true;
    });
    return best;
}

std::optional<LcSequence> Orbit::path_to(const Graph &g) const {
    auto it = index.find(g.encode());
    if (it == index.end()) {
        return std::nullopt;
    }
    return paths[it->second];
}

Orbit lc_orbit(const Graph &g, size_t max_orbit_size) {
    OrbitWalk walk;
    walk.run(g, max_orbit_size, true, [](const Rows &, size_t) {
        return true;
    });
    Orbit orbit;
    orbit.graphs.reserve(walk.nodes.size());
    for (size_t i = 0; i < walk.nodes.size(); i++) {
        Graph member = from_rows(walk.nodes[i]);
        orbit.index.emplace(member.encode(), i);
        orbit.graphs.push_back(std::move(member));
        orbit.paths.push_back(walk.path(i));
    }
    return orbit;
}

OrbitSearchResult lc_search_min(const Graph &g, const std::function<double(const Graph &)> &score,
                                size_t max_visits) {
    OrbitWalk walk;
    size_t best_index = 0;
    double best_score = 0;
    size_t visited = 0;
    walk.run(g, std::max<size_t>(max_visits, 1), false, [&](const Rows &rows, size_t index) {
        double s = score(from_rows(rows));
        if (visited == 0 || s < best_score) {
            best_score = s;
            best_index = index;
        }
        visited++;
        return visited < max_visits;
    });
    Graph best = from_rows(walk.nodes[best_index]);
    best.set_labels(g.labels());
    return OrbitSearchResult{std::move(best), walk.path(best_index), best_score, visited, walk.complete};
}

ChiPrimeLoc chi_prime_loc(const Graph &g, const Budgets &budgets) {
    Orbit orbit = lc_orbit(g, budgets.max_orbit_size);
    std::optional<ChiPrimeLoc> best;
    for (size_t i = 0; i < orbit.size(); i++) {
        size_t colors = 0;
        try {
            colors = edge_coloring(orbit.graphs[i], true, budgets.max_exact_coloring_edges).num_colors;
        } catch (const TooLargeError &e) {
            throw BudgetExceededError(std::string("orbit member too large for exact coloring: ") + e.what());
        }
        if (!best.has_value() || colors < best->value) {
            best = ChiPrimeLoc{colors, orbit.paths[i]};
        }
    }
    return *best;
}

bool check_corollary2(const Graph &g, const Budgets &budgets) {
    size_t n = g.num_vertices();
    size_t value = delta_loc_exact(g, budgets).value;
    Gf2Matrix a(n, n);
    for (auto [u, v] : g.edges()) {
        a.set(u, v);
        a.set(v, u);
    }
    return value <= std::min(n / 2, rank(a));
}

}  // namespace graphprep
