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

#include "graphprep/graph.h"

#include <algorithm>

#include "graphprep/errors.h"

namespace graphprep {

Graph::Graph(size_t num_vertices) : adj_(num_vertices, BitVec(num_vertices)) {
}

Graph Graph::from_edges(size_t num_vertices, std::span<const Edge> edges) {
    Graph g(num_vertices);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::from_edges(size_t num_vertices, std::initializer_list<Edge> edges) {
    return from_edges(num_vertices, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
    if (v >= adj_.size()) {
        throw OutOfRangeError("vertex " + std::to_string(v) + " out of range for graph with " +
                              std::to_string(adj_.size()) + " vertices");
    }
}

size_t Graph::num_edges() const {
    size_t twice = 0;
    for (const auto &row : adj_) {
        twice += row.popcount();
    }
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw SelfLoopError(u);
    }
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].reset(v);
    adj_[v].reset(u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw SelfLoopError(u);
    }
    adj_[u].flip(v);
    adj_[v].flip(u);
}

Vertex Graph::add_vertex() {
    for (auto &row : adj_) {
        row.push_back(false);
    }
    adj_.emplace_back(adj_.size() + 1);
    if (!labels_.empty()) {
        labels_.push_back(std::to_string(adj_.size() - 1));
    }
    return adj_.size() - 1;
}

size_t Graph::min_degree() const {
    if (adj_.empty()) {
        return 0;
    }
    size_t best = adj_.size();
    for (const auto &row : adj_) {
        best = std::min(best, row.popcount());
    }
    return best;
}

size_t Graph::max_degree() const {
    size_t best = 0;
    for (const auto &row : adj_) {
        best = std::max(best, row.popcount());
    }
    return best;
}

Vertex Graph::min_degree_vertex() const {
    if (adj_.empty()) {
        throw OutOfRangeError("empty graph has no vertices");
    }
    Vertex best = 0;
    for (Vertex v = 1; v < adj_.size(); v++) {
        if (degree(v) < degree(best)) {
            best = v;
        }
    }
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    for (Vertex u = 0; u < adj_.size(); u++) {
        for (auto v = adj_[u].next(u); v.has_value(); v = adj_[u].next(*v)) {
            result.emplace_back(u, *v);
        }
    }
    return result;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != adj_.size()) {
        throw SizeMismatchError("label count does not match vertex count");
    }
    labels_ = std::move(labels);
}

std::vector<size_t> Graph::components() const {
    constexpr size_t unset = static_cast<size_t>(-1);
    std::vector<size_t> comp(adj_.size(), unset);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < adj_.size(); s++) {
        if (comp[s] != unset) {
            continue;
        }
        comp[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adj_[x].ones()) {
                if (comp[y] == unset) {
                    comp[y] = s;
                    stack.push_back(y);
                }
            }
        }
    }
    return comp;
}

bool Graph::is_connected() const {
    auto comp = components();
    return std::all_of(comp.begin(), comp.end(), [](size_t c) {
        return c == 0;
    });
}

bool Graph::is_valid() const {
    for (Vertex u = 0; u < adj_.size(); u++) {
        if (adj_[u].size() != adj_.size() || adj_[u].get(u)) {
            return false;
        }
        for (Vertex v : adj_[u].ones()) {
            if (!adj_[v].get(u)) {
                return false;
            }
        }
    }
    return true;
}

BitVec Graph::encode() const {
    size_t n = adj_.size();
    BitVec key(n * n);
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v : adj_[u].ones()) {
            key.set(u * n + v);
        }
    }
    return key;
}

void local_complement_in_place(Graph &g, Vertex v) {
    if (v >= g.num_vertices()) {
        throw OutOfRangeError("local complementation center " + std::to_string(v) + " out of range");
    }
    const BitVec nbrs = g.neighbors(v);
    std::vector<Vertex> ns = nbrs.ones();
    for (size_t i = 0; i < ns.size(); i++) {
        for (size_t j = i + 1; j < ns.size(); j++) {
            g.toggle_edge(ns[i], ns[j]);
        }
    }
}

Graph local_complement(const Graph &g, Vertex v) {
    Graph result = g;
    local_complement_in_place(result, v);
    return result;
}

Graph apply_lc_sequence(const Graph &g, const LcSequence &s) {
    for (Vertex v : s.steps) {
        if (v >= g.num_vertices()) {
            throw OutOfRangeError("sequence step " + std::to_string(v) + " out of range");
        }
    }
    Graph result = g;
    for (Vertex v : s.steps) {
        local_complement_in_place(result, v);
    }
    return result;
}

namespace {

void expand_in_place(ExpansionRecord &record, Vertex v, const BitVec &moved) {
    Graph &g = record.expanded;
    if (v >= g.num_vertices()) {
        throw OutOfRangeError("expansion center " + std::to_string(v) + " out of range");
    }
    if (moved.size() != g.num_vertices()) {
        throw SizeMismatchError("expansion set has wrong length");
    }
    if (moved.none()) {
        throw EmptySetError("expansion set must be nonempty");
    }
    if (!moved.is_subset_of(g.neighbors(v))) {
        throw NotNeighborsError("expansion set is not contained in N(" + std::to_string(v) + ")");
    }
    std::vector<Vertex> targets = moved.ones();
    Vertex u = g.add_vertex();
    Vertex w = g.add_vertex();
    for (Vertex r : targets) {
        g.remove_edge(v, r);
        g.add_edge(w, r);
    }
    g.add_edge(v, u);
    g.add_edge(u, w);
    BitVec moved_resized = moved;
    moved_resized.push_back(false);
    moved_resized.push_back(false);
    record.added.push_back({v, std::move(moved_resized), u, w});
}

}  // namespace

ExpansionRecord expand(const Graph &g, Vertex v, const BitVec &moved) {
    ExpansionRecord record{g, g, {}};
    expand_in_place(record, v, moved);
    return record;
}

ExpansionRecord expand_to_max_degree_3(const Graph &g) {
    ExpansionRecord record{g, g, {}};
    for (Vertex v = 0; v < record.expanded.num_vertices(); v++) {
        size_t d = record.expanded.degree(v);
        if (d < 4) {
            continue;
        }
        // v keeps its two lowest neighbors plus the new u; w inherits the rest
        // with degree d - 1 and is revisited later in this loop.
        std::vector<Vertex> nbrs = record.expanded.neighbors(v).ones();
        BitVec moved(record.expanded.num_vertices());
        for (size_t i = 2; i < nbrs.size(); i++) {
            moved.set(nbrs[i]);
        }
        expand_in_place(record, v, moved);
    }
    return record;
}

Graph contract(const ExpansionRecord &record) {
    Graph g = record.expanded;
    for (auto it = record.added.rbegin(); it != record.added.rend(); ++it) {
        size_t n = g.num_vertices();
        if (it->w != n - 1 || it->u != n - 2) {
            throw InvalidWitnessError("expansion record steps are out of order");
        }
        BitVec expected_w = it->moved;
        expected_w.set(it->u);
        if (g.neighbors(it->w) != expected_w ||
            g.neighbors(it->u) != BitVec::from_indices(n, {it->v, it->w})) {
            throw InvalidWitnessError("graph does not match the recorded expansion step");
        }
        Graph smaller(n - 2);
        for (auto [a, b] : g.edges()) {
            if (b < n - 2) {
                smaller.add_edge(a, b);
            }
        }
        for (Vertex r : it->moved.ones()) {
            smaller.add_edge(it->v, r);
        }
        g = std::move(smaller);
    }
    g.set_labels(record.original.labels());
    return g;
}

}  // namespace graphprep
