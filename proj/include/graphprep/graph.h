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

#ifndef GRAPHPREP_GRAPH_H
#define GRAPHPREP_GRAPH_H

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphprep/bitvec.h"

namespace graphprep {

using Vertex = size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph stored as symmetric adjacency bit-rows.
///
/// Vertices are 0-based. `labels` optionally carries the original vertex names
/// (for example the 1-based names used in hand-written examples); they are
/// ignored by equality.
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t num_vertices);
    static Graph from_edges(size_t num_vertices, std::span<const Edge> edges);
    static Graph from_edges(size_t num_vertices, std::initializer_list<Edge> edges);

    size_t num_vertices() const {
        return adj_.size();
    }
    size_t num_edges() const;

    bool has_edge(Vertex u, Vertex v) const {
        return adj_[u].get(v);
    }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void toggle_edge(Vertex u, Vertex v);
    /// Appends an isolated vertex and returns its index.
    Vertex add_vertex();

    const BitVec &neighbors(Vertex v) const {
        return adj_[v];
    }
    size_t degree(Vertex v) const {
        return adj_[v].popcount();
    }
    /// Minimum degree; 0 for the empty graph.
    size_t min_degree() const;
    size_t max_degree() const;
    /// Lowest-index vertex of minimum degree.
    Vertex min_degree_vertex() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string> &labels() const {
        return labels_;
    }
    void set_labels(std::vector<std::string> labels);

    /// Component index per vertex; components numbered by their lowest vertex.
    std::vector<size_t> components() const;
    bool is_connected() const;

    /// Checks symmetry and the zero diagonal.
    bool is_valid() const;

    /// Row-concatenated adjacency; the labeled-graph key used for orbit dedup.
    BitVec encode() const;

    bool operator==(const Graph &other) const {
        return adj_ == other.adj_;
    }

   private:
    void check_vertex(Vertex v) const;

    std::vector<BitVec> adj_;
    std::vector<std::string> labels_;
};

/// Ordered list of local complementation centers, applied left to right.
struct LcSequence {
    std::vector<Vertex> steps;

    bool operator==(const LcSequence &) const = default;
};

/// Complements the neighborhood of `v`. Throws OutOfRangeError.
Graph local_complement(const Graph &g, Vertex v);
/// In-place variant used by the search loops.
void local_complement_in_place(Graph &g, Vertex v);
Graph apply_lc_sequence(const Graph &g, const LcSequence &s);

/// One vertex split: `v` keeps its other neighbors plus u, u-w is a new edge,
/// and w takes over the neighbors in `moved`.
struct ExpansionStep {
    Vertex v;
    BitVec moved;
    Vertex u;
    Vertex w;
};

struct ExpansionRecord {
    Graph original;
    Graph expanded;
    std::vector<ExpansionStep> added;

    /// Number of helper vertices introduced.
    size_t num_added_vertices() const {
        return 2 * added.size();
    }
};

/// Expands `v` by moving the neighbors in `moved` (a nonempty subset of N(v))
/// to a fresh helper pair. Throws NotNeighborsError, EmptySetError, OutOfRangeError.
ExpansionRecord expand(const Graph &g, Vertex v, const BitVec &moved);
/// Expands every vertex of degree >= 4 until the maximum degree is at most 3.
ExpansionRecord expand_to_max_degree_3(const Graph &g);
/// Undoes the recorded steps in reverse order.
Graph contract(const ExpansionRecord &record);

}  // namespace graphprep

#endif
