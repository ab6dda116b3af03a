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

#ifndef GRAPHPREP_EDGE_COLORING_H
#define GRAPHPREP_EDGE_COLORING_H

#include <cstddef>
#include <vector>

#include "graphprep/graph.h"

namespace graphprep {

struct EdgeColoring {
    /// Same order as Graph::edges().
    std::vector<Edge> edges;
    std::vector<size_t> color;
    size_t num_colors = 0;

    size_t color_of(Vertex u, Vertex v) const;
    /// Edges grouped by color, each group in Graph::edges() order.
    std::vector<std::vector<Edge>> classes() const;
};

/// Proper edge coloring.
///
/// exact=false: greedy in decreasing endpoint-degree order, with Misra-Gries
/// fan recoloring for edges the greedy pass cannot fit into Delta+1 colors.
/// exact=true: chi'(G) colors, found by backtracking on Delta colors (Vizing
/// leaves only Delta or Delta+1). Throws TooLargeError above
/// `max_exact_edges` edges.
EdgeColoring edge_coloring(const Graph &g, bool exact, size_t max_exact_edges = 20);

bool is_proper_coloring(const Graph &g, const EdgeColoring &coloring);

}  // namespace graphprep

#endif
