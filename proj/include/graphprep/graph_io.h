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

#ifndef GRAPHPREP_GRAPH_IO_H
#define GRAPHPREP_GRAPH_IO_H

#include <string>
#include <string_view>

#include "graphprep/graph.h"

namespace graphprep {

enum class GraphFormat {
    EdgeList,
    Graph6,
};

/// "edge-list" / "graph6"; throws std::invalid_argument otherwise.
GraphFormat parse_graph_format(std::string_view name);

/// Edge-list text is the vertex count on the first line followed by one
/// 0-indexed "u v" pair per line. Blank lines and lines starting with '#' are
/// skipped. Duplicate edges collapse.
///
/// graph6 follows the standard encoding (an optional ">>graph6<<" header is
/// accepted).
///
/// Throws ParseError on malformed input and SelfLoopError on "v v".
Graph parse_graph(std::string_view text, GraphFormat format);

std::string to_edge_list(const Graph &g);
std::string to_graph6(const Graph &g);
Graph from_graph6(std::string_view text);

}  // namespace graphprep

#endif
