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

#include "graphprep/graph_io.h"

#include <charconv>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graphprep/errors.h"

namespace graphprep {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            i++;
        }
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
            j++;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

size_t parse_index(std::string_view token, size_t line) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

Graph parse_edge_list(std::string_view text) {
    std::optional<Graph> g;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line_no++;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto tokens = split_ws(line);
        if (!g.has_value()) {
            if (tokens.size() != 1) {
                throw ParseError(line_no, "first line must hold only the vertex count");
            }
            g.emplace(parse_index(tokens[0], line_no));
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected 'u v'");
        }
        size_t u = parse_index(tokens[0], line_no);
        size_t v = parse_index(tokens[1], line_no);
        if (u >= g->num_vertices() || v >= g->num_vertices()) {
            throw ParseError(line_no, "vertex index out of range");
        }
        if (u == v) {
            throw SelfLoopError(u);
        }
        g->add_edge(u, v);
    }
    if (!g.has_value()) {
        throw ParseError(line_no, "missing vertex count");
    }
    return *g;
}

int graph6_value(char c) {
    int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) {
        throw ParseError(1, "graph6 byte out of range");
    }
    return v;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "edge-list") {
        return GraphFormat::EdgeList;
    }
    if (name == "graph6") {
        return GraphFormat::Graph6;
    }
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

Graph from_graph6(std::string_view text) {
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
    }
    if (text.empty()) {
        throw ParseError(1, "empty graph6 string");
    }
    size_t pos = 0;
    size_t n = 0;
    if (text[0] != '~') {
        n = graph6_value(text[0]);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) {
            throw ParseError(1, "truncated graph6 size field");
        }
        for (size_t k = 1; k <= 3; k++) {
            n = (n << 6) | graph6_value(text[k]);
        }
        pos = 4;
    } else {
        if (text.size() < 8) {
            throw ParseError(1, "truncated graph6 size field");
        }
        for (size_t k = 2; k <= 7; k++) {
            n = (n << 6) | graph6_value(text[k]);
        }
        pos = 8;
    }
    size_t num_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    size_t expected_bytes = (num_bits + 5) / 6;
    if (text.size() - pos != expected_bytes) {
        throw ParseError(1, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                std::to_string(expected_bytes));
    }
    Graph g(n);
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            int byte = graph6_value(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph &g) {
    size_t n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }
    int acc = 0;
    int filled = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    }
    return out;
}

std::string to_edge_list(const Graph &g) {
    std::string out = std::to_string(g.num_vertices()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList:
            return parse_edge_list(text);
        case GraphFormat::Graph6:
            return from_graph6(text);
    }
    throw std::invalid_argument("unknown graph format");
}

}  // namespace graphprep
