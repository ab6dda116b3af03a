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

#include "graphprep/edge_coloring.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "graphprep/errors.h"

namespace graphprep {

namespace {

constexpr int kUncolored = -1;

/// Partial coloring stored as a dense vertex x vertex table.
class ColorTable {
   public:
    ColorTable(const Graph &g, size_t palette) : g_(g), n_(g.num_vertices()), palette_(palette), c_(n_ * n_, kUncolored) {
    }

    int get(Vertex u, Vertex v) const {
        return c_[u * n_ + v];
    }
    void put(Vertex u, Vertex v, int color) {
        c_[u * n_ + v] = color;
        c_[v * n_ + u] = color;
    }
    bool is_free(Vertex x, int color) const {
        for (Vertex y : g_.neighbors(x).ones()) {
            if (get(x, y) == color) {
                return false;
            }
        }
        return true;
    }
    int any_free(Vertex x) const {
        for (size_t c = 0; c < palette_; c++) {
            if (is_free(x, static_cast<int>(c))) {
                return static_cast<int>(c);
            }
        }
        throw std::logic_error("no free color within Delta+1 palette");
    }
    /// Neighbor of x along an edge of the given color, if any.
    std::optional<Vertex> along(Vertex x, int color) const {
        for (Vertex y : g_.neighbors(x).ones()) {
            if (get(x, y) == color) {
                return y;
            }
        }
        return std::nullopt;
    }

    /// Colors the uncolored edge (x, f) with the Misra-Gries fan procedure.
    void misra_gries(Vertex x, Vertex f) {
        std::vector<Vertex> fan{f};
        std::vector<bool> in_fan(n_, false);
        in_fan[f] = true;
        while (true) {
            Vertex last = fan.back();
            bool grown = false;
            for (Vertex z : g_.neighbors(x).ones()) {
                int cz = get(x, z);
                if (!in_fan[z] && cz != kUncolored && is_free(last, cz)) {
                    fan.push_back(z);
                    in_fan[z] = true;
                    grown = true;
                    break;
                }
            }
            if (!grown) {
                break;
            }
        }
        int c = any_free(x);
        int d = any_free(fan.back());
        if (c != d) {
            // Swap c and d along the alternating path leaving x on color d.
            std::vector<std::pair<Vertex, Vertex>> path;
            Vertex cur = x;
            int want = d;
            std::vector<bool> seen(n_, false);
            seen[x] = true;
            while (auto nxt = along(cur, want)) {
                path.emplace_back(cur, *nxt);
                if (seen[*nxt]) {
                    break;
                }
                seen[*nxt] = true;
                cur = *nxt;
                want = want == d ? c : d;
            }
            for (auto [a, b] : path) {
                put(a, b, get(a, b) == d ? c : d);
            }
        }
        size_t w_index = fan.size();
        for (size_t i = 0; i < fan.size(); i++) {
            if (i > 0) {
                int ci = get(x, fan[i]);
                if (ci == kUncolored || !is_free(fan[i - 1], ci)) {
                    break;
                }
            }
            if (is_free(fan[i], d)) {
                w_index = i;
                break;
            }
        }
        if (w_index == fan.size()) {
            throw std::logic_error("Misra-Gries rotation point not found");
        }
        for (size_t i = 0; i < w_index; i++) {
            put(x, fan[i], get(x, fan[i + 1]));
        }
        put(x, fan[w_index], d);
    }

   private:
    const Graph &g_;
    size_t n_;
    size_t palette_;
    std::vector<int> c_;
};

EdgeColoring finish(const Graph &g, std::vector<Edge> edges, std::vector<size_t> colors) {
    // Renumber colors to 0..k-1 in order of first use.
    std::vector<size_t> remap;
    std::vector<size_t> seen_as;
    EdgeColoring out;
    out.edges = std::move(edges);
    out.color.resize(out.edges.size());
    for (size_t i = 0; i < out.edges.size(); i++) {
        size_t c = colors[i];
        if (c >= remap.size()) {
            remap.resize(c + 1, static_cast<size_t>(-1));
        }
        if (remap[c] == static_cast<size_t>(-1)) {
            remap[c] = out.num_colors++;
        }
        out.color[i] = remap[c];
    }
    (void)g;
    return out;
}

EdgeColoring greedy_coloring(const Graph &g) {
    std::vector<Edge> edges = g.edges();
    if (edges.empty()) {
        return {};
    }
    size_t palette = g.max_degree() + 1;
    std::vector<size_t> order(edges.size());
    for (size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    auto key = [&](size_t i) {
        size_t du = g.degree(edges[i].first);
        size_t dv = g.degree(edges[i].second);
        return std::make_pair(std::max(du, dv), du + dv);
    };
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return key(a) > key(b);
    });

    ColorTable table(g, palette);
    std::vector<Edge> deferred;
    for (size_t i : order) {
        auto [u, v] = edges[i];
        int chosen = kUncolored;
        for (size_t c = 0; c < palette; c++) {
            if (table.is_free(u, static_cast<int>(c)) && table.is_free(v, static_cast<int>(c))) {
                chosen = static_cast<int>(c);
                break;
            }
        }
        if (chosen == kUncolored) {
            deferred.push_back(edges[i]);
        } else {
            table.put(u, v, chosen);
        }
    }
    for (auto [u, v] : deferred) {
        table.misra_gries(u, v);
    }
    std::vector<size_t> colors(edges.size());
    for (size_t i = 0; i < edges.size(); i++) {
        colors[i] = static_cast<size_t>(table.get(edges[i].first, edges[i].second));
    }
    return finish(g, std::move(edges), std::move(colors));
}

/// Backtracking search for a proper coloring with `k` colors.
bool search_k_coloring(const Graph &g, const std::vector<Edge> &edges, size_t k, std::vector<size_t> &colors) {
    size_t n = g.num_vertices();
    std::vector<uint64_t> used(n, 0);
    colors.assign(edges.size(), 0);

    // Order edges so each one shares an endpoint with an earlier one where possible.
    std::vector<size_t> order;
    std::vector<bool> placed(edges.size(), false);
    std::vector<bool> touched(n, false);
    while (order.size() < edges.size()) {
        size_t best = edges.size();
        size_t best_score = 0;
        for (size_t i = 0; i < edges.size(); i++) {
            if (placed[i]) {
                continue;
            }
            size_t score = 1 + (touched[edges[i].first] ? 2 : 0) + (touched[edges[i].second] ? 2 : 0) +
                           g.degree(edges[i].first) + g.degree(edges[i].second);
            if (best == edges.size() || score > best_score) {
                best = i;
                best_score = score;
            }
        }
        placed[best] = true;
        touched[edges[best].first] = touched[edges[best].second] = true;
        order.push_back(best);
    }

    std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t max_used) -> bool {
        if (pos == order.size()) {
            return true;
        }
        auto [u, v] = edges[order[pos]];
        size_t limit = std::min(k, max_used + 1);
        for (size_t c = 0; c < limit; c++) {
            uint64_t bit = uint64_t{1} << c;
            if ((used[u] | used[v]) & bit) {
                continue;
            }
            used[u] |= bit;
            used[v] |= bit;
            colors[order[pos]] = c;
            if (rec(pos + 1, std::max(max_used, c + 1))) {
                return true;
            }
            used[u] &= ~bit;
            used[v] &= ~bit;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

size_t EdgeColoring::color_of(Vertex u, Vertex v) const {
    Edge key = u < v ? Edge{u, v} : Edge{v, u};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) {
        throw OutOfRangeError("edge not present in coloring");
    }
    return color[static_cast<size_t>(it - edges.begin())];
}

std::vector<std::vector<Edge>> EdgeColoring::classes() const {
    std::vector<std::vector<Edge>> out(num_colors);
    for (size_t i = 0; i < edges.size(); i++) {
        out[color[i]].push_back(edges[i]);
    }
    return out;
}

EdgeColoring edge_coloring(const Graph &g, bool exact, size_t max_exact_edges) {
    EdgeColoring greedy = greedy_coloring(g);
    if (!exact) {
        return greedy;
    }
    size_t m = g.num_edges();
    if (m > max_exact_edges) {
        throw TooLargeError("exact edge coloring limited to " + std::to_string(max_exact_edges) + " edges, graph has " +
                            std::to_string(m));
    }
    size_t delta = g.max_degree();
    if (greedy.num_colors <= delta) {
        return greedy;
    }
    std::vector<size_t> colors;
    if (search_k_coloring(g, greedy.edges, delta, colors)) {
        return finish(g, greedy.edges, std::move(colors));
    }
    return greedy;
}

bool is_proper_coloring(const Graph &g, const EdgeColoring &coloring) {
    if (coloring.edges != g.edges() || coloring.color.size() != coloring.edges.size()) {
        return false;
    }
    size_t n = g.num_vertices();
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(coloring.num_colors, false));
    for (size_t i = 0; i < coloring.edges.size(); i++) {
        size_t c = coloring.color[i];
        if (c >= coloring.num_colors) {
            return false;
        }
        auto [u, v] = coloring.edges[i];
        if (seen[u][c] || seen[v][c]) {
            return false;
        }
        seen[u][c] = seen[v][c] = true;
    }
    return true;
}

}  // namespace graphprep
