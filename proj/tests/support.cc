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
#include "support.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace testsupport {

namespace {

/// Canonical code: the largest upper-triangle bit string over relabelings
/// that list vertices by nonincreasing degree.
uint64_t canonical_code(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<std::pair<size_t, size_t>> blocks;
    for (size_t i = 0; i < n;) {
        size_t j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i])) {
            j++;
        }
        blocks.emplace_back(i, j);
        i = j;
    }
    uint64_t best = 0;
    bool first = true;
    std::vector<size_t> perm = order;
    auto code = [&]() {
        uint64_t c = 0;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                c = (c << 1) | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
            }
        }
        return c;
    };
    // Odometer over per-block permutations.
    for (auto [a, b] : blocks) {
        std::sort(perm.begin() + a, perm.begin() + b);
    }
    while (true) {
        uint64_t c = code();
        if (first || c > best) {
            best = c;
            first = false;
        }
        size_t k = 0;
        for (; k < blocks.size(); k++) {
            auto [a, b] = blocks[k];
            if (std::next_permutation(perm.begin() + a, perm.begin() + b)) {
                break;
            }
        }
        if (k == blocks.size()) {
            break;
        }
    }
    return best;
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(size_t n, bool connected_only) {
    if (n > 7) {
        throw std::invalid_argument("enumeration limited to 7 vertices");
    }
    std::vector<Graph> level{Graph(0)};
    for (size_t k = 1; k <= n; k++) {
        std::vector<Graph> next;
        std::unordered_set<uint64_t> seen;
        for (const Graph &g : level) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << (k - 1)); mask++) {
                Graph h(k);
                for (auto [u, v] : g.edges()) {
                    h.add_edge(u, v);
                }
                for (size_t u = 0; u + 1 < k; u++) {
                    if ((mask >> u) & 1) {
                        h.add_edge(u, k - 1);
                    }
                }
                if (seen.insert(canonical_code(h)).second) {
                    next.push_back(std::move(h));
                }
            }
        }
        level = std::move(next);
    }
    if (connected_only) {
        std::erase_if(level, [](const Graph &g) {
            return !g.is_connected();
        });
    }
    return level;
}

std::vector<Graph> all_labeled_graphs(size_t n) {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t u = 0; u < n; u++) {
        for (size_t v = u + 1; v < n; v++) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); mask++) {
        Graph g(n);
        for (size_t i = 0; i < pairs.size(); i++) {
            if ((mask >> i) & 1) {
                g.add_edge(pairs[i].first, pairs[i].second);
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> seeded_corpus(size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> size(2, 10);
    std::bernoulli_distribution coin(0.5);
    std::vector<Graph> out;
    while (out.size() < count) {
        size_t n = size(rng);
        Graph g(n);
        for (size_t u = 0; u < n; u++) {
            for (size_t v = u + 1; v < n; v++) {
                if (coin(rng)) {
                    g.add_edge(u, v);
                }
            }
        }
        if (g.is_connected()) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

Graph cycle(size_t n) {
    Graph g(n);
    for (size_t v = 0; v < n; v++) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

Graph grid(size_t rows, size_t cols) {
    Graph g(rows * cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            size_t v = r * cols + c;
            if (c + 1 < cols) {
                g.add_edge(v, v + 1);
            }
            if (r + 1 < rows) {
                g.add_edge(v, v + cols);
            }
        }
    }
    return g;
}

Graph complete(size_t n) {
    Graph g(n);
    for (size_t u = 0; u < n; u++) {
        for (size_t v = u + 1; v < n; v++) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph star(size_t leaves) {
    Graph g(leaves + 1);
    for (size_t v = 1; v <= leaves; v++) {
        g.add_edge(0, v);
    }
    return g;
}

Graph sigma_example() {
    const int m[4][3] = {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}, {1, 1, 0}};
    Graph g(7);
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 3; c++) {
            if (m[r][c]) {
                g.add_edge(r, 4 + c);
            }
        }
    }
    return g;
}

size_t orbit_min_degree(const Graph &g) {
    size_t n = g.num_vertices();
    // Adjacency as a vector of row sets; LC done edge by edge.
    using Adj = std::vector<std::vector<bool>>;
    Adj start(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) {
        start[u][v] = start[v][u] = true;
    }
    std::set<Adj> seen{start};
    std::deque<Adj> queue{start};
    size_t best = n;
    while (!queue.empty()) {
        Adj a = queue.front();
        queue.pop_front();
        for (size_t v = 0; v < n; v++) {
            best = std::min<size_t>(best, std::count(a[v].begin(), a[v].end(), true));
        }
        for (size_t v = 0; v < n; v++) {
            Adj b = a;
            for (size_t x = 0; x < n; x++) {
                for (size_t y = 0; y < n; y++) {
                    if (x != y && a[v][x] && a[v][y]) {
                        b[x][y] = !a[x][y];
                    }
                }
            }
            if (seen.insert(b).second) {
                queue.push_back(std::move(b));
            }
        }
    }
    return best;
}

size_t span_rank(const std::vector<std::vector<int>> &rows) {
    std::set<std::vector<int>> span;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << rows.size()); mask++) {
        std::vector<int> acc(cols, 0);
        for (size_t r = 0; r < rows.size(); r++) {
            if ((mask >> r) & 1) {
                for (size_t c = 0; c < cols; c++) {
                    acc[c] ^= rows[r][c];
                }
            }
        }
        span.insert(acc);
    }
    return static_cast<size_t>(std::bit_width(span.size()) - 1);
}

Graph decode_graph6(const std::string &s) {
    size_t n = static_cast<size_t>(s.at(0) - 63);
    Graph g(n);
    size_t bit = 0;
    for (size_t v = 1; v < n; v++) {
        for (size_t u = 0; u < v; u++, bit++) {
            int byte = s.at(1 + bit / 6) - 63;
            if ((byte >> (5 - bit % 6)) & 1) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

StateVector::StateVector(size_t n) : n_(n), amp_(size_t{1} << n, 0.0) {
    amp_[0] = 1.0;
}

void StateVector::h(size_t q) {
    const double r = 1.0 / std::sqrt(2.0);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amp_.size(); i++) {
        if (!(i & bit)) {
            auto a = amp_[i];
            auto b = amp_[i | bit];
            amp_[i] = r * (a + b);
            amp_[i | bit] = r * (a - b);
        }
    }
}

void StateVector::s(size_t q) {
    for (size_t i = 0; i < amp_.size(); i++) {
        if ((i >> q) & 1) {
            amp_[i] *= std::complex<double>(0, 1);
        }
    }
}

void StateVector::x(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amp_.size(); i++) {
        if (!(i & bit)) {
            std::swap(amp_[i], amp_[i | bit]);
        }
    }
}

void StateVector::z(size_t q) {
    for (size_t i = 0; i < amp_.size(); i++) {
        if ((i >> q) & 1) {
            amp_[i] = -amp_[i];
        }
    }
}

void StateVector::cz(size_t a, size_t b) {
    for (size_t i = 0; i < amp_.size(); i++) {
        if (((i >> a) & 1) && ((i >> b) & 1)) {
            amp_[i] = -amp_[i];
        }
    }
}

std::vector<std::complex<double>> StateVector::apply(const graphprep::PauliString &p) const {
    // P = sign * prod_q (X^x Z^z), with Y written as i X Z.
    std::vector<std::complex<double>> out(amp_.size(), 0.0);
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    int ys = 0;
    for (size_t q = 0; q < n_; q++) {
        bool x = p.xs.get(q);
        bool z = p.zs.get(q);
        xmask |= uint64_t{x} << q;
        zmask |= uint64_t{z} << q;
        ys += x && z;
    }
    std::complex<double> phase = p.sign ? -1.0 : 1.0;
    for (int k = 0; k < ys; k++) {
        phase *= std::complex<double>(0, 1);
    }
    for (size_t i = 0; i < amp_.size(); i++) {
        // Z acts first, then X.
        double zsign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
        out[i ^ xmask] += phase * zsign * amp_[i];
    }
    return out;
}

double StateVector::project(const graphprep::PauliString &p, bool outcome) {
    auto pa = apply(p);
    double sgn = outcome ? -1.0 : 1.0;
    double norm = 0;
    for (size_t i = 0; i < amp_.size(); i++) {
        amp_[i] = 0.5 * (amp_[i] + sgn * pa[i]);
        norm += std::norm(amp_[i]);
    }
    if (norm > 1e-12) {
        for (auto &a : amp_) {
            a /= std::sqrt(norm);
        }
    }
    return norm;
}

double StateVector::expectation(const graphprep::PauliString &p) const {
    auto pa = apply(p);
    std::complex<double> e = 0;
    for (size_t i = 0; i < amp_.size(); i++) {
        e += std::conj(amp_[i]) * pa[i];
    }
    return e.real();
}

}  // namespace testsupport
