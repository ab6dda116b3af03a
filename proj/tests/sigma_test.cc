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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "graphprep/errors.h"
#include "graphprep/gf2.h"
#include "graphprep/locmin.h"
#include "graphprep/sigma.h"
#include "support.h"

using namespace graphprep;

TEST(Sigma, Press) {
    Graph c4 = testsupport::cycle(4);
    SigmaConfig zero(4);
    EXPECT_EQ(press(c4, zero, 0), BitVec::from_indices(4, {1, 3}));
    EXPECT_EQ(press(c4, press(c4, zero, 2), 2), zero);
    Graph g = Graph::from_edges(3, {{0, 1}});
    SigmaConfig c = BitVec::from_string("101");
    EXPECT_EQ(press(g, c, 2), c);
    EXPECT_THROW(press(c4, zero, 9), OutOfRangeError);
}

TEST(Sigma, PressOrderIrrelevant) {
    std::mt19937_64 rng(2);
    for (const Graph &g : testsupport::seeded_corpus(20, 12)) {
        size_t n = g.num_vertices();
        std::vector<Vertex> order;
        for (Vertex v = 0; v < n; v++) {
            if (rng() & 1) {
                order.push_back(v);
            }
        }
        SigmaConfig start(n);
        for (Vertex v = 0; v < n; v++) {
            start.set(v, rng() & 1);
        }
        SigmaConfig a = start;
        for (Vertex v : order) {
            a = press(g, a, v);
        }
        std::shuffle(order.begin(), order.end(), rng);
        SigmaConfig b = start;
        for (Vertex v : order) {
            b = press(g, b, v);
        }
        EXPECT_EQ(a, b);
        EXPECT_EQ(press_all(g, start, BitVec::from_indices(n, order)), a);
    }
}

TEST(Sigma, SubmatrixShapes) {
    Graph c4 = testsupport::cycle(4);
    Gf2Matrix all = submatrix_a_d(c4, BitVec::from_string("1111"));
    EXPECT_EQ(all.rows(), 0u);
    Gf2Matrix none = submatrix_a_d(c4, BitVec(4));
    EXPECT_EQ(none.rows(), 4u);
    EXPECT_EQ(none.cols(), 0u);
    Gf2Matrix fig = submatrix_a_d(testsupport::sigma_example(), BitVec::from_indices(7, {4, 5, 6}));
    EXPECT_EQ(fig, Gf2Matrix::from_rows({"101", "011", "000", "110"}));
}

TEST(Sigma, Solve) {
    Graph s = testsupport::star(3);
    BitVec center = BitVec::from_indices(4, {0});
    auto zero = solve_press_outside(s, center, BitVec(1));
    ASSERT_TRUE(zero.has_value());
    EXPECT_TRUE(zero->vertices.none());
    auto one = solve_press_outside(s, center, BitVec::from_string("1"));
    ASSERT_TRUE(one.has_value());
    EXPECT_EQ(one->vertices.popcount(), 1u);
    EXPECT_FALSE(one->vertices.get(0));
    EXPECT_THROW(solve_press_outside(s, center, BitVec(2)), BadSubsetError);

    Graph fig = testsupport::sigma_example();
    BitVec d = BitVec::from_indices(7, {4, 5, 6});
    EXPECT_FALSE(solve_press_outside(fig, d, BitVec::from_string("100")).has_value());
    EXPECT_FALSE(reachable_all(fig, d));
    EXPECT_TRUE(reachable_all(fig, BitVec(7)));
    EXPECT_TRUE(reachable_all(testsupport::cycle(4), BitVec::from_indices(4, {0})));
}

TEST(Sigma, SolutionsReplay) {
    for (const Graph &g : testsupport::seeded_corpus(20, 31)) {
        size_t n = g.num_vertices();
        std::mt19937_64 rng(n);
        for (int t = 0; t < 10; t++) {
            BitVec d(n);
            for (Vertex v = 0; v < n; v++) {
                d.set(v, rng() % 3 == 0);
            }
            size_t k = d.popcount();
            BitVec target(k);
            for (size_t i = 0; i < k; i++) {
                target.set(i, rng() & 1);
            }
            auto r = solve_press_outside(g, d, target);
            if (!r) {
                EXPECT_FALSE(reachable_all(g, d));
                continue;
            }
            EXPECT_TRUE((r->vertices & d).none());
            SigmaConfig after = press_all(g, SigmaConfig(n), r->vertices);
            auto ds = d.ones();
            for (size_t i = 0; i < k; i++) {
                EXPECT_EQ(after.get(ds[i]), target.get(i));
            }
        }
    }
}

TEST(Sigma, MinimumDegreeSetsAreFullRank) {
    for (size_t n = 2; n <= 6; n++) {
        for (const Graph &g : testsupport::graphs_up_to_iso(n, true)) {
            size_t d = g.min_degree();
            if (delta_loc_exact(g).value != d) {
                continue;
            }
            for (uint64_t m = 0; m < (uint64_t{1} << n); m++) {
                if (static_cast<size_t>(std::popcount(m)) != d) {
                    continue;
                }
                BitVec ds(n);
                for (size_t v = 0; v < n; v++) {
                    ds.set(v, (m >> v) & 1);
                }
                EXPECT_TRUE(reachable_all(g, ds));
            }
        }
    }
}
