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

#include <cmath>
#include <random>

#include "graphprep/errors.h"
#include "graphprep/locmin.h"
#include "graphprep/planner.h"
#include "graphprep/verifier.h"
#include "support.h"

using namespace graphprep;
using testsupport::cycle;

namespace {

PlanRequest request(Measure m, bool unitaries, bool lc = false) {
    PlanRequest r;
    r.measure = m;
    r.allow_unitaries = unitaries;
    r.lc_optimize = lc;
    return r;
}

void expect_verified(const Schedule &s) {
    size_t k = count_random_measurements(s);
    VerifyMode mode = k <= 12 ? VerifyMode::exhaustive_mode() : VerifyMode::sampled(7, 64);
    VerificationReport r = verify(s, mode);
    EXPECT_TRUE(r.ok) << (r.failures.empty() ? "" : r.failures[0].reason);
    EXPECT_TRUE(verify_layer_disjointness(s));
    EXPECT_EQ(metrics(s), s.claims);
}

Graph random_graph(size_t n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (size_t u = 0; u < n; u++) {
        for (size_t v = u + 1; v < n; v++) {
            if (coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

}  // namespace

TEST(Metrics, CompareLex) {
    ComplexityMetrics a{0, 2, 3, 2};
    ComplexityMetrics b{0, 2, 4, 3};
    EXPECT_EQ(compare_lex(a, b, Measure::SNL), std::strong_ordering::less);
    EXPECT_EQ(compare_lex(a, a, Measure::LSN), std::strong_ordering::equal);
    ComplexityMetrics c{1, 2, 1, 1};
    ComplexityMetrics d{0, 4, 1, 1};
    EXPECT_EQ(compare_lex(c, d, Measure::NSL), std::strong_ordering::greater);
    EXPECT_EQ(compare_lex(c, d, Measure::SNL), std::strong_ordering::less);
}

TEST(Metrics, MeasureNames) {
    for (Measure m : {Measure::NSL, Measure::NLS, Measure::SNL, Measure::SLN, Measure::LNS, Measure::LSN}) {
        EXPECT_EQ(parse_measure(measure_name(m)), m);
    }
    EXPECT_THROW(parse_measure("xyz"), ParseError);
}

TEST(Planner, EdgeByEdgeUnitaryC4) {
    Schedule s = plan(cycle(4), request(Measure::SNL, true));
    EXPECT_EQ(metrics(s), (ComplexityMetrics{0, 2, 3, 2}));
    expect_verified(s);
}

TEST(Planner, EdgelessInitOnly) {
    Schedule s = plan_edge_by_edge_unitary(Graph(3), false);
    ComplexityMetrics m = metrics(s);
    EXPECT_EQ(m.n_ancilla, 0u);
    EXPECT_EQ(m.s_max, 1u);
    EXPECT_EQ(m.l_depth, 1u);
    expect_verified(s);
}

TEST(Planner, EdgeByEdgeUnitaryLcOptimize) {
    Graph k4 = testsupport::complete(4);
    Schedule s = plan_edge_by_edge_unitary(k4, true);
    ChiPrimeLoc best = chi_prime_loc(k4);
    EXPECT_LE(metrics(s).l_depth, best.value + 1);
    EXPECT_TRUE(lc_orbit(k4).contains(s.prepared_graph()));
    expect_verified(s);
}

TEST(Planner, GlobalOperatorC4) {
    for (bool u : {true, false}) {
        Schedule s = plan(cycle(4), request(Measure::LNS, u));
        ComplexityMetrics m = metrics(s);
        EXPECT_EQ(m.n_ancilla, 0u);
        EXPECT_EQ(m.s_max, 4u);
        EXPECT_EQ(m.l_content, 1u);
        expect_verified(s);
    }
}

TEST(Planner, NoAncillaMeasurement) {
    Schedule c4 = plan(cycle(4), request(Measure::NSL, false));
    EXPECT_EQ(metrics(c4).n_ancilla, 0u);
    EXPECT_EQ(metrics(c4).s_max, 2u);
    expect_verified(c4);
    Schedule grid = plan_no_ancilla_measurement(testsupport::grid(2, 3));
    EXPECT_EQ(metrics(grid).s_max, 3u);
    expect_verified(grid);
    Schedule k2 = plan_no_ancilla_measurement(testsupport::complete(2));
    EXPECT_EQ(metrics(k2).s_max, 2u);
    expect_verified(k2);
}

TEST(Planner, EdgeByEdgeMeasurement) {
    Schedule k2 = plan_edge_by_edge_measurement(testsupport::complete(2));
    EXPECT_EQ(metrics(k2).n_ancilla, 1u);
    EXPECT_EQ(metrics(k2).s_max, 2u);
    expect_verified(k2);
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Schedule s = plan_edge_by_edge_measurement(p3);
    EXPECT_LE(metrics(s).l_depth, sqrt_depth_bound(2, 3, kEdgeByEdgeDepthSlack));
    expect_verified(s);
}

TEST(Planner, EdgeByEdgeMeasurementDepthOnSparseGraphs) {
    for (uint64_t seed = 0; seed < 6; seed++) {
        Graph g = random_graph(12, 0.2, seed);
        if (g.num_edges() == 0) {
            continue;
        }
        Schedule s = plan_edge_by_edge_measurement(g);
        ComplexityMetrics m = metrics(s);
        EXPECT_EQ(m.n_ancilla, 1u);
        EXPECT_EQ(m.s_max, 2u);
        EXPECT_LE(m.l_depth, sqrt_depth_bound(g.num_edges(), 12, kEdgeByEdgeDepthSlack)) << "seed " << seed;
        expect_verified(s);
    }
}

TEST(Planner, EdgeByEdgeMeasurementDepthOnDenseGraphs) {
    for (uint64_t seed = 0; seed < 4; seed++) {
        Graph g = random_graph(12, 0.5, seed);
        Schedule s = plan_edge_by_edge_measurement(g);
        EXPECT_LE(metrics(s).l_depth, sqrt_depth_bound(g.num_edges(), 12, kEdgeByEdgeDepthSlack)) << "seed " << seed;
    }
}

TEST(Planner, ConstantDepth) {
    Schedule c4 = plan_constant_depth(cycle(4), true);
    EXPECT_EQ(metrics(c4).n_ancilla, 0u);
    EXPECT_LE(metrics(c4).l_depth, 4u);
    expect_verified(c4);
    Graph k5 = testsupport::complete(5);
    ExpansionRecord r = expand_to_max_degree_3(k5);
    for (bool u : {true, false}) {
        Schedule s = plan_constant_depth(k5, u);
        ComplexityMetrics m = metrics(s);
        EXPECT_EQ(m.s_max, 2u);
        EXPECT_LE(m.l_depth, kConstantDepthLayers);
        if (u) {
            EXPECT_EQ(m.n_ancilla, r.num_added_vertices());
            EXPECT_LE(m.n_ancilla, 30u);
        }
        expect_verified(s);
    }
}

TEST(Planner, ConstantDepthLeafNeedsNoAncilla) {
    Schedule k2 = plan_constant_depth(testsupport::complete(2), false);
    EXPECT_EQ(metrics(k2).n_ancilla, 0u);
    EXPECT_EQ(metrics(k2).s_max, 2u);
    expect_verified(k2);
    Schedule star = plan_constant_depth(testsupport::star(3), false);
    EXPECT_EQ(metrics(star).n_ancilla, 0u);
    expect_verified(star);
}

TEST(Planner, AllCombinationsVerify) {
    std::vector<Graph> graphs = {cycle(4), testsupport::complete(2), testsupport::star(4), testsupport::grid(2, 3)};
    for (const Graph &g : testsupport::seeded_corpus(4, 5)) {
        graphs.push_back(g);
    }
    for (const Graph &g : graphs) {
        for (Measure m : {Measure::NSL, Measure::NLS, Measure::SNL, Measure::SLN, Measure::LNS, Measure::LSN}) {
            for (bool u : {true, false}) {
                for (bool lc : {false, true}) {
                    Schedule s = plan(g, request(m, u, lc));
                    SCOPED_TRACE(std::string(measure_name(m)) + (u ? " unitary" : " measurement") +
                                 (lc ? " lc" : ""));
                    EXPECT_EQ(apply_lc_sequence(g, s.lc_prefix), s.prepared_graph());
                    expect_verified(s);
                }
            }
        }
    }
}

TEST(Planner, NoAncillaSizeIsDeltaLocPlusOne) {
    for (const Graph &g : testsupport::seeded_corpus(15, 19)) {
        Schedule s = plan_no_ancilla_measurement(g);
        EXPECT_EQ(metrics(s).s_max, delta_loc_exact(g).value + 1);
        EXPECT_EQ(metrics(s).n_ancilla, 0u);
    }
}
