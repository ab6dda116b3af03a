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
#include "graphprep/pauli.h"
#include "graphprep/stabilizer.h"
#include "support.h"

using namespace graphprep;

namespace {

PauliString P(const char *s) {
    return PauliString::from_string(s);
}

/// Graph g plus a vertex n attached to `nbrs`.
Graph attach(const Graph &g, const std::vector<size_t> &nbrs) {
    Graph h(g.num_vertices() + 1);
    for (auto [u, v] : g.edges()) {
        h.add_edge(u, v);
    }
    for (size_t u : nbrs) {
        h.add_edge(u, g.num_vertices());
    }
    return h;
}

}  // namespace

TEST(Pauli, ParseAndPrint) {
    EXPECT_EQ(P("+XZIY").str(), "+XZIY");
    EXPECT_EQ(P("XX").str(), "+XX");
    EXPECT_EQ(P("-Z_Z").str(), "-ZIZ");
    EXPECT_EQ(P("+XZIY").weight(), 3u);
    EXPECT_THROW(P("+XQ"), ParseError);
}

TEST(Pauli, Products) {
    PauliString a = P("X");
    a *= P("X");
    EXPECT_TRUE(a.is_identity());
    PauliString x = P("X");
    EXPECT_EQ(x.right_mul_log_i(P("Z")), 3);  // XZ = -iY
    PauliString z = P("Z");
    EXPECT_EQ(z.right_mul_log_i(P("X")), 1);  // ZX = iY
    PauliString xx = P("XX");
    xx *= P("ZZ");
    EXPECT_EQ(xx.str(), "-YY");
    EXPECT_THROW(P("X") *= P("Z"), SimulationError);
    EXPECT_TRUE(P("XX").commutes(P("ZZ")));
    EXPECT_FALSE(P("XI").commutes(P("ZI")));
}

TEST(Stabilizer, PaperExampleDisplay) {
    StabilizerState s = graph_state(testsupport::cycle(4));
    EXPECT_EQ(s.str(), "+XZIZ\n+ZXZI\n+IZXZ\n+ZIZX");
}

TEST(Stabilizer, SmallGraphStates) {
    EXPECT_EQ(graph_state(Graph(2)).str(), "+XI\n+IX");
    EXPECT_EQ(graph_state(testsupport::complete(2)).str(), "+XZ\n+ZX");
}

TEST(Stabilizer, CzTogglesEdges) {
    StabilizerState s = graph_state(Graph(2));
    s.apply_cz(0, 1);
    EXPECT_TRUE(equals_graph_state(s, testsupport::complete(2)));
    s.apply_cz(0, 1);
    EXPECT_TRUE(equals_graph_state(s, Graph(2)));
    EXPECT_THROW(s.apply_cz(1, 1), SameQubitError);
    std::mt19937_64 rng(4);
    for (const Graph &g : testsupport::seeded_corpus(20, 8)) {
        size_t n = g.num_vertices();
        size_t a = rng() % n;
        size_t b = (a + 1 + rng() % (n - 1)) % n;
        StabilizerState t = graph_state(g);
        t.apply_cz(a, b);
        Graph h = g;
        h.toggle_edge(a, b);
        EXPECT_TRUE(equals_graph_state(t, h));
    }
}

TEST(Stabilizer, LocalGates) {
    Graph g = testsupport::cycle(5);
    StabilizerState s = graph_state(g);
    s.apply_gate(LocalGate::X, 0);
    for (size_t v = 0; v < 5; v++) {
        EXPECT_EQ(s.generators()[v].sign, g.has_edge(0, v));
    }
    StabilizerState t = graph_state(g);
    t.apply_gate(LocalGate::Z, 2);
    t.apply_gate(LocalGate::Z, 2);
    EXPECT_EQ(t, graph_state(g));
    t.apply_gate(LocalGate::H, 3);
    t.apply_gate(LocalGate::H, 3);
    EXPECT_EQ(t, graph_state(g));
    EXPECT_THROW(t.apply_gate(LocalGate::H, 9), OutOfRangeError);
    EXPECT_EQ(parse_local_gate("S"), LocalGate::S);
    EXPECT_EQ(local_gate_name(LocalGate::Y), "Y");
}

TEST(Stabilizer, MeasureExamples) {
    Graph g = testsupport::cycle(4);
    StabilizerState s = graph_state(g);
    MeasureResult r = s.measure(s.generators()[1]);
    EXPECT_TRUE(r.deterministic);
    EXPECT_FALSE(r.outcome);
    EXPECT_EQ(s, graph_state(g));
    EXPECT_THROW(s.measure(P("-XZIZ"), false), ForcedImpossibleError);
    EXPECT_NO_THROW(s.measure(P("-XZIZ"), true));

    StabilizerState a = StabilizerState::plus(1);
    MeasureResult z = a.measure(P("Z"), false);
    EXPECT_FALSE(z.deterministic);
    EXPECT_EQ(a.str(), "+Z");
}

TEST(Stabilizer, AgreesWithStateVector) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + trial % 5;
        StabilizerState s = StabilizerState::zeros(n);
        testsupport::StateVector sv(n);
        for (int step = 0; step < 25; step++) {
            size_t q = rng() % n;
            switch (rng() % 7) {
                case 0:
                    s.apply_gate(LocalGate::H, q);
                    sv.h(q);
                    break;
                case 1:
                    s.apply_gate(LocalGate::S, q);
                    sv.s(q);
                    break;
                case 2:
                    s.apply_gate(LocalGate::X, q);
                    sv.x(q);
                    break;
                case 3:
                    s.apply_gate(LocalGate::Z, q);
                    sv.z(q);
                    break;
                case 4:
                    if (n > 1) {
                        size_t b = (q + 1 + rng() % (n - 1)) % n;
                        s.apply_cz(q, b);
                        sv.cz(q, b);
                    }
                    break;
                default: {
                    PauliString obs(n);
                    for (size_t k = 0; k < n; k++) {
                        obs.xs.set(k, rng() & 1);
                        obs.zs.set(k, rng() & 1);
                    }
                    if (obs.is_identity()) {
                        break;
                    }
                    bool want = rng() & 1;
                    bool random = s.is_random(obs);
                    MeasureResult r = s.measure(obs, random ? std::optional<bool>(want) : std::nullopt);
                    EXPECT_EQ(r.deterministic, !random);
                    double p = sv.project(obs, r.outcome);
                    if (random) {
                        EXPECT_NEAR(p, 0.5, 1e-9);
                        EXPECT_EQ(r.outcome, want);
                    } else {
                        EXPECT_NEAR(p, 1.0, 1e-9);
                    }
                }
            }
            ASSERT_TRUE(s.is_valid());
        }
        for (const PauliString &gen : s.generators()) {
            EXPECT_NEAR(sv.expectation(gen), 1.0, 1e-9) << gen.str();
        }
    }
}

TEST(Stabilizer, Decompose) {
    StabilizerState s = graph_state(testsupport::cycle(4));
    PauliString prod = s.generators()[0];
    prod *= s.generators()[2];
    auto d = s.decompose(prod);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->first, BitVec::from_indices(4, {0, 2}));
    EXPECT_FALSE(d->second);
    EXPECT_FALSE(s.decompose(P("ZIII")).has_value());
}

TEST(Stabilizer, Discard) {
    StabilizerState s = graph_state(testsupport::cycle(4));
    s.add_qubit_plus();
    s.discard(4);
    EXPECT_TRUE(equals_graph_state(s, testsupport::cycle(4)));
    StabilizerState t = graph_state(testsupport::cycle(4));
    EXPECT_THROW(t.discard(0), SimulationError);
    t.measure(P("ZIII"), true);
    t.discard(0);
    EXPECT_EQ(t.num_qubits(), 3u);
    EXPECT_TRUE(t.is_valid());
}

TEST(LpEquivalence, Examples) {
    Graph g = testsupport::cycle(5);
    auto id = lp_equivalent_to(graph_state(g), g);
    ASSERT_TRUE(id.has_value());
    EXPECT_TRUE(id->is_identity());
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; t++) {
        StabilizerState s = graph_state(g);
        PauliString p(5);
        for (size_t k = 0; k < 5; k++) {
            p.xs.set(k, rng() & 1);
            p.zs.set(k, rng() & 1);
        }
        s.apply_pauli(p);
        auto c = lp_equivalent_to(s, g);
        ASSERT_TRUE(c.has_value());
        s.apply_pauli(*c);
        EXPECT_TRUE(equals_graph_state(s, g));
    }
    EXPECT_FALSE(lp_equivalent_to(graph_state(g), testsupport::complete(5)).has_value());
    EXPECT_THROW(lp_equivalent_to(graph_state(g), Graph(4)), SizeMismatchError);
}

TEST(LpEquivalence, VertexAttachSmallGraphs) {
    for (size_t n = 1; n <= 4; n++) {
        for (const Graph &g : testsupport::all_labeled_graphs(n)) {
            for (uint64_t nb = 0; nb < (uint64_t{1} << n); nb++) {
                std::vector<size_t> nbrs;
                for (size_t v = 0; v < n; v++) {
                    if ((nb >> v) & 1) {
                        nbrs.push_back(v);
                    }
                }
                Graph want = attach(g, nbrs);
                for (int branch = 0; branch < 4; branch++) {
                    StabilizerState s = graph_state(g);
                    size_t v = s.add_qubit_plus();
                    s.measure(PauliString::single(n + 1, v, 'Z'), branch & 1);
                    s.measure(PauliString::x_z(n + 1, v, BitVec::from_indices(n + 1, nbrs)), branch >> 1);
                    ASSERT_TRUE(lp_equivalent_to(s, want).has_value());
                }
            }
        }
    }
}

TEST(Contraction, RoundTrip) {
    EXPECT_EQ(contract_by_x_measurements(graph_state(testsupport::cycle(4)), {}),
              graph_state(testsupport::cycle(4)));
    std::mt19937_64 rng(12);
    std::vector<Graph> inputs = {testsupport::star(4), testsupport::complete(5)};
    for (const Graph &g : testsupport::seeded_corpus(40, 13)) {
        if (g.num_vertices() <= 6) {
            inputs.push_back(g);
        }
    }
    for (const Graph &g : inputs) {
        ExpansionRecord r = expand_to_max_degree_3(g);
        StabilizerState s = contract_by_x_measurements(graph_state(r.expanded), r.added, [&] {
            return static_cast<bool>(rng() & 1);
        });
        EXPECT_TRUE(lp_equivalent_to(s, g).has_value());
    }
}
