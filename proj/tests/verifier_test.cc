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

#include "graphprep/errors.h"
#include "graphprep/gadget.h"
#include "graphprep/planner.h"
#include "graphprep/schedule_json.h"
#include "graphprep/verifier.h"
#include "support.h"

using namespace graphprep;

namespace {

ScheduleOp alloc(std::vector<size_t> q, size_t layer) {
    ScheduleOp op;
    op.kind = OpKind::AllocAncillaPlus;
    op.qubits = std::move(q);
    op.layer = layer;
    return op;
}

ScheduleOp cz(size_t a, size_t b, size_t layer) {
    ScheduleOp op;
    op.kind = OpKind::Unitary;
    op.gate = GateName::CZ;
    op.qubits = {a, b};
    op.layer = layer;
    return op;
}

Schedule k3_schedule(size_t wrong_a, size_t wrong_b) {
    Schedule s;
    s.target = testsupport::complete(3);
    s.ops = {alloc({0}, 0), alloc({1}, 0), alloc({2}, 0), cz(0, 1, 1), cz(1, 2, 2), cz(wrong_a, wrong_b, 3)};
    finalize_schedule(s);
    return s;
}

}  // namespace

TEST(Verifier, AcceptsHandBuiltSchedule) {
    VerificationReport r = verify(k3_schedule(0, 2), VerifyMode::exhaustive_mode());
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.branches_checked, 1u);
    EXPECT_EQ(r.measured_metrics, (ComplexityMetrics{0, 2, 4, 3}));
}

TEST(Verifier, RejectsWrongPair) {
    Schedule s = k3_schedule(0, 1);
    VerificationReport r = verify(s, VerifyMode::exhaustive_mode());
    EXPECT_FALSE(r.ok);
    ASSERT_FALSE(r.failures.empty());
}

TEST(Verifier, RejectsTamperedClaims) {
    Schedule s = k3_schedule(0, 2);
    s.claims.l_depth += 1;
    VerificationReport r = verify(s, VerifyMode::exhaustive_mode());
    EXPECT_FALSE(r.ok);
}

TEST(Verifier, RejectsBadLcPrefix) {
    Schedule s = plan_edge_by_edge_unitary(testsupport::cycle(4), false);
    s.lc_prefix.steps = {0};
    EXPECT_FALSE(verify(s, VerifyMode::exhaustive_mode()).ok);
}

TEST(Verifier, LayerDisjointness) {
    Schedule s = k3_schedule(0, 2);
    EXPECT_TRUE(verify_layer_disjointness(s));
    s.ops[4].layer = s.ops[3].layer;
    EXPECT_FALSE(verify_layer_disjointness(s));
    EXPECT_FALSE(verify(s, VerifyMode::exhaustive_mode()).ok);
}

TEST(Verifier, ExhaustiveCountsBranches) {
    Schedule s = plan_edge_by_edge_measurement(testsupport::cycle(4));
    size_t k = count_random_measurements(s);
    ASSERT_LE(k, 20u);
    VerificationReport r = verify(s, VerifyMode::exhaustive_mode());
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.branches_checked, size_t{1} << k);
    EXPECT_EQ(r.random_measurements, k);
    Budgets tight;
    tight.max_exhaustive_measurements = 0;
    if (k > 0) {
        EXPECT_THROW(verify(s, VerifyMode::exhaustive_mode(), tight), BudgetExceededError);
    }
}

TEST(Verifier, DroppedCorrectionCaught) {
    Schedule s = plan_edge_by_edge_measurement(testsupport::cycle(4));
    for (size_t i = 0; i < s.ops.size(); i++) {
        if (s.ops[i].kind == OpKind::PauliCorrect) {
            Schedule t = s;
            t.ops.erase(t.ops.begin() + static_cast<long>(i));
            EXPECT_FALSE(verify(t, VerifyMode::exhaustive_mode()).ok) << "op " << i;
        }
    }
}

TEST(Verifier, InitialStateMustBeErased) {
    Schedule idle;
    idle.target = Graph(1);
    idle.initial_qubits = 1;
    finalize_schedule(idle);
    EXPECT_FALSE(verify(idle, VerifyMode::exhaustive_mode()).ok);

    Schedule reset = idle;
    reset.ops = {single_measure(0, 'X'), pauli_correct({0}, 'Z', {0})};
    finalize_schedule(reset);
    EXPECT_TRUE(verify(reset, VerifyMode::exhaustive_mode()).ok);
}

TEST(Verifier, ReportJson) {
    VerificationReport r = verify(k3_schedule(0, 2), VerifyMode::sampled(3, 4));
    Json j = report_to_json(r);
    EXPECT_TRUE(j.at("ok").get<bool>());
    EXPECT_EQ(j.at("exhaustive").get<bool>(), false);
}

TEST(ScheduleJson, RoundTrip) {
    for (const Graph &g : testsupport::seeded_corpus(6, 2)) {
        for (Measure m : {Measure::NSL, Measure::SNL, Measure::SLN, Measure::LNS}) {
            for (bool u : {true, false}) {
                PlanRequest req;
                req.measure = m;
                req.allow_unitaries = u;
                Schedule s = plan(g, req);
                Json j = schedule_to_json(s);
                Schedule back = schedule_from_string(j.dump());
                EXPECT_EQ(back.ops, s.ops);
                EXPECT_EQ(back.target, s.target);
                EXPECT_EQ(back.lc_prefix, s.lc_prefix);
                EXPECT_EQ(back.claims, s.claims);
                EXPECT_EQ(back.initial_qubits, s.initial_qubits);
                EXPECT_EQ(schedule_to_json(back).dump(), j.dump());
            }
        }
    }
}

TEST(ScheduleJson, KeyOrder) {
    Json j = schedule_to_json(k3_schedule(0, 2));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"target", "initial_qubits", "lc_prefix", "ops", "metrics"}));
}

TEST(ScheduleJson, Malformed) {
    EXPECT_THROW(schedule_from_string("{"), ParseError);
    EXPECT_THROW(schedule_from_string("[]"), ParseError);
    EXPECT_THROW(schedule_from_string(R"({"target":"A_","lc_prefix":[]})"), ParseError);
}
