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
#include "graphprep/verifier.h"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

#include "graphprep/errors.h"
#include "graphprep/gf2.h"

namespace graphprep {

namespace {

/// Qubit ids of the hidden partners that purify the initial qubits.
constexpr size_t kReferenceId = std::numeric_limits<size_t>::max() / 2;

/// Initial qubits 0..n-1, each maximally entangled with partner n + q, then
/// scrambled by seeded local Cliffords. Every initial qubit looks maximally
/// mixed, so a schedule passes only if it works for every input state.
StabilizerState purified_initial_state(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g(2 * n);
    for (size_t q = 0; q < n; q++) {
        g.add_edge(q, n + q);
    }
    StabilizerState s = graph_state(g);
    for (size_t q = 0; q < n; q++) {
        s.apply_gate(LocalGate::H, n + q);
        for (int k = 0; k < 3; k++) {
            s.apply_gate((rng() & 1) ? LocalGate::H : LocalGate::S, q);
        }
        if (rng() & 1) {
            s.apply_gate(LocalGate::X, q);
        }
    }
    return s;
}

/// Outcome bits for random measurements, in the order they are requested.
struct BranchSource {
    virtual ~BranchSource() = default;
    virtual bool next() = 0;
};

struct FixedBranch : BranchSource {
    uint64_t bits;
    size_t pos = 0;
    explicit FixedBranch(uint64_t b) : bits(b) {
    }
    bool next() override {
        return (bits >> pos++) & 1;
    }
};

struct RandomBranch : BranchSource {
    std::mt19937_64 rng;
    explicit RandomBranch(uint64_t seed) : rng(seed) {
    }
    bool next() override {
        return rng() & 1;
    }
};

struct Replay {
    StabilizerState state;
    std::vector<size_t> ids;  // tableau index -> qubit id
    std::unordered_map<size_t, size_t> index;  // qubit id -> tableau index
    std::vector<bool> outcomes;
    std::vector<bool> random_bits;
    size_t random_count = 0;

    size_t at(size_t id) const {
        auto it = index.find(id);
        if (it == index.end()) {
            throw SimulationError("qubit " + std::to_string(id) + " is not live");
        }
        return it->second;
    }

    void drop(size_t id) {
        size_t t = at(id);
        state.discard(t);
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(t));
        index.erase(id);
        for (auto &[other, idx] : index) {
            if (idx > t) {
                idx--;
            }
        }
    }

    /// Removes the purifying partners of the initial qubits. Empty string on
    /// success; otherwise the output still depends on the initial state.
    /// The partners may stay entangled with each other: they are separable
    /// from the rest iff their columns of the stabilizer tableau have rank
    /// equal to their count.
    std::string drop_references(size_t initial_qubits) {
        if (initial_qubits == 0) {
            return "";
        }
        std::vector<size_t> refs;
        for (size_t q = 0; q < initial_qubits; q++) {
            refs.push_back(at(kReferenceId + q));
        }
        Gf2Matrix cols(state.generators().size(), 2 * refs.size());
        for (size_t j = 0; j < state.generators().size(); j++) {
            const PauliString &g = state.generators()[j];
            for (size_t k = 0; k < refs.size(); k++) {
                cols.set(j, 2 * k, g.xs.get(refs[k]));
                cols.set(j, 2 * k + 1, g.zs.get(refs[k]));
            }
        }
        if (rank(cols) != refs.size()) {
            return "final state depends on the initial state of the input qubits";
        }
        for (size_t q = 0; q < initial_qubits; q++) {
            PauliString z = PauliString::single(state.num_qubits(), at(kReferenceId + q), 'Z');
            state.measure(z, state.is_random(z) ? std::optional<bool>(false) : std::nullopt);
            drop(kReferenceId + q);
        }
        return "";
    }

    void add(size_t id, bool plus) {
        if (index.count(id)) {
            throw SimulationError("qubit " + std::to_string(id) + " allocated twice");
        }
        size_t t = plus ? state.add_qubit_plus() : state.add_qubit_zero();
        ids.push_back(id);
        index[id] = t;
    }

    PauliString lift(const std::vector<size_t> &qubits, const PauliString &local) const {
        if (local.num_qubits() != qubits.size()) {
            throw SimulationError("Pauli length differs from qubit count");
        }
        PauliString p(state.num_qubits());
        p.sign = local.sign;
        for (size_t k = 0; k < qubits.size(); k++) {
            size_t t = at(qubits[k]);
            p.xs.set(t, local.xs.get(k));
            p.zs.set(t, local.zs.get(k));
        }
        return p;
    }

    void measure(const PauliString &obs, BranchSource &src) {
        std::optional<bool> forced;
        if (state.is_random(obs)) {
            forced = src.next();
            random_bits.push_back(*forced);
            random_count++;
        }
        outcomes.push_back(state.measure(obs, forced).outcome);
    }

    void run(const ScheduleOp &op, BranchSource &src) {
        std::vector<size_t> seen;
        for (size_t q : op.qubits) {
            if (std::find(seen.begin(), seen.end(), q) != seen.end()) {
                throw SimulationError("op repeats qubit " + std::to_string(q));
            }
            seen.push_back(q);
        }
        switch (op.kind) {
            case OpKind::AllocAncillaPlus:
                for (size_t q : op.qubits) {
                    add(q, true);
                }
                break;
            case OpKind::Unitary:
                run_unitary(op);
                break;
            case OpKind::PauliMeasure:
                measure(lift(op.qubits, op.observable), src);
                break;
            case OpKind::ComputationalMeasure:
                if (op.qubits.size() != 1) {
                    throw SimulationError("computational measurement takes one qubit");
                }
                measure(PauliString::single(state.num_qubits(), at(op.qubits[0]), 'Z'), src);
                break;
            case OpKind::GlobalProjMeasure:
                if (op.graph.num_vertices() != op.qubits.size()) {
                    throw SimulationError("projective measurement graph size differs from qubit count");
                }
                for (size_t v = 0; v < op.qubits.size(); v++) {
                    measure(lift(op.qubits, PauliString::x_z(op.qubits.size(), v, op.graph.neighbors(v))), src);
                }
                break;
            case OpKind::Discard:
                for (size_t q : op.qubits) {
                    drop(q);
                }
                break;
            case OpKind::PauliCorrect: {
                bool fire = false;
                for (size_t c : op.cond) {
                    if (c >= outcomes.size()) {
                        throw SimulationError("correction refers to outcome " + std::to_string(c) +
                                              " before it is measured");
                    }
                    fire ^= outcomes[c];
                }
                if (fire) {
                    state.apply_pauli(lift(op.qubits, op.correction));
                }
                break;
            }
        }
    }

    void run_unitary(const ScheduleOp &op) {
        switch (op.gate) {
            case GateName::CZ:
                if (op.qubits.size() != 2) {
                    throw SimulationError("CZ takes two qubits");
                }
                state.apply_cz(at(op.qubits[0]), at(op.qubits[1]));
                break;
            case GateName::GlobalPrep:
                if (op.graph.num_vertices() != op.qubits.size()) {
                    throw SimulationError("GlobalPrep graph size differs from qubit count");
                }
                for (auto [u, v] : op.graph.edges()) {
                    state.apply_cz(at(op.qubits[u]), at(op.qubits[v]));
                }
                break;
            default: {
                if (op.qubits.size() != 1) {
                    throw SimulationError("single-qubit gate takes one qubit");
                }
                LocalGate g = op.gate == GateName::H   ? LocalGate::H
                              : op.gate == GateName::S ? LocalGate::S
                              : op.gate == GateName::X ? LocalGate::X
                                                       : LocalGate::Z;
                state.apply_gate(g, at(op.qubits[0]));
            }
        }
    }
};

Replay start(const Schedule &s, uint64_t seed) {
    Replay r;
    r.state = purified_initial_state(s.initial_qubits, seed);
    for (size_t q = 0; q < s.initial_qubits; q++) {
        r.ids.push_back(q);
        r.index[q] = q;
    }
    for (size_t q = 0; q < s.initial_qubits; q++) {
        r.ids.push_back(kReferenceId + q);
        r.index[kReferenceId + q] = s.initial_qubits + q;
    }
    return r;
}

/// Empty string on success.
std::string check_final(const Replay &r, const Graph &prepared, bool exact, PauliString *correction) {
    size_t n = prepared.num_vertices();
    if (r.ids.size() != n) {
        return "final state has " + std::to_string(r.ids.size()) + " live qubits, expected " + std::to_string(n);
    }
    for (size_t id : r.ids) {
        if (id >= n) {
            return "ancilla " + std::to_string(id) + " is still live at the end";
        }
    }
    // Graph in tableau order.
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (prepared.has_edge(r.ids[i], r.ids[j])) {
                g.add_edge(i, j);
            }
        }
    }
    auto c = lp_equivalent_to(r.state, g);
    if (!c.has_value()) {
        return "final state is not LP-equivalent to the prepared graph state";
    }
    PauliString by_id(n);
    for (size_t i = 0; i < n; i++) {
        by_id.zs.set(r.ids[i], c->zs.get(i));
    }
    *correction = by_id;
    if (exact && !c->is_identity()) {
        return "final state differs from the graph state by " + by_id.str() + " after the recorded corrections";
    }
    return "";
}

}  // namespace

size_t count_random_measurements(const Schedule &s, uint64_t seed) {
    Replay r = start(s, seed);
    FixedBranch zeros(0);
    for (const auto &op : s.ops) {
        r.run(op, zeros);
    }
    return r.random_count;
}

VerificationReport verify(const Schedule &s, const VerifyMode &mode, const Budgets &budgets) {
    VerificationReport rep;
    rep.exhaustive = mode.exhaustive;
    rep.measured_metrics = metrics(s);
    for (const auto &op : s.ops) {
        rep.exact_required |= op.kind == OpKind::PauliCorrect;
    }
    auto fail = [&](std::vector<bool> branch, std::string reason) {
        rep.failures.push_back(BranchFailure{std::move(branch), std::move(reason)});
    };

    if (rep.measured_metrics != s.claims) {
        fail({}, "claimed metrics (n=" + std::to_string(s.claims.n_ancilla) + ", s=" + std::to_string(s.claims.s_max) +
                     ", l=" + std::to_string(s.claims.l_depth) + ") differ from measured (n=" +
                     std::to_string(rep.measured_metrics.n_ancilla) + ", s=" +
                     std::to_string(rep.measured_metrics.s_max) + ", l=" +
                     std::to_string(rep.measured_metrics.l_depth) + ")");
    }
    for (size_t i = 1; i < s.ops.size(); i++) {
        if (s.ops[i].layer < s.ops[i - 1].layer) {
            fail({}, "layers decrease at op " + std::to_string(i));
            break;
        }
    }
    if (!verify_layer_disjointness(s)) {
        fail({}, "a layer applies two ops to the same qubit");
    }
    Graph prepared;
    try {
        prepared = s.prepared_graph();
    } catch (const Error &e) {
        fail({}, std::string("invalid lc_prefix: ") + e.what());
        rep.ok = false;
        return rep;
    }

    auto run_branch = [&](BranchSource &src, uint64_t init_seed) {
        Replay r = start(s, init_seed);
        std::string reason;
        try {
            for (const auto &op : s.ops) {
                r.run(op, src);
            }
            PauliString corr;
            reason = r.drop_references(s.initial_qubits);
            if (reason.empty()) {
                reason = check_final(r, prepared, rep.exact_required, &corr);
            }
            if (reason.empty() && rep.correction_examples.size() < 4) {
                rep.correction_examples.push_back(CorrectionExample{r.random_bits, corr});
            }
        } catch (const Error &e) {
            reason = std::string("simulation error: ") + e.what();
        }
        rep.branches_checked++;
        if (!reason.empty()) {
            fail(r.random_bits, reason);
        }
    };

    try {
        rep.random_measurements = count_random_measurements(s, mode.seed);
    } catch (const Error &e) {
        fail({}, std::string("simulation error: ") + e.what());
        rep.ok = false;
        return rep;
    }
    if (mode.exhaustive) {
        size_t k = rep.random_measurements;
        if (k > budgets.max_exhaustive_measurements || k > 62) {
            throw BudgetExceededError("exhaustive verification needs 2^" + std::to_string(k) +
                                      " branches, budget allows 2^" +
                                      std::to_string(budgets.max_exhaustive_measurements));
        }
        for (uint64_t b = 0; b < (uint64_t{1} << k); b++) {
            FixedBranch src(b);
            run_branch(src, mode.seed);
        }
    } else {
        std::mt19937_64 seeds(mode.seed);
        for (size_t i = 0; i < mode.samples; i++) {
            uint64_t branch_seed = seeds();
            RandomBranch src(branch_seed);
            run_branch(src, branch_seed ^ 0x9e3779b97f4a7c15ull);
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

Json report_to_json(const VerificationReport &r) {
    auto bits = [](const std::vector<bool> &b) {
        std::string s;
        for (bool x : b) {
            s.push_back(x ? '1' : '0');
        }
        return s;
    };
    Json j;
    j["ok"] = r.ok;
    j["branches_checked"] = r.branches_checked;
    j["exhaustive"] = r.exhaustive;
    j["random_measurements"] = r.random_measurements;
    j["exact_required"] = r.exact_required;
    Json ex = Json::array();
    for (const auto &c : r.correction_examples) {
        ex.push_back(Json{{"branch", bits(c.branch)}, {"correction", c.correction.str()}});
    }
    j["correction_examples"] = std::move(ex);
    j["measured_metrics"] = metrics_to_json(r.measured_metrics);
    Json fails = Json::array();
    for (const auto &f : r.failures) {
        fails.push_back(Json{{"branch", bits(f.branch)}, {"reason", f.reason}});
    }
    j["failures"] = std::move(fails);
    return j;
}

}  // namespace graphprep
