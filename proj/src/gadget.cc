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
#include "graphprep/gadget.h"

#include "graphprep/errors.h"

namespace graphprep {

namespace {

ScheduleOp pauli_measure(std::vector<size_t> qubits, std::string_view obs) {
    ScheduleOp op;
    op.kind = OpKind::PauliMeasure;
    op.qubits = std::move(qubits);
    op.observable = PauliString::from_string(obs);
    return op;
}

}  // namespace

ScheduleOp single_measure(size_t q, char pauli) {
    if (pauli == 'Z') {
        ScheduleOp op;
        op.kind = OpKind::ComputationalMeasure;
        op.qubits = {q};
        return op;
    }
    return pauli_measure({q}, std::string(1, pauli));
}

ScheduleOp pauli_correct(std::vector<size_t> qubits, char pauli, std::vector<size_t> cond) {
    ScheduleOp op;
    op.kind = OpKind::PauliCorrect;
    op.correction = PauliString::from_string(std::string(qubits.size(), pauli));
    op.qubits = std::move(qubits);
    op.cond = std::move(cond);
    return op;
}

std::vector<ScheduleOp> cz_measurement_gadget(size_t a, size_t b, size_t anc, size_t first_outcome,
                                              GadgetVariant variant) {
    if (a == b || a == anc || b == anc) {
        throw SameQubitError("gadget qubits must be distinct");
    }
    bool plus = variant == GadgetVariant::AncillaPlus;
    size_t m1 = first_outcome;
    size_t m2 = first_outcome + 1;
    size_t m3 = first_outcome + 2;
    std::vector<ScheduleOp> ops;
    ops.push_back(pauli_measure({a, anc}, plus ? "ZZ" : "ZX"));
    ops.push_back(pauli_measure({anc, b}, plus ? "XZ" : "ZZ"));
    ops.push_back(single_measure(anc, plus ? 'Z' : 'X'));
    ops.push_back(pauli_correct({a}, 'Z', {m2}));
    ops.push_back(pauli_correct({b}, 'Z', {m1, m3}));
    ops.push_back(pauli_correct({anc}, plus ? 'X' : 'Z', {m3}));
    return ops;
}

std::vector<ScheduleOp> cz_gadget_open(size_t a, size_t b, size_t anc, size_t first_outcome, GadgetVariant variant) {
    std::vector<ScheduleOp> ops = cz_measurement_gadget(a, b, anc, first_outcome, variant);
    return {ops[0], ops[1], ops[3]};
}

std::vector<ScheduleOp> cz_gadget_close(size_t b, size_t anc, size_t m1, size_t first_outcome, GadgetVariant variant) {
    if (b == anc) {
        throw SameQubitError("gadget qubits must be distinct");
    }
    bool plus = variant == GadgetVariant::AncillaPlus;
    size_t m3 = first_outcome;
    return {single_measure(anc, plus ? 'Z' : 'X'), pauli_correct({b}, 'Z', {m1, m3}),
            pauli_correct({anc}, plus ? 'X' : 'Z', {m3})};
}

std::vector<ScheduleOp> cz_gadget_pair(size_t a2, size_t b, size_t anc, size_t m1, size_t m2, size_t first_outcome,
                                       GadgetVariant variant) {
    if (a2 == b || a2 == anc || b == anc) {
        throw SameQubitError("gadget qubits must be distinct");
    }
    bool plus = variant == GadgetVariant::AncillaPlus;
    size_t p1 = first_outcome;
    size_t p2 = first_outcome + 1;
    return {pauli_measure({a2, anc}, plus ? "ZZ" : "ZX"), single_measure(anc, plus ? 'X' : 'Z'),
            pauli_correct({b}, 'Z', {m1, p1}), pauli_correct({a2}, 'Z', {m2, p2}),
            pauli_correct({anc}, plus ? 'Z' : 'X', {p2})};
}

std::vector<ScheduleOp> vertex_attach_ops(size_t v, const std::vector<size_t> &neighbors, size_t first_outcome,
                                          bool v_is_zero) {
    std::vector<ScheduleOp> ops;
    size_t next = first_outcome;
    std::optional<size_t> z_outcome;
    if (!v_is_zero) {
        ops.push_back(single_measure(v, 'Z'));
        z_outcome = next++;
    }
    std::vector<size_t> qubits{v};
    qubits.insert(qubits.end(), neighbors.begin(), neighbors.end());
    std::string obs = "X" + std::string(neighbors.size(), 'Z');
    ops.push_back(pauli_measure(qubits, obs));
    size_t x_outcome = next++;
    ops.push_back(pauli_correct({v}, 'Z', {x_outcome}));
    if (z_outcome.has_value() && !neighbors.empty()) {
        ops.push_back(pauli_correct(neighbors, 'Z', {*z_outcome}));
    }
    return ops;
}

}  // namespace graphprep
