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
#include "graphprep/stabilizer.h"

#include <sstream>

#include "graphprep/errors.h"
#include "graphprep/gf2.h"

namespace graphprep {

LocalGate parse_local_gate(std::string_view name) {
    if (name == "H") return LocalGate::H;
    if (name == "S") return LocalGate::S;
    if (name == "X") return LocalGate::X;
    if (name == "Y") return LocalGate::Y;
    if (name == "Z") return LocalGate::Z;
    throw ParseError(0, "unknown single-qubit gate '" + std::string(name) + "'");
}

std::string_view local_gate_name(LocalGate g) {
    switch (g) {
        case LocalGate::H:
            return "H";
        case LocalGate::S:
            return "S";
        case LocalGate::X:
            return "X";
        case LocalGate::Y:
            return "Y";
        case LocalGate::Z:
            return "Z";
    }
    return "?";
}

StabilizerState StabilizerState::zeros(size_t n) {
    std::vector<PauliString> gens;
    for (size_t q = 0; q < n; q++) {
        gens.push_back(PauliString::single(n, q, 'Z'));
    }
    return StabilizerState(std::move(gens));
}

StabilizerState StabilizerState::plus(size_t n) {
    std::vector<PauliString> gens;
    for (size_t q = 0; q < n; q++) {
        gens.push_back(PauliString::single(n, q, 'X'));
    }
    return StabilizerState(std::move(gens));
}

StabilizerState StabilizerState::from_generators(std::vector<PauliString> gens) {
    StabilizerState s(std::move(gens));
    if (!s.is_valid()) {
        throw SimulationError("generators do not describe a pure stabilizer state");
    }
    return s;
}

void StabilizerState::check_qubit(size_t q) const {
    if (q >= num_qubits()) {
        throw OutOfRangeError("qubit " + std::to_string(q) + " out of range for " +
                              std::to_string(num_qubits()) + " qubits");
    }
}

size_t StabilizerState::add_qubit_plus() {
    for (auto &g : gens_) {
        g.push_back_identity();
    }
    size_t q = gens_.size();
    gens_.push_back(PauliString::single(q + 1, q, 'X'));
    return q;
}

size_t StabilizerState::add_qubit_zero() {
    size_t q = add_qubit_plus();
    gens_.back() = PauliString::single(q + 1, q, 'Z');
    return q;
}

void StabilizerState::apply_cz(size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw SameQubitError("CZ needs two distinct qubits, got " + std::to_string(a) + " twice");
    }
    for (auto &g : gens_) {
        bool xa = g.xs.get(a);
        bool xb = g.xs.get(b);
        g.sign ^= xa && xb && (g.zs.get(a) ^ g.zs.get(b));
        if (xa) {
            g.zs.flip(b);
        }
        if (xb) {
            g.zs.flip(a);
        }
    }
}

void StabilizerState::apply_gate(LocalGate gate, size_t q) {
    check_qubit(q);
    for (auto &g : gens_) {
        bool x = g.xs.get(q);
        bool z = g.zs.get(q);
        switch (gate) {
            case LocalGate::H:
                g.sign ^= x && z;
                g.xs.set(q, z);
                g.zs.set(q, x);
                break;
            case LocalGate::S:
                g.sign ^= x && z;
                g.zs.set(q, z ^ x);
                break;
            case LocalGate::X:
                g.sign ^= z;
                break;
            case LocalGate::Y:
                g.sign ^= x ^ z;
                break;
            case LocalGate::Z:
                g.sign ^= x;
                break;
        }
    }
}

void StabilizerState::apply_pauli(const PauliString &p) {
    if (p.num_qubits() != num_qubits()) {
        throw SizeMismatchError("Pauli correction acts on the wrong number of qubits");
    }
    for (auto &g : gens_) {
        g.sign ^= !g.commutes(p);
    }
}

std::optional<std::pair<BitVec, bool>> StabilizerState::decompose(const PauliString &p) const {
    size_t n = num_qubits();
    if (p.num_qubits() != n) {
        throw SizeMismatchError("observable acts on the wrong number of qubits");
    }
    // Column j holds generator j's (x | z) vector.
    Gf2Matrix m(2 * n, n);
    BitVec target(2 * n);
    for (size_t j = 0; j < n; j++) {
        for (size_t q : gens_[j].xs.ones()) {
            m.set(q, j);
        }
        for (size_t q : gens_[j].zs.ones()) {
            m.set(n + q, j);
        }
    }
    for (size_t q : p.xs.ones()) {
        target.set(q);
    }
    for (size_t q : p.zs.ones()) {
        target.set(n + q);
    }
    std::optional<Gf2Vector> combo = solve(m, target);
    if (!combo.has_value()) {
        return std::nullopt;
    }
    PauliString acc(n);
    for (size_t j : combo->ones()) {
        acc *= gens_[j];
    }
    return std::make_pair(std::move(*combo), acc.sign != p.sign);
}

bool StabilizerState::is_random(const PauliString &obs) const {
    for (const auto &g : gens_) {
        if (!g.commutes(obs)) {
            return true;
        }
    }
    return false;
}

MeasureResult StabilizerState::measure(const PauliString &obs, std::optional<bool> forced) {
    if (obs.num_qubits() != num_qubits()) {
        throw SizeMismatchError("observable acts on the wrong number of qubits");
    }
    if (obs.is_identity()) {
        if (forced.has_value() && *forced != obs.sign) {
            throw ForcedImpossibleError("identity observable has a fixed outcome");
        }
        return {obs.sign, true};
    }
    std::optional<size_t> pivot;
    for (size_t j = 0; j < gens_.size(); j++) {
        if (!gens_[j].commutes(obs)) {
            if (!pivot.has_value()) {
                pivot = j;
            } else {
                gens_[j] *= gens_[*pivot];
            }
        }
    }
    if (!pivot.has_value()) {
        auto dec = decompose(obs);
        if (!dec.has_value()) {
            throw SimulationError("commuting observable outside the stabilizer group");
        }
        bool outcome = dec->second;
        if (forced.has_value() && *forced != outcome) {
            throw ForcedImpossibleError("outcome is deterministic and cannot be forced");
        }
        return {outcome, true};
    }
    bool outcome = forced.value_or(false);
    gens_[*pivot] = obs;
    gens_[*pivot].sign = obs.sign ^ outcome;
    return {outcome, false};
}

void StabilizerState::discard(size_t q) {
    check_qubit(q);
    std::optional<size_t> px;
    for (size_t j = 0; j < gens_.size(); j++) {
        if (gens_[j].xs.get(q)) {
            if (!px.has_value()) {
                px = j;
            } else {
                gens_[j] *= gens_[*px];
            }
        }
    }
    std::optional<size_t> pz;
    for (size_t j = 0; j < gens_.size(); j++) {
        if (j != px && gens_[j].zs.get(q)) {
            if (!pz.has_value()) {
                pz = j;
            } else {
                gens_[j] *= gens_[*pz];
            }
        }
    }
    if (px.has_value() && pz.has_value()) {
        throw SimulationError("qubit " + std::to_string(q) + " is entangled and cannot be discarded");
    }
    size_t p = px.has_value() ? *px : pz.value();
    PauliString local = PauliString::single(num_qubits(), q, gens_[p].at(q));
    auto dec = decompose(local);
    if (!dec.has_value()) {
        throw SimulationError("qubit " + std::to_string(q) + " is entangled and cannot be discarded");
    }
    gens_.erase(gens_.begin() + static_cast<std::ptrdiff_t>(p));
    for (auto &g : gens_) {
        g.erase_qubit(q);
    }
}

bool StabilizerState::is_valid() const {
    size_t n = num_qubits();
    Gf2Matrix m(0, 2 * n);
    for (size_t i = 0; i < n; i++) {
        if (gens_[i].num_qubits() != n) {
            return false;
        }
        for (size_t j = i + 1; j < n; j++) {
            if (!gens_[i].commutes(gens_[j])) {
                return false;
            }
        }
        BitVec row(2 * n);
        for (size_t q : gens_[i].xs.ones()) {
            row.set(q);
        }
        for (size_t q : gens_[i].zs.ones()) {
            row.set(n + q);
        }
        m.append_row(std::move(row));
    }
    return n == 0 || rank(m) == n;
}

std::string StabilizerState::str() const {
    std::ostringstream out;
    for (size_t j = 0; j < gens_.size(); j++) {
        if (j) {
            out << '\n';
        }
        out << gens_[j].str();
    }
    return out.str();
}

StabilizerState graph_state(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<PauliString> gens;
    gens.reserve(n);
    for (Vertex v = 0; v < n; v++) {
        gens.push_back(PauliString::x_z(n, v, g.neighbors(v)));
    }
    return StabilizerState::from_generators(std::move(gens));
}

std::optional<PauliString> lp_equivalent_to(const StabilizerState &s, const Graph &g) {
    size_t n = g.num_vertices();
    if (s.num_qubits() != n) {
        throw SizeMismatchError("state has " + std::to_string(s.num_qubits()) + " qubits, graph has " +
                                std::to_string(n) + " vertices");
    }
    PauliString correction(n);
    for (Vertex v = 0; v < n; v++) {
        auto dec = s.decompose(PauliString::x_z(n, v, g.neighbors(v)));
        if (!dec.has_value()) {
            return std::nullopt;
        }
        // Z_v flips the sign of g_v and no other graph generator.
        correction.zs.set(v, dec->second);
    }
    return correction;
}

bool equals_graph_state(const StabilizerState &s, const Graph &g) {
    auto c = lp_equivalent_to(s, g);
    return c.has_value() && c->is_identity();
}

StabilizerState contract_by_x_measurements(StabilizerState s, const std::vector<ExpansionStep> &steps,
                                           const OutcomeSource &outcomes) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        size_t n = s.num_qubits();
        if (it->w + 1 != n || it->u + 2 != n) {
            throw SimulationError("expansion helpers must be the two highest qubits");
        }
        bool results[2];
        size_t helpers[2] = {it->u, it->w};
        for (int k = 0; k < 2; k++) {
            PauliString obs = PauliString::single(n, helpers[k], 'X');
            std::optional<bool> forced;
            if (outcomes && s.is_random(obs)) {
                forced = outcomes();
            }
            results[k] = s.measure(obs, forced).outcome;
        }
        PauliString fix(n);
        if (results[1]) {
            fix.zs.set(it->v);
        }
        if (results[0]) {
            for (size_t r : it->moved.ones()) {
                fix.zs.set(r);
            }
        }
        s.apply_pauli(fix);
        s.discard(it->w);
        s.discard(it->u);
    }
    return s;
}

}  // namespace graphprep
