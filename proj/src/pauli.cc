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
#include "graphprep/pauli.h"

#include <bit>

#include "graphprep/errors.h"

namespace graphprep {

PauliString PauliString::from_string(std::string_view text) {
    bool neg = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        neg = text[0] == '-';
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    p.sign = neg;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.xs.set(q);
                break;
            case 'Z':
                p.zs.set(q);
                break;
            case 'Y':
                p.xs.set(q);
                p.zs.set(q);
                break;
            default:
                throw ParseError(0, std::string("unknown Pauli letter '") + text[q] + "'");
        }
    }
    return p;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char p) {
    if (q >= num_qubits) {
        throw OutOfRangeError("qubit " + std::to_string(q) + " out of range");
    }
    PauliString out(num_qubits);
    out.xs.set(q, p == 'X' || p == 'Y');
    out.zs.set(q, p == 'Z' || p == 'Y');
    return out;
}

PauliString PauliString::x_z(size_t num_qubits, size_t v, const BitVec &z_support) {
    PauliString out = single(num_qubits, v, 'X');
    out.zs = z_support;
    return out;
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw SizeMismatchError("Pauli operands act on different qubit counts");
    }
    return xs.dot(other.zs) == zs.dot(other.xs);
}

uint8_t PauliString::right_mul_log_i(const PauliString &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw SizeMismatchError("Pauli operands act on different qubit counts");
    }
    // X*Y, Y*Z, Z*X contribute +i; the reversed pairs contribute -i.
    auto x1 = xs.words();
    auto z1 = zs.words();
    auto x2 = rhs.xs.words();
    auto z2 = rhs.zs.words();
    unsigned plus = 0;
    unsigned minus = 0;
    for (size_t k = 0; k < x1.size(); k++) {
        uint64_t a_x = x1[k] & ~z1[k], a_y = x1[k] & z1[k], a_z = ~x1[k] & z1[k];
        uint64_t b_x = x2[k] & ~z2[k], b_y = x2[k] & z2[k], b_z = ~x2[k] & z2[k];
        plus += std::popcount((a_x & b_y) | (a_y & b_z) | (a_z & b_x));
        minus += std::popcount((a_y & b_x) | (a_z & b_y) | (a_x & b_z));
        x1[k] ^= x2[k];
        z1[k] ^= z2[k];
    }
    uint8_t log_i = static_cast<uint8_t>((plus + 3 * minus + 2 * sign + 2 * rhs.sign) & 3);
    sign = (log_i >> 1) & 1;
    return log_i;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (right_mul_log_i(rhs) & 1) {
        throw SimulationError("product of anticommuting Pauli operators is not Hermitian");
    }
    return *this;
}

void PauliString::push_back_identity() {
    xs.push_back(false);
    zs.push_back(false);
}

void PauliString::erase_qubit(size_t q) {
    xs.erase(q);
    zs.erase(q);
}

std::string PauliString::str() const {
    std::string out(1, sign ? '-' : '+');
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back(at(q));
    }
    return out;
}

}  // namespace graphprep
