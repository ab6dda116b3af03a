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
#ifndef GRAPHPREP_PAULI_H
#define GRAPHPREP_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>

#include "graphprep/bitvec.h"

namespace graphprep {

/// Signed Pauli product in symplectic form. (x, z) = (1, 1) on a qubit is Y.
struct PauliString {
    BitVec xs;
    BitVec zs;
    bool sign = false;  // true means a -1 prefactor

    PauliString() = default;
    explicit PauliString(size_t num_qubits) : xs(num_qubits), zs(num_qubits) {
    }

    /// Parses "+XZIY", "-ZZ", "XX" (leading sign optional).
    static PauliString from_string(std::string_view text);
    /// Single-qubit Pauli ('X', 'Y' or 'Z') on qubit q.
    static PauliString single(size_t num_qubits, size_t q, char p);
    /// X on v, Z on every vertex of `z_support`.
    static PauliString x_z(size_t num_qubits, size_t v, const BitVec &z_support);

    size_t num_qubits() const {
        return xs.size();
    }
    char at(size_t q) const {
        return "IXZY"[xs.get(q) + 2 * zs.get(q)];
    }
    BitVec support() const {
        return xs | zs;
    }
    size_t weight() const {
        return support().popcount();
    }
    bool is_identity() const {
        return xs.none() && zs.none();
    }

    bool commutes(const PauliString &other) const;

    /// this <- this * rhs. Returns the exponent of i (mod 4) of the product
    /// including both signs; `sign` is set from its high bit. The caller
    /// must only rely on `sign` when the exponent is even.
    uint8_t right_mul_log_i(const PauliString &rhs);
    /// this <- this * rhs for commuting operands. Throws SimulationError otherwise.
    PauliString &operator*=(const PauliString &rhs);

    /// Appends an identity qubit.
    void push_back_identity();
    /// Removes qubit q, shifting higher qubits down.
    void erase_qubit(size_t q);

    /// "+XZIZ" form.
    std::string str() const;

    bool operator==(const PauliString &) const = default;
};

}  // namespace graphprep

#endif
