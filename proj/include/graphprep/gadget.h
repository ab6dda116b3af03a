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
#ifndef GRAPHPREP_GADGET_H
#define GRAPHPREP_GADGET_H

#include <vector>

#include "graphprep/schedule.h"

namespace graphprep {

/// Starting state of the gadget ancilla. The ancilla ends in the other one,
/// so alternating variants lets one ancilla serve many gadgets.
enum class GadgetVariant {
    AncillaPlus,  // ancilla in |+>, left in |0>
    AncillaZero,  // ancilla in |0>, left in |+>
};

/// CZ on (a, b) by three Pauli measurements on the ancilla plus conditional
/// Pauli corrections. The measurements produce outcomes first_outcome,
/// first_outcome + 1, first_outcome + 2. Layers are left at 0.
///
/// AncillaPlus: Z_a Z_c, X_c Z_b, Z_c. AncillaZero: Z_a X_c, Z_c Z_b, X_c.
/// Corrections: Z_a if m2, Z_b if m1 ^ m3, and X_c (resp. Z_c) if m3.
std::vector<ScheduleOp> cz_measurement_gadget(size_t a, size_t b, size_t anc, size_t first_outcome,
                                              GadgetVariant variant = GadgetVariant::AncillaPlus);

/// The same gadget split at its last ancilla measurement, so one ancilla can
/// serve two CZs sharing the endpoint b.
///
/// cz_gadget_open: the first two measurements (outcomes m1, m2) and Z_a if m2.
/// cz_gadget_close: the final ancilla measurement m3, Z_b if m1 ^ m3 and the
/// ancilla correction; the ancilla flips variant as in cz_measurement_gadget.
/// cz_gadget_pair: after an open gadget on (a, b), builds CZ(a2, b) with
/// Z_a2 Z_c (resp. Z_a2 X_c) then X_c (resp. Z_c), outcomes m1', m2'.
/// Corrections: Z_b if m1 ^ m1', Z_a2 if m2 ^ m2', Z_c (resp. X_c) if m2'.
/// The ancilla returns to its starting state.
std::vector<ScheduleOp> cz_gadget_open(size_t a, size_t b, size_t anc, size_t first_outcome, GadgetVariant variant);
std::vector<ScheduleOp> cz_gadget_close(size_t b, size_t anc, size_t m1, size_t first_outcome, GadgetVariant variant);
std::vector<ScheduleOp> cz_gadget_pair(size_t a2, size_t b, size_t anc, size_t m1, size_t m2, size_t first_outcome,
                                       GadgetVariant variant);

/// Attaches qubit v to `neighbors`: Z-measure v (skipped when v is known to
/// be |0>), then measure X_v Z_{neighbors}. Corrections Z_v if the second
/// outcome is -1 and Z_{neighbors} if the first one is.
std::vector<ScheduleOp> vertex_attach_ops(size_t v, const std::vector<size_t> &neighbors, size_t first_outcome,
                                          bool v_is_zero);

/// Single-qubit measurement op.
ScheduleOp single_measure(size_t q, char pauli);
/// Pauli correction `pauli` on each qubit, conditioned on the XOR of `cond`.
ScheduleOp pauli_correct(std::vector<size_t> qubits, char pauli, std::vector<size_t> cond);

}  // namespace graphprep

#endif
