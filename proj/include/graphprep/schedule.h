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
#ifndef GRAPHPREP_SCHEDULE_H
#define GRAPHPREP_SCHEDULE_H

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "graphprep/graph.h"
#include "graphprep/pauli.h"

namespace graphprep {

enum class OpKind {
    AllocAncillaPlus,
    Unitary,
    PauliMeasure,
    ComputationalMeasure,
    GlobalProjMeasure,
    Discard,
    PauliCorrect,
};

enum class GateName { CZ, H, S, X, Z, GlobalPrep };

std::string_view op_kind_name(OpKind k);
OpKind parse_op_kind(std::string_view name);
std::string_view gate_name(GateName g);
GateName parse_gate_name(std::string_view name);

/// One primitive operation. Qubits are schedule-wide ids: targets are
/// 0..n-1, ancillas use larger ids.
struct ScheduleOp {
    OpKind kind = OpKind::Unitary;
    size_t layer = 0;
    std::vector<size_t> qubits;
    /// Unitary only.
    GateName gate = GateName::CZ;
    /// PauliMeasure: one letter per entry of `qubits`.
    PauliString observable;
    /// GlobalPrep and GlobalProjMeasure: graph over positions in `qubits`.
    Graph graph;
    /// PauliCorrect: applied iff the XOR of these outcomes is 1.
    std::vector<size_t> cond;
    /// PauliCorrect: one letter per entry of `qubits`.
    PauliString correction;

    /// Counts toward N, S and L.
    bool is_physical() const {
        return kind != OpKind::Discard && kind != OpKind::PauliCorrect;
    }
    /// Number of measurement outcomes this op produces.
    size_t num_outcomes() const;

    bool operator==(const ScheduleOp &) const = default;
};

struct ComplexityMetrics {
    size_t n_ancilla = 0;
    size_t s_max = 0;
    /// Distinct layers holding a physical op, allocation included.
    size_t l_depth = 0;
    /// Distinct layers holding a physical op other than allocation.
    size_t l_content = 0;

    bool operator==(const ComplexityMetrics &) const = default;
};

/// The six lexicographic orders over (N, S, L).
enum class Measure { NSL, NLS, SNL, SLN, LNS, LSN };

Measure parse_measure(std::string_view name);
std::string_view measure_name(Measure m);

struct Schedule {
    Graph target;
    /// Qubits present before the first op, in an unknown state. Zero when
    /// every qubit is allocated by the schedule.
    size_t initial_qubits = 0;
    /// Local complementations taking `target` to the graph actually prepared.
    LcSequence lc_prefix;
    std::vector<ScheduleOp> ops;
    ComplexityMetrics claims;
    /// Free-form planner notes (bound constants and the like).
    std::vector<std::string> notes;

    /// apply_lc_sequence(target, lc_prefix).
    Graph prepared_graph() const;
    size_t num_outcomes() const;
};

/// N = peak live qubits - |V|, S = largest physical op, L = distinct layers.
ComplexityMetrics metrics(const Schedule &s);

/// Orders `a` against `b` in the parameter order of `m`, using l_depth for L.
std::strong_ordering compare_lex(const ComplexityMetrics &a, const ComplexityMetrics &b, Measure m);

/// Every layer's physical ops touch pairwise disjoint qubits.
bool verify_layer_disjointness(const Schedule &s);

/// Stable-sorts ops by layer, renumbers layers 0.. without gaps and sets
/// `claims` from metrics().
void finalize_schedule(Schedule &s);

}  // namespace graphprep

#endif
