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
#ifndef GRAPHPREP_STABILIZER_H
#define GRAPHPREP_STABILIZER_H

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphprep/graph.h"
#include "graphprep/pauli.h"

namespace graphprep {

enum class LocalGate { H, S, X, Y, Z };

/// Parses "H", "S", "X", "Y", "Z".
LocalGate parse_local_gate(std::string_view name);
std::string_view local_gate_name(LocalGate g);

struct MeasureResult {
    bool outcome;        // true for the -1 eigenvalue
    bool deterministic;  // observable (up to sign) was already in the group
};

/// Supplies outcomes of random measurements, true for -1.
using OutcomeSource = std::function<bool()>;

/// A pure stabilizer state held as n signed, commuting, independent generators.
class StabilizerState {
   public:
    StabilizerState() = default;
    /// |0...0>.
    static StabilizerState zeros(size_t n);
    /// |+...+>.
    static StabilizerState plus(size_t n);
    /// Throws SimulationError unless the generators commute, are independent
    /// and there are exactly as many as qubits.
    static StabilizerState from_generators(std::vector<PauliString> gens);

    size_t num_qubits() const {
        return gens_.size();
    }
    const std::vector<PauliString> &generators() const {
        return gens_;
    }

    /// Appends a qubit in |+> (or |0>) and returns its index.
    size_t add_qubit_plus();
    size_t add_qubit_zero();

    void apply_cz(size_t a, size_t b);
    void apply_gate(LocalGate gate, size_t q);
    /// Conjugates by a Pauli product: flips the sign of each anticommuting generator.
    void apply_pauli(const PauliString &p);

    /// Measures `obs`. A random outcome takes `forced` if given, else +1.
    /// Throws ForcedImpossibleError when `forced` contradicts a deterministic outcome.
    MeasureResult measure(const PauliString &obs, std::optional<bool> forced = std::nullopt);
    /// True when measuring `obs` would give a random outcome.
    bool is_random(const PauliString &obs) const;

    /// Removes qubit q, which must be in a product state with the rest.
    /// Throws SimulationError otherwise.
    void discard(size_t q);

    /// Generator subset whose product is +-p, and the sign bit of that
    /// product relative to p. nullopt when +-p is not in the group.
    std::optional<std::pair<BitVec, bool>> decompose(const PauliString &p) const;

    bool is_valid() const;

    /// One "+XZIZ" row per generator, newline separated.
    std::string str() const;

    bool operator==(const StabilizerState &) const = default;

   private:
    explicit StabilizerState(std::vector<PauliString> gens) : gens_(std::move(gens)) {
    }
    void check_qubit(size_t q) const;

    std::vector<PauliString> gens_;
};

/// Stabilized by X_v Z_{N(v)} for every v.
StabilizerState graph_state(const Graph &g);

/// Pauli P (Z-type) with P|s> = |G>, or nullopt when |s> is not LP-equivalent
/// to |G>. Throws SizeMismatchError on qubit count mismatch.
std::optional<PauliString> lp_equivalent_to(const StabilizerState &s, const Graph &g);

/// |s> equals |G> exactly.
bool equals_graph_state(const StabilizerState &s, const Graph &g);

/// Undoes expansion steps on a state by measuring X on each helper pair (in
/// reverse order), applying the Z corrections and discarding the helpers.
/// Helpers must be the highest-index qubits, as produced by expand().
StabilizerState contract_by_x_measurements(StabilizerState s, const std::vector<ExpansionStep> &steps,
                                           const OutcomeSource &outcomes = nullptr);

}  // namespace graphprep

#endif
