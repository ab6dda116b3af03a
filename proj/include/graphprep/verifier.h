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
#ifndef GRAPHPREP_VERIFIER_H
#define GRAPHPREP_VERIFIER_H

#include <cstdint>
#include <string>
#include <vector>

#include "graphprep/budget.h"
#include "graphprep/schedule.h"
#include "graphprep/schedule_json.h"
#include "graphprep/stabilizer.h"

namespace graphprep {

struct VerifyMode {
    bool exhaustive = false;
    uint64_t seed = 0x5eed;
    /// Branches drawn in sampled mode.
    size_t samples = 64;

    static VerifyMode exhaustive_mode(uint64_t seed = 0x5eed) {
        return VerifyMode{true, seed, 0};
    }
    static VerifyMode sampled(uint64_t seed, size_t count) {
        return VerifyMode{false, seed, count};
    }
};

struct BranchFailure {
    /// Outcomes of the random measurements, in op order.
    std::vector<bool> branch;
    std::string reason;
};

struct CorrectionExample {
    std::vector<bool> branch;
    /// Residual Pauli taking the final state to the prepared graph state.
    PauliString correction;
};

struct VerificationReport {
    bool ok = false;
    size_t branches_checked = 0;
    bool exhaustive = false;
    size_t random_measurements = 0;
    /// True when the schedule carries its own corrections, so the final state
    /// must equal the graph state exactly.
    bool exact_required = false;
    std::vector<CorrectionExample> correction_examples;
    ComplexityMetrics measured_metrics;
    std::vector<BranchFailure> failures;
};

/// Number of random-outcome measurements when the schedule is replayed from
/// the seeded initial state. Stabilizer determinism does not depend on
/// earlier outcomes, so this is the same on every branch.
size_t count_random_measurements(const Schedule &s, uint64_t seed = 0x5eed);

/// Replays the schedule on every outcome branch (exhaustive) or on sampled
/// branches and checks the final state against the prepared graph. Qubits
/// present at the start are put in a seeded random stabilizer state.
/// Throws BudgetExceededError when exhaustive mode would exceed
/// budgets.max_exhaustive_measurements random outcomes.
VerificationReport verify(const Schedule &s, const VerifyMode &mode, const Budgets &budgets = {});

Json report_to_json(const VerificationReport &r);

}  // namespace graphprep

#endif
