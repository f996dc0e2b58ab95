// Copyright 2026 The cqdiag Authors
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

#ifndef CQD_PHASES_HPP
#define CQD_PHASES_HPP

#include <optional>

#include "cqd/diagram.hpp"
#include "cqd/phase_vector.hpp"

namespace cqd {

/// Extracts the phase vector of a pure, unbiased state on one quantum wire;
/// empty when the state is biased or mixed.
std::optional<PhaseVector> is_phase_state(const Diagram &psi, double tol = 1e-9);

/// Componentwise product; throws DimMismatch.
PhaseVector phase_sum(const PhaseVector &a, const PhaseVector &b);
/// The two phase states joined by a 2 -> 1 quantum spider.
Diagram phase_sum_diagram(const PhaseVector &a, const PhaseVector &b);
/// The 1 -> 1 quantum phase spider.
Diagram phase_gate(const PhaseVector &a);

struct GhzPhaseReport {
    PhaseVector total;
    bool fused = false;                 // gates on GHZ equal GHZ with a + b + c
    bool fused_by_rewriting = false;    // same, decided by normalization
    bool permutation_invariant = false; // over all orderings of (a, b, c)
    bool measurement_erases = false;    // measuring every leg forgets the phases
    double max_deviation = 0.0;
    bool pass() const {
        return fused && fused_by_rewriting && permutation_invariant && measurement_erases;
    }
};

GhzPhaseReport ghz_phase_fusion_demo(const PhaseVector &a, const PhaseVector &b, const PhaseVector &c,
                                     double tol = 1e-9);

}  // namespace cqd

#endif
