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

#include "cqd/phases.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cqd/cq.hpp"
#include "cqd/errors.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"
#include "cqd/rewrite.hpp"

namespace cqd {

std::optional<PhaseVector> is_phase_state(const Diagram &psi, double tol) {
    if (!psi.inputs.empty() || psi.outputs.size() != 1 || !psi.outputs[0].is_quantum()) return std::nullopt;
    int d = psi.outputs[0].base_dim;
    if (!is_pure(psi)) return std::nullopt;
    Matrix rho = density_matrix(evaluate(psi), d);
    double p0 = rho(0, 0).real();
    if (p0 <= tol) return std::nullopt;
    for (int i = 0; i < d; i++) {
        if (std::abs(rho(i, i) - p0) > tol * std::max(1.0, p0)) return std::nullopt;
    }
    std::vector<Complex> raw;
    for (int i = 0; i < d; i++) raw.push_back(rho(i, 0) / p0);
    return PhaseVector::normalized(raw);
}

PhaseVector phase_sum(const PhaseVector &a, const PhaseVector &b) {
    if (a.dim() != b.dim()) throw DimMismatch("phases of different dimensions");
    return a * b;
}

Diagram phase_sum_diagram(const PhaseVector &a, const PhaseVector &b) {
    if (a.dim() != b.dim()) throw DimMismatch("phases of different dimensions");
    return compose_seq(compose_par(phase_state(a), phase_state(b)), quantum_spider(a.dim(), 2, 1));
}

Diagram phase_gate(const PhaseVector &a) {
    return phase_gate_diagram(a);
}

namespace {

Diagram gates_on_ghz(const PhaseVector &a, const PhaseVector &b, const PhaseVector &c) {
    return compose_seq(ghz_state(a.dim()), compose_par({phase_gate(a), phase_gate(b), phase_gate(c)}));
}

}  // namespace

GhzPhaseReport ghz_phase_fusion_demo(const PhaseVector &a, const PhaseVector &b, const PhaseVector &c, double tol) {
    if (a.dim() != b.dim() || a.dim() != c.dim()) throw DimMismatch("phases of different dimensions");
    int d = a.dim();
    GhzPhaseReport rep{phase_sum(phase_sum(a, b), c)};
    Diagram lhs = gates_on_ghz(a, b, c);
    Diagram fused = quantum_spider(d, 0, 3, rep.total);
    auto note = [&](const NumericComparison &cmp) {
        rep.max_deviation = std::max(rep.max_deviation, cmp.deviation);
        return cmp.equal;
    };
    rep.fused = note(compare_numeric(lhs, fused, {tol, ScalarMode::Strict}));
    rep.fused_by_rewriting = isomorphic(normalize(lhs).diagram, fused, ScalarMode::Strict, tol);
    std::array<const PhaseVector *, 3> order{&a, &b, &c};
    std::sort(order.begin(), order.end());
    rep.permutation_invariant = true;
    do {
        Diagram perm = gates_on_ghz(*order[0], *order[1], *order[2]);
        rep.permutation_invariant &= note(compare_numeric(lhs, perm, {tol, ScalarMode::Strict}));
    } while (std::next_permutation(order.begin(), order.end()));
    Diagram measure_all = compose_par({measure(d), measure(d), measure(d)});
    rep.measurement_erases = note(compare_numeric(compose_seq(lhs, measure_all), compose_seq(ghz_state(d), measure_all),
                                                  {tol, ScalarMode::Strict}));
    return rep;
}

}  // namespace cqd
