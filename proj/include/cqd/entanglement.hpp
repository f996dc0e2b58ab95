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

#ifndef CQD_ENTANGLEMENT_HPP
#define CQD_ENTANGLEMENT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cqd/cq.hpp"
#include "cqd/diagram.hpp"
#include "cqd/linalg.hpp"

namespace cqd {

enum class SloccClass { Separable, BiseparableA_BC, BiseparableB_AC, BiseparableC_AB, W, GHZ };

/// Single-token label, e.g. "GHZ" or "Biseparable-A|BC".
std::string slocc_label(SloccClass c);

/// Bipartite state fed by perfectly correlated classical data: the classical
/// cup weighted by 1/D (or by `p` when given) plugged into phi1 and phi2.
/// Both processes must be causal with one classical input and one quantum
/// output; throws NotCausal or WrongSignature.
Diagram make_disentangled(const Diagram &phi1, const Diagram &phi2, const std::optional<ProbDist> &p = std::nullopt);

/// Smallest eigenvalue of the partial transpose (second party) of the
/// trace-normalized density matrix of a two-wire quantum state.
double min_partial_transpose_eigenvalue(const Diagram &state);
/// Partial-transpose test; exact for 2x2 and 2x3. Throws WrongSignature for
/// other shapes, or for anything but a state on two quantum wires.
bool is_entangled_2q(const Diagram &state);

/// psi over three qubits, eight amplitudes with index a*4 + b*2 + c.
std::array<int, 3> local_ranks(const std::vector<Complex> &psi);
/// 4 |hyperdeterminant|.
double three_tangle(const std::vector<Complex> &psi);
/// Throws NotNormalized unless |psi| = 1 within 1e-9.
SloccClass slocc_classify_3q(const std::vector<Complex> &psi);
/// Whether (L1 x ... x Ln) psi equals target up to a non-zero scalar.
/// `dims` are the local dimensions; locals[k] is dims[k] x dims[k].
bool slocc_convert_check(const std::vector<Complex> &psi, const std::vector<Complex> &target,
                         const std::vector<int> &dims, const std::vector<Matrix> &locals, double tol = 1e-9);

/// Generators of a commutative Frobenius algebra candidate on a qubit:
/// multiplication 2 -> 1, unit 0 -> 1, comultiplication 1 -> 2, counit 1 -> 0.
/// Payloads are plain tensors over (inputs, outputs).
struct FrobeniusCandidate {
    Tensor mult;
    Tensor unit;
    Tensor comult;
    Tensor counit;
};

struct FrobeniusDiagrams {
    Diagram mult, unit, comult, counit;
};

FrobeniusDiagrams candidate_diagrams(const FrobeniusCandidate &c);
/// The W-flavoured candidate: comultiplication |0> -> |01> + |10>,
/// |1> -> |11>, counit <1|, multiplication |00> -> |0>, |01>, |10> -> |1>,
/// unit |0>.
FrobeniusCandidate anti_spider_candidate();
/// The computational-basis spider family on a qubit.
FrobeniusCandidate onb_spider_candidate();
/// mu . delta and the separated form (mu . delta . eta)(eps . mu . delta).
std::pair<Diagram, Diagram> anti_special_sides(const FrobeniusCandidate &c);
/// The 0 -> 3 state (delta x 1) . delta . eta.
std::vector<Complex> three_leg_state(const FrobeniusCandidate &c);

struct AntiSpiderFamily {
    FrobeniusCandidate generators;
    std::vector<std::string> laws_checked;
    std::vector<Complex> state3;
    SloccClass state_class = SloccClass::W;
    SloccClass spider_state_class = SloccClass::GHZ;
};

/// Checks every law; throws AxiomFailure naming the first violated one.
AntiSpiderFamily register_anti_spider(const FrobeniusCandidate &c);

}  // namespace cqd

#endif
