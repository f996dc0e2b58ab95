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

#include "cqd/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "cqd/errors.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"

namespace cqd {

std::string slocc_label(SloccClass c) {
    switch (c) {
        case SloccClass::Separable:
            return "Separable-ABC";
        case SloccClass::BiseparableA_BC:
            return "Biseparable-A|BC";
        case SloccClass::BiseparableB_AC:
            return "Biseparable-B|AC";
        case SloccClass::BiseparableC_AB:
            return "Biseparable-C|AB";
        case SloccClass::W:
            return "W";
        case SloccClass::GHZ:
            return "GHZ";
    }
    return "?";
}

namespace {

void check_local_channel(const Diagram &phi) {
    if (phi.inputs.size() != 1 || !phi.inputs[0].is_classical() || phi.outputs.size() != 1 ||
        !phi.outputs[0].is_quantum()) {
        throw WrongSignature("expected a process from one classical wire to one quantum wire");
    }
    if (!is_causal(phi)) throw NotCausal("local process is not causal");
}

}  // namespace

Diagram make_disentangled(const Diagram &phi1, const Diagram &phi2, const std::optional<ProbDist> &p) {
    check_local_channel(phi1);
    check_local_channel(phi2);
    if (phi1.inputs[0] != phi2.inputs[0]) throw DimMismatch("local processes read different classical wires");
    int d = phi1.inputs[0].base_dim;
    Diagram correlations;
    if (p) {
        if (p->dim() != d) throw DimMismatch("distribution dimension differs from the classical wire");
        correlations = compose_seq(p->state(), copy_spider(d));
    } else {
        correlations = compose_par(classical_spider(d, 0, 2), scalar(1.0 / d));
    }
    return compose_seq(correlations, compose_par(phi1, phi2));
}

namespace {

Matrix bipartite_rho(const Diagram &state, int &da, int &db) {
    if (!state.inputs.empty() || state.outputs.size() != 2 || !state.outputs[0].is_quantum() ||
        !state.outputs[1].is_quantum()) {
        throw WrongSignature("expected a state on two quantum wires");
    }
    da = state.outputs[0].base_dim;
    db = state.outputs[1].base_dim;
    Matrix rho = joint_density_matrix(evaluate(state), {da, db});
    Complex tr = rho.trace();
    if (std::abs(tr) > 1e-15) rho /= tr;
    return rho;
}

}  // namespace

double min_partial_transpose_eigenvalue(const Diagram &state) {
    int da = 0, db = 0;
    Matrix rho = bipartite_rho(state, da, db);
    Matrix pt(rho.rows(), rho.cols());
    for (int a = 0; a < da; a++) {
        for (int b = 0; b < db; b++) {
            for (int a2 = 0; a2 < da; a2++) {
                for (int b2 = 0; b2 < db; b2++) {
                    pt(a * db + b, a2 * db + b2) = rho(a * db + b2, a2 * db + b);
                }
            }
        }
    }
    Matrix h = (pt + pt.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool is_entangled_2q(const Diagram &state) {
    int da = 0, db = 0;
    bipartite_rho(state, da, db);
    if (std::min(da, db) < 2 || da * db > 6) {
        throw WrongSignature("the partial-transpose test is only exact up to 2x3 systems");
    }
    return min_partial_transpose_eigenvalue(state) < -1e-9;
}

namespace {

void check_three_qubits(const std::vector<Complex> &psi) {
    if (psi.size() != 8) throw ShapeMismatch("expected eight amplitudes of a three-qubit state");
}

int reduced_rank(const std::vector<Complex> &psi, int party) {
    Matrix m(2, 4);
    for (int idx = 0; idx < 8; idx++) {
        int bits[3] = {(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
        int rest = 0;
        for (int k = 0; k < 3; k++) {
            if (k != party) rest = rest * 2 + bits[k];
        }
        m(bits[party], rest) = psi[static_cast<std::size_t>(idx)];
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto &sv = svd.singularValues();
    return sv(1) > 1e-9 * std::max(1.0, sv(0)) ? 2 : 1;
}

}  // namespace

std::array<int, 3> local_ranks(const std::vector<Complex> &psi) {
    check_three_qubits(psi);
    return {reduced_rank(psi, 0), reduced_rank(psi, 1), reduced_rank(psi, 2)};
}

double three_tangle(const std::vector<Complex> &psi) {
    check_three_qubits(psi);
    auto a = [&](int i, int j, int k) { return psi[static_cast<std::size_t>(i * 4 + j * 2 + k)]; };
    Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                 a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                 a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                 a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

SloccClass slocc_classify_3q(const std::vector<Complex> &psi) {
    check_three_qubits(psi);
    double norm = 0.0;
    for (auto z : psi) norm += std::norm(z);
    if (std::abs(std::sqrt(norm) - 1.0) > 1e-9) {
        throw NotNormalized("state has norm " + std::to_string(std::sqrt(norm)));
    }
    auto r = local_ranks(psi);
    int ones = (r[0] == 1) + (r[1] == 1) + (r[2] == 1);
    if (ones >= 2) return SloccClass::Separable;
    if (ones == 1) {
        if (r[0] == 1) return SloccClass::BiseparableA_BC;
        if (r[1] == 1) return SloccClass::BiseparableB_AC;
        return SloccClass::BiseparableC_AB;
    }
    return three_tangle(psi) > 1e-9 ? SloccClass::GHZ : SloccClass::W;
}

bool slocc_convert_check(const std::vector<Complex> &psi, const std::vector<Complex> &target,
                         const std::vector<int> &dims, const std::vector<Matrix> &locals, double tol) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    if (psi.size() != n || target.size() != n || locals.size() != dims.size()) {
        throw ShapeMismatch("states and local operators do not match the party dimensions");
    }
    Matrix l = Matrix::Identity(1, 1);
    for (std::size_t k = 0; k < dims.size(); k++) {
        if (locals[k].rows() != dims[k] || locals[k].cols() != dims[k]) {
            throw ShapeMismatch("local operator " + std::to_string(k) + " has the wrong size");
        }
        Matrix next(l.rows() * dims[k], l.cols() * dims[k]);
        for (Eigen::Index i = 0; i < l.rows(); i++) {
            for (Eigen::Index j = 0; j < l.cols(); j++) {
                next.block(i * dims[k], j * dims[k], dims[k], dims[k]) = l(i, j) * locals[k];
            }
        }
        l = next;
    }
    Vector v = Eigen::Map<const Vector>(psi.data(), static_cast<Eigen::Index>(n));
    Vector out = l * v;
    Tensor t_out({n}, std::vector<Complex>(out.data(), out.data() + out.size()));
    Tensor t_target({n}, target);
    return compare_tensors(t_out, t_target, {tol, ScalarMode::UpToScalar}).equal;
}

FrobeniusDiagrams candidate_diagrams(const FrobeniusCandidate &c) {
    auto w = WireType::classical(2);
    return {box("mu", {w, w}, {w}, c.mult), box("eta", {}, {w}, c.unit), box("delta", {w}, {w, w}, c.comult),
            box("eps", {w}, {}, c.counit)};
}

FrobeniusCandidate anti_spider_candidate() {
    FrobeniusCandidate c{Tensor::zeros({2, 2, 2}), Tensor::zeros({2}), Tensor::zeros({2, 2, 2}), Tensor::zeros({2})};
    // mult(in1, in2, out)
    c.mult[0b000] = 1.0;
    c.mult[0b011] = 1.0;
    c.mult[0b101] = 1.0;
    c.unit[0] = 1.0;
    // comult(in, out1, out2)
    c.comult[0b001] = 1.0;
    c.comult[0b010] = 1.0;
    c.comult[0b111] = 1.0;
    c.counit[1] = 1.0;
    return c;
}

FrobeniusCandidate onb_spider_candidate() {
    FrobeniusCandidate c{Tensor::zeros({2, 2, 2}), Tensor::zeros({2}), Tensor::zeros({2, 2, 2}), Tensor::zeros({2})};
    c.mult[0b000] = 1.0;
    c.mult[0b111] = 1.0;
    c.comult[0b000] = 1.0;
    c.comult[0b111] = 1.0;
    c.unit[0] = c.unit[1] = 1.0;
    c.counit[0] = c.counit[1] = 1.0;
    return c;
}

std::pair<Diagram, Diagram> anti_special_sides(const FrobeniusCandidate &c) {
    auto g = candidate_diagrams(c);
    Diagram md = compose_seq(g.comult, g.mult);
    Diagram state = compose_seq(g.unit, md);
    Diagram effect = compose_seq(md, g.counit);
    return {md, compose_par(effect, state)};
}

std::vector<Complex> three_leg_state(const FrobeniusCandidate &c) {
    auto g = candidate_diagrams(c);
    auto w = WireType::classical(2);
    Tensor t = evaluate(compose_seq({g.unit, g.comult, compose_par(g.comult, identity(w))}));
    return {t.data().begin(), t.data().end()};
}

AntiSpiderFamily register_anti_spider(const FrobeniusCandidate &c) {
    auto g = candidate_diagrams(c);
    auto w = WireType::classical(2);
    Diagram id = identity(w);
    AntiSpiderFamily fam;
    fam.generators = c;
    auto law = [&](const std::string &name, const Diagram &lhs, const Diagram &rhs, ScalarMode mode) {
        NumericComparison cmp = compare_numeric(lhs, rhs, {1e-9, mode});
        bool nonzero = evaluate(lhs).max_abs() > 1e-9;
        if (!cmp.equal || !nonzero) {
            throw AxiomFailure("law '" + name + "' fails (deviation " + std::to_string(cmp.deviation) + ")");
        }
        fam.laws_checked.push_back(name);
    };
    const auto strict = ScalarMode::Strict;
    law("unit", compose_seq(compose_par(g.unit, id), g.mult), id, strict);
    law("unit", compose_seq(compose_par(id, g.unit), g.mult), id, strict);
    law("counit", compose_seq(g.comult, compose_par(g.counit, id)), id, strict);
    law("counit", compose_seq(g.comult, compose_par(id, g.counit)), id, strict);
    law("associativity", compose_seq(compose_par(g.mult, id), g.mult), compose_seq(compose_par(id, g.mult), g.mult),
        strict);
    law("coassociativity", compose_seq(g.comult, compose_par(g.comult, id)),
        compose_seq(g.comult, compose_par(id, g.comult)), strict);
    law("commutativity", compose_seq(swap(w, w), g.mult), g.mult, strict);
    law("cocommutativity", compose_seq(g.comult, swap(w, w)), g.comult, strict);
    Diagram dm = compose_seq(g.mult, g.comult);
    law("frobenius", compose_seq(compose_par(id, g.comult), compose_par(g.mult, id)), dm, strict);
    law("frobenius", compose_seq(compose_par(g.comult, id), compose_par(id, g.mult)), dm, strict);
    auto [lhs, rhs] = anti_special_sides(c);
    law("anti-special", lhs, rhs, ScalarMode::UpToScalar);

    std::vector<Complex> s = three_leg_state(c);
    double norm = 0.0;
    for (auto z : s) norm += std::norm(z);
    for (auto &z : s) z /= std::sqrt(norm);
    fam.state3 = s;
    fam.state_class = slocc_classify_3q(s);
    if (fam.state_class != SloccClass::W) {
        throw AxiomFailure("the three-legged state is " + slocc_label(fam.state_class) + ", not W");
    }
    std::vector<Complex> ghz = three_leg_state(onb_spider_candidate());
    for (auto &z : ghz) z /= std::sqrt(2.0);
    fam.spider_state_class = slocc_classify_3q(ghz);
    return fam;
}

}  // namespace cqd
