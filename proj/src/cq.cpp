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

#include "cqd/cq.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numeric>

#include "cqd/errors.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"

namespace cqd {

ProbDist::ProbDist(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw NotNormalized("a distribution needs at least one outcome");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) throw NotNormalized("probabilities must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw NotNormalized("probabilities sum to " + std::to_string(sum));
    }
}

ProbDist ProbDist::uniform(int dim) {
    return ProbDist(std::vector<double>(static_cast<std::size_t>(dim), 1.0 / dim));
}

bool ProbDist::full_support() const {
    return *std::min_element(weights_.begin(), weights_.end()) > 1e-12;
}

std::vector<double> ProbDist::inverse() const {
    if (!full_support()) throw NoFullSupport("distribution has a zero weight");
    std::vector<double> out;
    for (double w : weights_) out.push_back(1.0 / w);
    return out;
}

Diagram ProbDist::state() const {
    std::vector<Complex> data(weights_.begin(), weights_.end());
    return box("p", {}, {WireType::classical(dim())}, Tensor({weights_.size()}, data));
}

namespace {

std::size_t product(const std::vector<int> &dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
}

// Plain tensor over (input wires, output wires) of a Kronecker-ordered map.
Tensor map_tensor(const Matrix &m, const std::vector<int> &in_dims, const std::vector<int> &out_dims) {
    std::vector<std::size_t> shape;
    for (int d : in_dims) shape.push_back(static_cast<std::size_t>(d));
    for (int d : out_dims) shape.push_back(static_cast<std::size_t>(d));
    return matrix_to_tensor(m, shape);
}

}  // namespace

Diagram doubled_box(const std::string &name, const Matrix &m, std::vector<int> in_dims, std::vector<int> out_dims) {
    if (in_dims.empty() && out_dims.empty()) {
        if (m.cols() > 1) in_dims = {static_cast<int>(m.cols())};
        if (m.rows() > 1) out_dims = {static_cast<int>(m.rows())};
    }
    if (product(in_dims) != static_cast<std::size_t>(m.cols()) || product(out_dims) != static_cast<std::size_t>(m.rows())) {
        throw ShapeMismatch("map does not fit the given wire dimensions");
    }
    std::vector<WireType> ins, outs;
    for (int d : in_dims) ins.push_back(WireType::quantum(d));
    for (int d : out_dims) outs.push_back(WireType::quantum(d));
    return box(name, ins, outs, double_tensor(map_tensor(m, in_dims, out_dims)), BoxFlavor::Doubled);
}

Diagram plain_box(const std::string &name, const Matrix &m) {
    std::vector<int> in_dims{static_cast<int>(m.cols())}, out_dims{static_cast<int>(m.rows())};
    return box(name, {WireType::classical(in_dims[0])}, {WireType::classical(out_dims[0])},
               map_tensor(m, in_dims, out_dims));
}

Diagram terminate_all(const std::vector<WireType> &wires) {
    Diagram out;
    for (const auto &w : wires) {
        out = compose_par(out, w.is_quantum() ? discard(w) : delete_spider(w.base_dim));
    }
    return out;
}

bool is_causal(const Diagram &p, double tol) {
    return numeric_equal(compose_seq(p, terminate_all(p.outputs)), terminate_all(p.inputs), {tol, ScalarMode::Strict});
}

bool is_pure(const Diagram &p, double rel_tol) {
    std::vector<int> dims;
    for (const auto *side : {&p.inputs, &p.outputs}) {
        for (const auto &w : *side) {
            if (!w.is_quantum()) throw WrongSignature("purity is defined for quantum boundaries only");
            dims.push_back(w.base_dim);
        }
    }
    Matrix bent = joint_density_matrix(evaluate(p), dims);
    Eigen::JacobiSVD<Matrix> svd(bent);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 1e-12) return false;
    return sv.size() < 2 || sv(1) <= rel_tol * sv(0);
}

namespace {

Matrix classical_matrix(const Diagram &p) {
    for (const auto *side : {&p.inputs, &p.outputs}) {
        for (const auto &w : *side) {
            if (!w.is_classical()) throw WrongSignature("expected a classical process");
        }
    }
    return diagram_matrix(p);
}

}  // namespace

bool is_stochastic(const Diagram &p, double tol) {
    Matrix m = classical_matrix(p);
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        Complex sum = 0.0;
        for (Eigen::Index r = 0; r < m.rows(); r++) {
            if (std::abs(m(r, c).imag()) > tol || m(r, c).real() < -1e-12) return false;
            sum += m(r, c);
        }
        if (std::abs(sum - 1.0) > tol) return false;
    }
    return true;
}

bool is_deterministic(const Diagram &p, double tol) {
    Matrix m = classical_matrix(p);
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        int ones = 0;
        for (Eigen::Index r = 0; r < m.rows(); r++) {
            if (std::abs(m(r, c) - 1.0) <= tol) {
                ones++;
            } else if (std::abs(m(r, c)) > tol) {
                return false;
            }
        }
        if (ones != 1) return false;
    }
    return true;
}

Diagram decoherence(int dim) {
    return compose_seq(measure(dim), encode(dim));
}

Diagram non_demolition_measurement(int dim) {
    return spider(dim, {WireType::quantum(dim)}, {WireType::classical(dim), WireType::quantum(dim)});
}

Diagram rotated_measurement(const Matrix &u) {
    int d = static_cast<int>(u.rows());
    Diagram pre = doubled_box("U^dag", u.adjoint());
    Diagram post = compose_par(identity(WireType::classical(d)), doubled_box("U", u));
    return compose_seq({pre, non_demolition_measurement(d), post});
}

Diagram kraus_measurement(const std::vector<Matrix> &kraus) {
    if (kraus.empty()) throw ShapeMismatch("need at least one Kraus operator");
    auto d = static_cast<std::size_t>(kraus[0].cols());
    auto k = kraus.size();
    Tensor plain = Tensor::zeros({d, k, d});
    for (std::size_t c = 0; c < k; c++) {
        if (static_cast<std::size_t>(kraus[c].rows()) != d || static_cast<std::size_t>(kraus[c].cols()) != d) {
            throw ShapeMismatch("Kraus operators must be square of equal size");
        }
        for (std::size_t i = 0; i < d; i++) {
            for (std::size_t o = 0; o < d; o++) {
                plain[(i * k + c) * d + o] = kraus[c](static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i));
            }
        }
    }
    auto q = WireType::quantum(static_cast<int>(d));
    return box("K", {q}, {WireType::classical(static_cast<int>(k)), q}, double_tensor(plain, {false, true, false}),
               BoxFlavor::Doubled);
}

bool is_vn_measurement(const Diagram &p, double tol) {
    if (p.inputs.size() != 1 || !p.inputs[0].is_quantum() || p.outputs.size() != 2 || !p.outputs[0].is_classical() ||
        p.outputs[1] != p.inputs[0]) {
        throw WrongSignature("expected a non-demolition measurement q -> (c, q)");
    }
    auto c = p.outputs[0];
    auto q = p.inputs[0];
    Diagram twice = compose_seq(p, compose_par(identity(c), p));
    Diagram copied = compose_seq(p, compose_par(copy_spider(c.base_dim), identity(q)));
    return numeric_equal(twice, copied, {tol, ScalarMode::Strict}) && is_causal(p, tol);
}

std::vector<double> born_probabilities(const Diagram &state) {
    if (!state.inputs.empty() || state.outputs.size() != 1 || !state.outputs[0].is_quantum()) {
        throw WrongSignature("expected a state on one quantum wire");
    }
    Tensor t = evaluate(compose_seq(state, measure(state.outputs[0].base_dim)));
    std::vector<double> out;
    for (auto z : t.data()) out.push_back(z.real());
    return out;
}

Diagram povm_diagram(const std::vector<Matrix> &effects) {
    if (effects.empty()) throw ShapeMismatch("need at least one effect");
    auto d = static_cast<std::size_t>(effects[0].rows());
    auto n = effects.size();
    Tensor t = Tensor::zeros({d * d, n});
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t k = 0; k < d; k++) {
            for (std::size_t b = 0; b < d; b++) {
                t[(k * d + b) * n + c] = effects[c](static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(k));
            }
        }
    }
    return box("povm", {WireType::quantum(static_cast<int>(d))}, {WireType::classical(static_cast<int>(n))}, t);
}

namespace {

void check_povm_shape(const Diagram &povm) {
    if (povm.inputs.size() != 1 || !povm.inputs[0].is_quantum() || povm.outputs.size() != 1 ||
        !povm.outputs[0].is_classical()) {
        throw WrongSignature("expected a demolition POVM q -> c");
    }
}

}  // namespace

std::vector<Matrix> povm_effects(const Diagram &povm) {
    check_povm_shape(povm);
    Tensor t = evaluate(povm);
    auto d = static_cast<std::size_t>(povm.inputs[0].base_dim);
    auto n = static_cast<std::size_t>(povm.outputs[0].base_dim);
    std::vector<Matrix> out(n, Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t k = 0; k < d; k++) {
            for (std::size_t b = 0; b < d; b++) {
                out[c](static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(k)) = t[(k * d + b) * n + c];
            }
        }
    }
    return out;
}

NaimarkDilation naimark_dilate(const Diagram &povm, double tol) {
    auto effects = povm_effects(povm);
    auto d = static_cast<Eigen::Index>(povm.inputs[0].base_dim);
    auto n = static_cast<Eigen::Index>(effects.size());
    Matrix sum = Matrix::Zero(d, d);
    for (const auto &e : effects) sum += e;
    if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
        throw NotCausal("POVM effects do not sum to the identity");
    }
    NaimarkDilation r;
    r.v = Matrix::Zero(d * n, d);
    for (Eigen::Index c = 0; c < n; c++) {
        Matrix k = psd_sqrt(effects[static_cast<std::size_t>(c)]);
        for (Eigen::Index s = 0; s < d; s++) {
            for (Eigen::Index i = 0; i < d; i++) r.v(s * n + c, i) = k(s, i);
        }
    }
    r.isometry_defect = operator_norm(r.v.adjoint() * r.v - Matrix::Identity(d, d));
    int di = static_cast<int>(d), ni = static_cast<int>(n);
    r.isometry = doubled_box("V", r.v, {di}, {di, ni});
    r.measurement = compose_par(discard(WireType::quantum(di)), measure(ni));
    r.composite = compose_seq(r.isometry, r.measurement);
    r.reconstruction_error = evaluate(r.composite).max_abs_diff(evaluate(povm));
    return r;
}

Diagram controlled_process(const std::vector<Diagram> &branches) {
    if (branches.empty()) throw ShapeMismatch("need at least one branch");
    const Diagram &first = branches.front();
    std::vector<Tensor> ts;
    for (const auto &b : branches) {
        if (b.inputs != first.inputs || b.outputs != first.outputs) {
            throw BoundaryMismatch("branches of a controlled process must share their signature");
        }
        ts.push_back(evaluate(b));
    }
    std::vector<std::size_t> shape{branches.size()};
    shape.insert(shape.end(), ts[0].shape().begin(), ts[0].shape().end());
    Tensor payload = Tensor::zeros(shape);
    std::size_t block = ts[0].size();
    for (std::size_t c = 0; c < ts.size(); c++) {
        for (std::size_t i = 0; i < block; i++) payload[c * block + i] = ts[c][i];
    }
    std::vector<WireType> ins{WireType::classical(static_cast<int>(branches.size()))};
    ins.insert(ins.end(), first.inputs.begin(), first.inputs.end());
    return box("ctrl", ins, first.outputs, payload);
}

Diagram mix(const std::vector<Diagram> &branches, const ProbDist &p) {
    if (!p.full_support()) throw NoFullSupport("mixtures need every weight strictly positive");
    if (static_cast<std::size_t>(p.dim()) != branches.size()) {
        throw DimMismatch("one weight per branch is required");
    }
    Diagram ctrl = controlled_process(branches);
    return compose_seq(compose_par(p.state(), identity(branches.front().inputs)), ctrl);
}

PurityExtremalReport check_purity_extremal(const std::vector<MixtureSample> &samples, double tol) {
    PurityExtremalReport rep;
    for (const auto &s : samples) {
        rep.samples++;
        Diagram m = mix(s.branches, ProbDist(s.weights));
        if (!is_pure(m)) {
            rep.impure++;
            continue;
        }
        rep.pure++;
        Tensor tm = evaluate(m);
        double worst = 0.0;
        for (const auto &b : s.branches) worst = std::max(worst, evaluate(b).max_abs_diff(tm));
        rep.max_branch_deviation = std::max(rep.max_branch_deviation, worst);
        if (worst > tol) rep.violations++;
    }
    return rep;
}

}  // namespace cqd
