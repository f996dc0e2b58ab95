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

#include "cqd/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "cqd/errors.hpp"
#include "cqd/evaluate.hpp"

namespace cqd {

Matrix tensor_to_matrix(const Tensor &t, std::size_t n_in) {
    std::size_t in_size = 1;
    for (std::size_t k = 0; k < n_in; k++) in_size *= t.shape().at(k);
    std::size_t out_size = t.size() / in_size;
    Matrix m(static_cast<Eigen::Index>(out_size), static_cast<Eigen::Index>(in_size));
    for (std::size_t i = 0; i < in_size; i++) {
        for (std::size_t o = 0; o < out_size; o++) {
            m(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i)) = t[i * out_size + o];
        }
    }
    return m;
}

Tensor matrix_to_tensor(const Matrix &m, std::vector<std::size_t> shape) {
    Tensor t = Tensor::zeros(std::move(shape));
    auto out_size = static_cast<std::size_t>(m.rows());
    auto in_size = static_cast<std::size_t>(m.cols());
    if (in_size * out_size != t.size()) {
        throw ShapeMismatch("matrix size does not match the tensor shape");
    }
    for (std::size_t i = 0; i < in_size; i++) {
        for (std::size_t o = 0; o < out_size; o++) {
            t[i * out_size + o] = m(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i));
        }
    }
    return t;
}

Matrix diagram_matrix(const Diagram &d) {
    return tensor_to_matrix(evaluate(d), d.inputs.size());
}

Matrix density_matrix(const Tensor &doubled_state, int dim) {
    return joint_density_matrix(doubled_state, {dim});
}

Matrix joint_density_matrix(const Tensor &doubled_state, const std::vector<int> &dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    if (doubled_state.size() != n * n) {
        throw ShapeMismatch("state does not live on the given quantum wires");
    }
    Matrix rho(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t flat = 0; flat < doubled_state.size(); flat++) {
        std::size_t rest = flat, ket = 0, bra = 0, stride = 1;
        for (std::size_t w = dims.size(); w-- > 0;) {
            auto d = static_cast<std::size_t>(dims[w]);
            std::size_t idx = rest % (d * d);
            rest /= d * d;
            ket += (idx / d) * stride;
            bra += (idx % d) * stride;
            stride *= d;
        }
        rho(static_cast<Eigen::Index>(ket), static_cast<Eigen::Index>(bra)) = doubled_state[flat];
    }
    return rho;
}

Matrix psd_sqrt(const Matrix &m) {
    Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); i++) {
        ev(i) = ev(i) < 0.0 ? 0.0 : std::sqrt(ev(i));
    }
    return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Matrix random_complex_matrix(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(rows, cols);
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) m(r, c) = Complex(g(rng), g(rng));
    }
    return m;
}

Matrix random_unitary(int n, std::mt19937_64 &rng) {
    Matrix z = random_complex_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    Matrix r = qr.matrixQR();
    for (int i = 0; i < n; i++) {
        Complex d = r(i, i);
        double a = std::abs(d);
        q.col(i) *= a > 0 ? d / a : Complex(1.0);
    }
    return q;
}

double operator_norm(const Matrix &m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace cqd
