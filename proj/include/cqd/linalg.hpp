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

#ifndef CQD_LINALG_HPP
#define CQD_LINALG_HPP

#include <random>

#include <Eigen/Dense>

#include "cqd/diagram.hpp"
#include "cqd/tensor.hpp"

namespace cqd {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Matrix view of a tensor whose first `n_in` indices are inputs:
/// rows run over outputs, columns over inputs.
Matrix tensor_to_matrix(const Tensor &t, std::size_t n_in);
Tensor matrix_to_tensor(const Matrix &m, std::vector<std::size_t> shape);
/// Evaluates a diagram and views it as a matrix.
Matrix diagram_matrix(const Diagram &d);

/// Reads a single quantum wire's doubled index into a d x d density matrix.
Matrix density_matrix(const Tensor &doubled_state, int dim);
/// Joint density matrix of a state on several quantum wires, ordered as the
/// Kronecker product of the wires.
Matrix joint_density_matrix(const Tensor &doubled_state, const std::vector<int> &dims);

/// Hermitian square root with eigenvalues clamped at zero.
Matrix psd_sqrt(const Matrix &m);
Matrix random_unitary(int n, std::mt19937_64 &rng);
Matrix random_complex_matrix(int rows, int cols, std::mt19937_64 &rng);
double operator_norm(const Matrix &m);

}  // namespace cqd

#endif
