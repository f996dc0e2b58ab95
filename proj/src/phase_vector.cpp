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

#include "cqd/phase_vector.hpp"

#include <cmath>

#include "cqd/errors.hpp"

namespace cqd {

PhaseVector::PhaseVector(std::vector<Complex> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw DimMismatch("a phase vector needs at least one component");
    }
    if (std::abs(components_[0] - Complex{1.0, 0.0}) > 1e-12) {
        throw InvalidDiagram("phase vector component 0 must be 1");
    }
    for (const auto &c : components_) {
        if (std::abs(std::abs(c) - 1.0) > 1e-12) {
            throw InvalidDiagram("phase vector components must have modulus 1");
        }
    }
}

PhaseVector PhaseVector::unit(int dim) {
    return PhaseVector(std::vector<Complex>(static_cast<std::size_t>(dim), Complex{1.0, 0.0}));
}

PhaseVector PhaseVector::from_angles(const std::vector<double> &angles) {
    std::vector<Complex> c{Complex{1.0, 0.0}};
    for (double a : angles) {
        c.push_back(std::polar(1.0, a));
    }
    return PhaseVector(std::move(c));
}

PhaseVector PhaseVector::normalized(const std::vector<Complex> &raw) {
    if (raw.empty() || std::abs(raw[0]) == 0.0) {
        throw InvalidDiagram("cannot normalize a phase vector with vanishing component 0");
    }
    std::vector<Complex> c;
    c.reserve(raw.size());
    for (const auto &z : raw) {
        Complex r = z / raw[0];
        c.push_back(r / std::abs(r));
    }
    c[0] = 1.0;
    return PhaseVector(std::move(c));
}

std::vector<double> PhaseVector::angles() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < components_.size(); i++) {
        out.push_back(std::arg(components_[i]));
    }
    return out;
}

PhaseVector PhaseVector::operator*(const PhaseVector &other) const {
    if (other.dim() != dim()) {
        throw DimMismatch("phase vectors of dimension " + std::to_string(dim()) + " and " +
                          std::to_string(other.dim()));
    }
    std::vector<Complex> c(components_.size());
    for (std::size_t i = 0; i < c.size(); i++) {
        c[i] = components_[i] * other.components_[i];
        c[i] /= std::abs(c[i]);
    }
    c[0] = 1.0;
    return PhaseVector(std::move(c));
}

PhaseVector PhaseVector::inverse() const {
    std::vector<Complex> c(components_.size());
    for (std::size_t i = 0; i < c.size(); i++) {
        c[i] = std::conj(components_[i]);
    }
    return PhaseVector(std::move(c));
}

bool PhaseVector::is_unit(double tol) const {
    for (const auto &c : components_) {
        if (std::abs(c - Complex{1.0, 0.0}) > tol) {
            return false;
        }
    }
    return true;
}

bool PhaseVector::approx_equal(const PhaseVector &other, double tol) const {
    if (other.dim() != dim()) {
        return false;
    }
    for (std::size_t i = 0; i < components_.size(); i++) {
        if (std::abs(components_[i] - other.components_[i]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace cqd
