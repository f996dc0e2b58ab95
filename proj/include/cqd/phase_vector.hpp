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

#ifndef CQD_PHASE_VECTOR_HPP
#define CQD_PHASE_VECTOR_HPP

#include <vector>

#include "cqd/wire.hpp"

namespace cqd {

/// Decoration of a spider of dimension d: d unit-modulus numbers with the
/// first pinned to 1. Group operations are componentwise, so the phases of
/// one dimension form the (d-1)-torus.
class PhaseVector {
   public:
    /// Validates the gauge (component 0 equal to 1) and unit moduli to 1e-12.
    explicit PhaseVector(std::vector<Complex> components);

    static PhaseVector unit(int dim);
    /// Angles of components 1..d-1, in radians.
    static PhaseVector from_angles(const std::vector<double> &angles);
    /// Divides out component 0 and projects each entry onto the unit circle.
    static PhaseVector normalized(const std::vector<Complex> &raw);

    int dim() const {
        return static_cast<int>(components_.size());
    }
    const std::vector<Complex> &components() const {
        return components_;
    }
    const Complex &operator[](std::size_t i) const {
        return components_[i];
    }
    std::vector<double> angles() const;

    PhaseVector operator*(const PhaseVector &other) const;
    PhaseVector inverse() const;
    bool is_unit(double tol = 1e-12) const;
    bool approx_equal(const PhaseVector &other, double tol) const;

    bool operator==(const PhaseVector &) const = default;

   private:
    std::vector<Complex> components_;
};

}  // namespace cqd

#endif
