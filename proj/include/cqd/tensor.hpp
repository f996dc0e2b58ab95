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

#ifndef CQD_TENSOR_HPP
#define CQD_TENSOR_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cqd/wire.hpp"

namespace cqd {

/// Hard cap on the number of entries of any tensor built during evaluation.
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 20;

/// Dense complex multi-array. Entries are stored row-major: the first index
/// is the most significant. For the semantics of a diagram the indices are
/// the boundary ports, inputs left-to-right then outputs left-to-right.
class Tensor {
   public:
    Tensor();  // rank-0 tensor holding 1
    Tensor(std::vector<std::size_t> shape, std::vector<Complex> data);

    static Tensor zeros(std::vector<std::size_t> shape);
    static Tensor scalar(Complex value);

    const std::vector<std::size_t> &shape() const {
        return shape_;
    }
    std::size_t rank() const {
        return shape_.size();
    }
    std::size_t size() const {
        return data_.size();
    }
    std::span<const Complex> data() const {
        return data_;
    }
    std::span<Complex> data() {
        return data_;
    }
    const Complex &operator[](std::size_t flat) const {
        return data_[flat];
    }
    Complex &operator[](std::size_t flat) {
        return data_[flat];
    }
    Complex at(std::span<const std::size_t> index) const;
    std::size_t flat_index(std::span<const std::size_t> index) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    /// Reorders indices: result index k is this tensor's index perm[k].
    Tensor permuted(std::span<const std::size_t> perm) const;
    Tensor conj() const;
    Tensor scaled(Complex factor) const;
    /// Outer product; the indices of `other` follow those of this tensor.
    Tensor kron(const Tensor &other) const;

    double max_abs() const;
    double max_abs_diff(const Tensor &other) const;
    bool approx_equal(const Tensor &other, double tol) const;

    bool operator==(const Tensor &) const = default;

   private:
    std::vector<std::size_t> shape_;
    std::vector<Complex> data_;
};

std::size_t shape_product(std::span<const std::size_t> shape);

/// Doubles a plain tensor leg-wise: for each leg of dimension d the result has
/// an index of size d^2 laid out as ket * d + bra, and the entry is
/// t[kets] * conj(t[bras]). Legs flagged in `shared` are classical: their
/// index is not doubled and the same value is used on both sides.
Tensor double_tensor(const Tensor &plain, const std::vector<bool> &shared = {});

/// Columnar text export: a `shape` header line followed by one `re im` row
/// per entry in flat order, printed with 17 significant digits.
std::string to_columnar_text(const Tensor &t);
Tensor from_columnar_text(const std::string &text);

std::ostream &operator<<(std::ostream &out, const Tensor &t);

}  // namespace cqd

#endif
