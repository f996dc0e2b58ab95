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

#include "cqd/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "cqd/errors.hpp"

namespace cqd {

std::size_t shape_product(std::span<const std::size_t> shape) {
    std::size_t n = 1;
    for (auto s : shape) {
        n *= s;
    }
    return n;
}

Tensor::Tensor() : data_{Complex{1.0, 0.0}} {
}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<Complex> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (shape_product(shape_) != data_.size()) {
        throw ShapeMismatch("tensor shape product " + std::to_string(shape_product(shape_)) +
                            " does not match entry count " + std::to_string(data_.size()));
    }
}

Tensor Tensor::zeros(std::vector<std::size_t> shape) {
    auto n = shape_product(shape);
    if (n > kMaxTensorEntries) {
        throw TensorTooLarge("tensor with " + std::to_string(n) + " entries exceeds the 2^20 cap");
    }
    return Tensor(std::move(shape), std::vector<Complex>(n));
}

Tensor Tensor::scalar(Complex value) {
    return Tensor({}, {value});
}

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < shape_.size(); k++) {
        flat = flat * shape_[k] + index[k];
    }
    return flat;
}

Complex Tensor::at(std::span<const std::size_t> index) const {
    return data_[flat_index(index)];
}

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(shape_.size());
    for (std::size_t k = shape_.size(); k-- > 0;) {
        idx[k] = flat % shape_[k];
        flat /= shape_[k];
    }
    return idx;
}

Tensor Tensor::permuted(std::span<const std::size_t> perm) const {
    std::vector<std::size_t> new_shape(perm.size());
    for (std::size_t k = 0; k < perm.size(); k++) {
        new_shape[k] = shape_[perm[k]];
    }
    // Stride of each source index, read in destination order.
    std::vector<std::size_t> src_stride(shape_.size(), 1);
    for (std::size_t k = shape_.size(); k-- > 1;) {
        src_stride[k - 1] = src_stride[k] * shape_[k];
    }
    std::vector<std::size_t> stride(perm.size());
    for (std::size_t k = 0; k < perm.size(); k++) {
        stride[k] = src_stride[perm[k]];
    }
    Tensor out(new_shape, std::vector<Complex>(data_.size()));
    std::vector<std::size_t> idx(perm.size(), 0);
    std::size_t src = 0;
    for (std::size_t flat = 0; flat < data_.size(); flat++) {
        out.data_[flat] = data_[src];
        for (std::size_t k = perm.size(); k-- > 0;) {
            idx[k]++;
            src += stride[k];
            if (idx[k] < new_shape[k]) {
                break;
            }
            src -= stride[k] * idx[k];
            idx[k] = 0;
        }
    }
    return out;
}

Tensor Tensor::conj() const {
    Tensor out = *this;
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

Tensor Tensor::scaled(Complex factor) const {
    Tensor out = *this;
    for (auto &z : out.data_) {
        z *= factor;
    }
    return out;
}

Tensor Tensor::kron(const Tensor &other) const {
    std::vector<std::size_t> shape = shape_;
    shape.insert(shape.end(), other.shape_.begin(), other.shape_.end());
    Tensor out = zeros(shape);
    std::size_t n = other.data_.size();
    for (std::size_t i = 0; i < data_.size(); i++) {
        for (std::size_t j = 0; j < n; j++) {
            out.data_[i * n + j] = data_[i] * other.data_[j];
        }
    }
    return out;
}

double Tensor::max_abs() const {
    double m = 0;
    for (auto z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double Tensor::max_abs_diff(const Tensor &other) const {
    if (shape_ != other.shape_) {
        throw ShapeMismatch("cannot compare tensors of different shapes");
    }
    double m = 0;
    for (std::size_t i = 0; i < data_.size(); i++) {
        m = std::max(m, std::abs(data_[i] - other.data_[i]));
    }
    return m;
}

bool Tensor::approx_equal(const Tensor &other, double tol) const {
    return shape_ == other.shape_ && max_abs_diff(other) <= tol;
}

Tensor double_tensor(const Tensor &plain, const std::vector<bool> &shared) {
    const auto &shape = plain.shape();
    std::size_t r = shape.size();
    std::vector<bool> cls = shared;
    cls.resize(r, false);
    std::vector<std::size_t> out_shape(r);
    for (std::size_t k = 0; k < r; k++) {
        out_shape[k] = cls[k] ? shape[k] : shape[k] * shape[k];
    }
    Tensor out = Tensor::zeros(out_shape);
    std::vector<std::size_t> ket(r), bra(r);
    for (std::size_t flat = 0; flat < out.size(); flat++) {
        auto idx = out.multi_index(flat);
        for (std::size_t k = 0; k < r; k++) {
            if (cls[k]) {
                ket[k] = bra[k] = idx[k];
            } else {
                ket[k] = idx[k] / shape[k];
                bra[k] = idx[k] % shape[k];
            }
        }
        out[flat] = plain.at(ket) * std::conj(plain.at(bra));
    }
    return out;
}

std::string to_columnar_text(const Tensor &t) {
    std::string out = "shape";
    for (auto s : t.shape()) {
        out += " " + std::to_string(s);
    }
    out += "\n";
    char buf[96];
    for (auto z : t.data()) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", z.real(), z.imag());
        out += buf;
    }
    return out;
}

Tensor from_columnar_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw ShapeMismatch("empty tensor text");
    }
    std::istringstream header(line);
    std::string word;
    header >> word;
    if (word != "shape") {
        throw ShapeMismatch("tensor text must start with 'shape'");
    }
    std::vector<std::size_t> shape;
    std::size_t s;
    while (header >> s) {
        shape.push_back(s);
    }
    std::vector<Complex> data;
    double re, im;
    while (in >> re >> im) {
        data.emplace_back(re, im);
    }
    return Tensor(std::move(shape), std::move(data));
}

std::ostream &operator<<(std::ostream &out, const Tensor &t) {
    return out << to_columnar_text(t);
}

}  // namespace cqd
