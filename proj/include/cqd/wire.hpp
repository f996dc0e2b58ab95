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

#ifndef CQD_WIRE_HPP
#define CQD_WIRE_HPP

#include <complex>
#include <cstddef>
#include <string>

namespace cqd {

using Complex = std::complex<double>;

enum class WireKind { Classical, Quantum };

/// A system type. Classical wires are single wires of dimension `base_dim`;
/// quantum wires are doubled, so their tensor index runs over base_dim^2
/// values laid out as ket * base_dim + bra.
struct WireType {
    WireKind kind = WireKind::Classical;
    int base_dim = 2;

    static WireType classical(int d) {
        return {WireKind::Classical, d};
    }
    static WireType quantum(int d) {
        return {WireKind::Quantum, d};
    }

    bool is_quantum() const {
        return kind == WireKind::Quantum;
    }
    bool is_classical() const {
        return kind == WireKind::Classical;
    }
    std::size_t index_size() const {
        auto d = static_cast<std::size_t>(base_dim);
        return is_quantum() ? d * d : d;
    }
    /// Short name as used by the text format, e.g. "c2" or "q3".
    std::string str() const {
        return (is_quantum() ? "q" : "c") + std::to_string(base_dim);
    }

    bool operator==(const WireType &) const = default;
};

}  // namespace cqd

#endif
