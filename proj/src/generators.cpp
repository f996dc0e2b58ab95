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

#include "cqd/generators.hpp"

#include "cqd/errors.hpp"

namespace cqd {

Diagram spider(int dim, std::vector<WireType> inputs, std::vector<WireType> outputs,
               std::optional<PhaseVector> phase, Heads heads, int family) {
    Spider s;
    s.dim = dim;
    s.inputs = std::move(inputs);
    s.outputs = std::move(outputs);
    s.phase = std::move(phase);
    s.family = family;
    s.heads = heads;
    if (s.heads == Heads::Double && s.single_headed()) {
        s.heads = Heads::Single;
    }
    Diagram d = single_node(std::move(s));
    d.validate();
    return d;
}

Diagram classical_spider(int dim, std::size_t n, std::size_t m, std::optional<PhaseVector> phase, int family) {
    auto w = WireType::classical(dim);
    return spider(dim, std::vector<WireType>(n, w), std::vector<WireType>(m, w), std::move(phase),
                  Heads::Single, family);
}

Diagram quantum_spider(int dim, std::size_t n, std::size_t m, std::optional<PhaseVector> phase, int family) {
    auto w = WireType::quantum(dim);
    return spider(dim, std::vector<WireType>(n, w), std::vector<WireType>(m, w), std::move(phase),
                  Heads::Double, family);
}

Diagram copy_spider(int dim) {
    return classical_spider(dim, 1, 2);
}

Diagram delete_spider(int dim) {
    return classical_spider(dim, 1, 0);
}

Diagram encode(int dim) {
    return spider(dim, {WireType::classical(dim)}, {WireType::quantum(dim)});
}

Diagram measure(int dim) {
    return spider(dim, {WireType::quantum(dim)}, {WireType::classical(dim)});
}

Diagram discard(WireType wire) {
    if (!wire.is_quantum()) {
        throw WrongKind("discard expects a quantum wire; delete a classical wire instead");
    }
    return spider(wire.base_dim, {wire}, {});
}

Diagram decoherence_spider(int dim) {
    return spider(dim, {WireType::quantum(dim)}, {WireType::quantum(dim)});
}

Diagram bell_state(int dim) {
    return quantum_spider(dim, 0, 2);
}

Diagram ghz_state(int dim, std::size_t legs) {
    return quantum_spider(dim, 0, legs);
}

Diagram phase_state(const PhaseVector &phase) {
    return quantum_spider(phase.dim(), 0, 1, phase);
}

Diagram phase_gate_diagram(const PhaseVector &phase) {
    return quantum_spider(phase.dim(), 1, 1, phase);
}

Diagram maximally_mixed(int dim) {
    return spider(dim, {}, {WireType::quantum(dim)});
}

Diagram uniform_state(int dim) {
    return classical_spider(dim, 0, 1);
}

Diagram classical_value(int dim, int index) {
    Diagram d = single_node(Value{WireType::classical(dim), index, false});
    d.validate();
    return d;
}

Diagram classical_effect(int dim, int index) {
    Diagram d = single_node(Value{WireType::classical(dim), index, true});
    d.validate();
    return d;
}

Diagram quantum_value(int dim, int index) {
    Diagram d = single_node(Value{WireType::quantum(dim), index, false});
    d.validate();
    return d;
}

Diagram box(std::string name, std::vector<WireType> inputs, std::vector<WireType> outputs, Tensor payload,
            BoxFlavor flavor) {
    Diagram d = single_node(Box{std::move(name), std::move(inputs), std::move(outputs), std::move(payload), flavor});
    d.validate();
    return d;
}

Tensor matrix_payload(std::size_t in_size, std::size_t out_size, const std::vector<Complex> &row_major) {
    if (row_major.size() != in_size * out_size) {
        throw ShapeMismatch("matrix has " + std::to_string(row_major.size()) + " entries, expected " +
                            std::to_string(in_size * out_size));
    }
    Tensor t = Tensor::zeros({in_size, out_size});
    for (std::size_t o = 0; o < out_size; o++) {
        for (std::size_t i = 0; i < in_size; i++) {
            t[i * out_size + o] = row_major[o * in_size + i];
        }
    }
    return t;
}

Diagram matrix_box(std::string name, int in_dim, int out_dim, const std::vector<Complex> &row_major) {
    return box(std::move(name), {WireType::classical(in_dim)}, {WireType::classical(out_dim)},
               matrix_payload(static_cast<std::size_t>(in_dim), static_cast<std::size_t>(out_dim), row_major));
}

Diagram density_state(int dim, const std::vector<Complex> &rho) {
    auto n = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
    if (rho.size() != n) {
        throw ShapeMismatch("density matrix must have d*d entries");
    }
    return box("rho", {}, {WireType::quantum(dim)}, Tensor({n}, rho));
}

Diagram pure_state(const std::vector<int> &dims, const std::vector<Complex> &amplitudes) {
    std::vector<std::size_t> shape;
    std::vector<WireType> outs;
    for (int d : dims) {
        shape.push_back(static_cast<std::size_t>(d));
        outs.push_back(WireType::quantum(d));
    }
    Tensor plain(shape, amplitudes);
    return box("psi", {}, outs, double_tensor(plain), BoxFlavor::Doubled);
}

}  // namespace cqd
