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

#ifndef CQD_DIAGRAM_HPP
#define CQD_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cqd/phase_vector.hpp"
#include "cqd/tensor.hpp"
#include "cqd/wire.hpp"

namespace cqd {

/// Whether an all-quantum spider is a doubled ("quantum") spider, whose ket
/// and bra halves are independent, or a single-headed (bastard) spider whose
/// halves are fused. Any spider with a classical leg is single-headed.
enum class Heads : std::uint8_t { Single, Double };

/// A spider of one family. Legs are symmetric: only their multiset matters
/// semantically, the input/output split is kept for presentation and for
/// dagger. In Mat(C) a single-headed spider is sum_i w_i |i..i> with quantum
/// legs carrying the doubled index i*d+i; a double-headed spider is
/// sum_{i,j} a_i conj(a_j) with every leg carrying i*d+j.
struct Spider {
    int dim = 2;
    std::vector<WireType> inputs;
    std::vector<WireType> outputs;
    std::optional<PhaseVector> phase;
    Heads heads = Heads::Single;
    int family = 0;

    bool single_headed() const;
    bool all_classical() const;
    std::size_t leg_count() const {
        return inputs.size() + outputs.size();
    }
    bool operator==(const Spider &) const = default;
};

enum class BoxFlavor : std::uint8_t { Plain, Doubled };

/// A named process with an explicit payload over its legs (inputs first).
struct Box {
    std::string name;
    std::vector<WireType> inputs;
    std::vector<WireType> outputs;
    Tensor payload;
    BoxFlavor flavor = BoxFlavor::Plain;
    bool operator==(const Box &) const = default;
};

/// Basis element `index` of a wire (a classical value, or its doubling on a
/// quantum wire). `effect` flips it from a state to an effect.
struct Value {
    WireType wire;
    int index = 0;
    bool effect = false;
    bool operator==(const Value &) const = default;
};

struct Scalar {
    Complex value{1.0, 0.0};
    bool operator==(const Scalar &) const = default;
};

using Generator = std::variant<Spider, Box, Value, Scalar>;

/// Input port types followed by output port types.
std::vector<WireType> port_types(const Generator &g);
std::size_t input_count(const Generator &g);
std::size_t port_count(const Generator &g);
/// Mat(C) tensor of a single generator over its ports.
Tensor generator_tensor(const Generator &g);
std::string generator_label(const Generator &g);

struct Endpoint {
    enum class Kind : std::uint8_t { Port, Input, Output };
    Kind kind = Kind::Port;
    std::size_t node = 0;  // only for Kind::Port
    std::size_t index = 0;  // port number, or boundary position

    static Endpoint port(std::size_t node, std::size_t p) {
        return {Kind::Port, node, p};
    }
    static Endpoint input(std::size_t pos) {
        return {Kind::Input, 0, pos};
    }
    static Endpoint output(std::size_t pos) {
        return {Kind::Output, 0, pos};
    }
    bool is_port() const {
        return kind == Kind::Port;
    }
    bool is_boundary() const {
        return kind != Kind::Port;
    }
    bool operator==(const Endpoint &) const = default;
    auto operator<=>(const Endpoint &) const = default;
};

struct Edge {
    Endpoint a;
    Endpoint b;
    WireType type;
    bool operator==(const Edge &) const = default;
};

/// An open graph of generators. Every node port and every boundary position
/// is the endpoint of exactly one edge. Cups, caps, swaps and identity wires
/// are edges touching the boundary, so diagrams are identified up to the
/// connectivity-preserving deformations of string diagrams.
///
/// Diagrams are plain values: every operation below returns a new diagram.
struct Diagram {
    std::vector<Generator> nodes;
    std::vector<Edge> edges;
    std::vector<WireType> inputs;
    std::vector<WireType> outputs;

    /// Throws InvalidDiagram when the port-usage or typing invariants fail.
    void validate() const;
    bool is_plain() const;
    std::size_t count_spiders() const;
    /// Edge index at every node port: result[node][port].
    std::vector<std::vector<std::size_t>> port_edges() const;
    std::vector<std::size_t> input_edges() const;
    std::vector<std::size_t> output_edges() const;

    bool operator==(const Diagram &) const = default;
};

WireType endpoint_type(const Diagram &d, const Endpoint &e);

// Construction helpers.
Diagram empty_diagram();
Diagram single_node(Generator g);
Diagram identity(WireType w);
Diagram identity(const std::vector<WireType> &ws);
Diagram cup(WireType w);
Diagram cap(WireType w);
Diagram swap(WireType a, WireType b);
Diagram scalar(Complex z);
/// The closed loop of a wire; evaluates to its index size.
Diagram circle(WireType w);

// Composition and the dagger structure.
Diagram compose_seq(const Diagram &f, const Diagram &g);  // g after f
Diagram compose_par(const Diagram &f, const Diagram &g);
Diagram compose_seq(std::initializer_list<Diagram> stages);
Diagram compose_par(std::initializer_list<Diagram> parts);
Diagram dagger(const Diagram &f);
Diagram transpose(const Diagram &f);
Diagram conjugate(const Diagram &f);
Diagram dagger(const Generator &g);
/// Doubling: every wire becomes quantum, payloads become t (x) conj(t) with
/// ket/bra interleaving, spiders become double-headed. Throws NotPlain.
Diagram double_diagram(const Diagram &f);

/// Composition via a mid-level wiring description: plugs the boundary
/// positions `from_outputs` of f to the inputs `to_inputs` of g; unplugged
/// outputs of f and inputs of g stay on the boundary.
Diagram plug(const Diagram &f, const Diagram &g, const std::vector<std::size_t> &f_outputs,
             const std::vector<std::size_t> &g_inputs);

/// Reorders boundary positions: new inputs are old inputs[in_perm[k]].
Diagram permute_boundary(const Diagram &f, const std::vector<std::size_t> &in_perm,
                         const std::vector<std::size_t> &out_perm);

/// Deterministic 64-bit hash of the stored structure.
std::uint64_t structural_hash(const Diagram &d);
std::string describe(const Diagram &d);

/// How two diagrams' global scalars are compared.
enum class ScalarMode : std::uint8_t { Strict, UpToScalar };

/// Graph isomorphism fixing the boundary order. Spider legs match up to
/// permutation, box ports match in order. Scalar nodes are multiplied
/// together and compared according to `mode`; phases and payloads compare
/// within `tol`.
bool isomorphic(const Diagram &a, const Diagram &b, ScalarMode mode, double tol = 1e-9);

}  // namespace cqd

#endif
