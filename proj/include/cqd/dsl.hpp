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

#ifndef CQD_DSL_HPP
#define CQD_DSL_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cqd/diagram.hpp"
#include "cqd/errors.hpp"
#include "cqd/tensor.hpp"

namespace cqd {

struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;
    std::string str() const;
};

struct Diagnostic {
    std::string kind;  // SyntaxError, UnknownName, BoundaryMismatch, ...
    std::string message;
    SourceSpan span;
    std::string str() const;
};

/// Raised by parse and elaborate; kind() is the kind of the first diagnostic.
class DslError : public Error {
   public:
    explicit DslError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic> &diagnostics() const {
        return diagnostics_;
    }

   private:
    std::vector<Diagnostic> diagnostics_;
};

/// A wire type as written: a declared name or a literal such as `q2`.
struct TypeName {
    std::string name;
    SourceSpan span;
};

enum class ExprKind {
    Ref,
    Seq,
    Par,
    Spider,
    Phase,
    Box,
    Cup,
    Cap,
    Swap,
    Id,
    Measure,
    Encode,
    Delete,
    Copy,
    Discard,
    Mixed,
    Uniform,
    Bell,
    Ghz,
    Value,
    Effect,
    Scalar,
    Double,
    Dagger,
    Transpose,
    Conjugate,
    Empty,
    Graph,
};

struct GraphEndpoint {
    Endpoint::Kind kind = Endpoint::Kind::Port;
    std::size_t node = 0;
    std::size_t index = 0;
    bool operator==(const GraphEndpoint &) const = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// One expression node. Fields are used per kind:
///   Ref: name. Seq, Par: children (n-ary). Double, Dagger, Transpose,
///   Conjugate: children[0]. Graph: inputs, outputs, children (nodes), edges.
///   Spider: `spider n -> m @ T` keeps ints = {n, m} and inputs = {T}; the
///   list form keeps inputs and outputs. phase, flag (double-headed), family.
///   Phase: phase, inputs = {T}. Box: name, inputs, outputs, payload, flag
///   (doubled). Cup, Cap, Id, Discard: inputs = {T}. Swap: inputs = {A, B}.
///   Measure, Encode, Delete, Copy, Mixed, Uniform, Bell: ints = {d}.
///   Ghz: ints = {d, legs}. Value, Effect: inputs = {T}, ints = {i}.
///   Scalar: number.
struct Expr {
    ExprKind kind = ExprKind::Empty;
    SourceSpan span;
    std::string name;
    std::string payload;
    std::vector<TypeName> inputs;
    std::vector<TypeName> outputs;
    std::optional<std::vector<double>> phase;
    bool flag = false;
    int family = 0;
    std::vector<long> ints;
    Complex number{0.0, 0.0};
    std::vector<ExprPtr> children;
    std::vector<std::pair<GraphEndpoint, GraphEndpoint>> edges;
};

struct Declaration {
    enum class Kind { Wire, Tensor, Diagram };
    Kind kind = Kind::Diagram;
    std::string name;  // empty for a bare expression statement
    SourceSpan span;
    WireType wire;
    Tensor tensor;
    ExprPtr expr;
};

struct DiagramDoc {
    std::vector<Declaration> declarations;
    const Declaration *find(const std::string &name) const;
};

/// Equality ignoring source positions.
bool structurally_equal(const DiagramDoc &a, const DiagramDoc &b);
bool structurally_equal(const Expr &a, const Expr &b);

/// Parses and type-checks a document; throws DslError listing every problem.
DiagramDoc parse(std::string_view text, const std::string &file = "<input>");
DiagramDoc parse_file(const std::string &path);
/// Syntax only, no name resolution or boundary checks.
DiagramDoc parse_syntax(std::string_view text, const std::string &file = "<input>");

std::string print(const DiagramDoc &doc);
std::string print(const Expr &e);

struct ElaboratedDoc {
    std::vector<std::pair<std::string, Diagram>> diagrams;
    /// Throws UnknownName.
    const Diagram &get(const std::string &name) const;
    /// The last declared diagram; throws UnknownName when there is none.
    const Diagram &last() const;
};

ElaboratedDoc elaborate(const DiagramDoc &doc);

/// A document with one graph literal `name` (plus tensor declarations for
/// the box payloads) that elaborates to a diagram identical to d.
DiagramDoc document_from_diagram(const std::string &name, const Diagram &d);

/// Graphviz text: spiders are filled circles, boxes rectangles, boundary
/// stubs points; quantum edges are drawn doubled and bold.
std::string export_dot(const Diagram &d, const std::string &graph_name = "diagram");

}  // namespace cqd

#endif
