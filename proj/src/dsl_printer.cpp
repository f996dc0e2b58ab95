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

#include <cmath>
#include <map>
#include <sstream>

#include "cqd/dsl.hpp"
#include "dsl_internal.hpp"

namespace cqd {
namespace {

using dsl::format_double;

const char *keyword_of(ExprKind k) {
    switch (k) {
        case ExprKind::Measure: return "measure";
        case ExprKind::Encode: return "encode";
        case ExprKind::Delete: return "delete";
        case ExprKind::Copy: return "copy";
        case ExprKind::Mixed: return "mixed";
        case ExprKind::Uniform: return "uniform";
        case ExprKind::Bell: return "bell";
        case ExprKind::Cup: return "cup";
        case ExprKind::Cap: return "cap";
        case ExprKind::Id: return "id";
        case ExprKind::Discard: return "discard";
        case ExprKind::Double: return "double";
        case ExprKind::Dagger: return "dagger";
        case ExprKind::Transpose: return "transpose";
        case ExprKind::Conjugate: return "conj";
        case ExprKind::Value: return "value";
        case ExprKind::Effect: return "effect";
        default: return "";
    }
}

std::string types(const std::vector<TypeName> &ts) {
    std::string out = "(";
    for (std::size_t i = 0; i < ts.size(); i++) {
        if (i) out += ", ";
        out += ts[i].name;
    }
    return out + ")";
}

std::string angles(const std::vector<double> &as) {
    std::string out = "(";
    for (std::size_t i = 0; i < as.size(); i++) {
        if (i) out += ", ";
        out += format_double(as[i]);
    }
    return out + ")";
}

std::string complex_text(Complex z) {
    return format_double(z.real()) + " " + format_double(z.imag());
}

std::string endpoint_text(const GraphEndpoint &ep) {
    switch (ep.kind) {
        case Endpoint::Kind::Input: return "in." + std::to_string(ep.index);
        case Endpoint::Kind::Output: return "out." + std::to_string(ep.index);
        case Endpoint::Kind::Port: break;
    }
    return "n" + std::to_string(ep.node) + "." + std::to_string(ep.index);
}

void print_expr(const Expr &e, std::ostream &out, int indent);

// Operands of `;` need parentheses when they are themselves sequences, those
// of `|` when they are sequences or parallel compositions.
void print_operand(const Expr &e, std::ostream &out, bool parens, int indent) {
    if (parens) out << "(";
    print_expr(e, out, indent);
    if (parens) out << ")";
}

void print_expr(const Expr &e, std::ostream &out, int indent) {
    switch (e.kind) {
        case ExprKind::Ref:
            out << e.name;
            return;
        case ExprKind::Seq:
            for (std::size_t i = 0; i < e.children.size(); i++) {
                if (i) out << " ; ";
                print_operand(*e.children[i], out, e.children[i]->kind == ExprKind::Seq, indent);
            }
            return;
        case ExprKind::Par:
            for (std::size_t i = 0; i < e.children.size(); i++) {
                if (i) out << " | ";
                auto k = e.children[i]->kind;
                print_operand(*e.children[i], out, k == ExprKind::Seq || k == ExprKind::Par, indent);
            }
            return;
        case ExprKind::Spider:
            out << "spider ";
            if (e.ints.size() == 2) {
                out << e.ints[0] << " -> " << e.ints[1] << " @ " << e.inputs.at(0).name;
            } else {
                out << types(e.inputs) << " -> " << types(e.outputs);
            }
            if (e.phase) out << " phase" << angles(*e.phase);
            if (e.flag) out << " double";
            if (e.family != 0) out << " family " << e.family;
            return;
        case ExprKind::Phase:
            out << "phase" << angles(e.phase.value_or(std::vector<double>{})) << " @ " << e.inputs.at(0).name;
            return;
        case ExprKind::Box:
            out << "box \"" << e.name << "\" " << types(e.inputs) << " -> " << types(e.outputs) << " = " << e.payload;
            if (e.flag) out << " doubled";
            return;
        case ExprKind::Cup:
        case ExprKind::Cap:
        case ExprKind::Id:
        case ExprKind::Discard:
            out << keyword_of(e.kind) << " " << e.inputs.at(0).name;
            return;
        case ExprKind::Swap:
            out << "swap " << e.inputs.at(0).name << " " << e.inputs.at(1).name;
            return;
        case ExprKind::Measure:
        case ExprKind::Encode:
        case ExprKind::Delete:
        case ExprKind::Copy:
        case ExprKind::Mixed:
        case ExprKind::Uniform:
        case ExprKind::Bell:
            out << keyword_of(e.kind) << " " << e.ints.at(0);
            return;
        case ExprKind::Ghz:
            out << "ghz " << e.ints.at(0) << " " << e.ints.at(1);
            return;
        case ExprKind::Value:
        case ExprKind::Effect:
            out << keyword_of(e.kind) << " " << e.inputs.at(0).name << " " << e.ints.at(0);
            return;
        case ExprKind::Scalar:
            out << "scalar " << complex_text(e.number);
            return;
        case ExprKind::Double:
        case ExprKind::Dagger:
        case ExprKind::Transpose:
        case ExprKind::Conjugate:
            out << keyword_of(e.kind) << "(";
            print_expr(*e.children.at(0), out, indent);
            out << ")";
            return;
        case ExprKind::Empty:
            out << "empty";
            return;
        case ExprKind::Graph: {
            std::string pad(static_cast<std::size_t>(indent + 2), ' ');
            out << "graph " << types(e.inputs) << " -> " << types(e.outputs) << " {\n";
            for (const auto &n : e.children) {
                out << pad << "node ";
                print_expr(*n, out, indent + 2);
                out << "\n";
            }
            for (const auto &[a, b] : e.edges) out << pad << "edge " << endpoint_text(a) << " " << endpoint_text(b) << "\n";
            out << std::string(static_cast<std::size_t>(indent), ' ') << "}";
            return;
        }
    }
}

std::string tensor_text(const Tensor &t) {
    std::string out = "tensor [";
    for (std::size_t i = 0; i < t.rank(); i++) {
        if (i) out += ", ";
        out += std::to_string(t.shape()[i]);
    }
    out += "] (";
    for (std::size_t i = 0; i < t.size(); i++) {
        if (i) out += ", ";
        out += complex_text(t[i]);
    }
    return out + ")";
}

std::shared_ptr<Expr> make(ExprKind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}

std::vector<TypeName> type_names(const std::vector<WireType> &ws) {
    std::vector<TypeName> out;
    for (const auto &w : ws) out.push_back({w.str(), {}});
    return out;
}

}  // namespace

std::string print(const Expr &e) {
    std::ostringstream out;
    print_expr(e, out, 0);
    return out.str();
}

std::string print(const DiagramDoc &doc) {
    std::ostringstream out;
    for (const auto &d : doc.declarations) {
        if (!d.name.empty()) out << d.name << " = ";
        switch (d.kind) {
            case Declaration::Kind::Wire:
                out << (d.wire.is_quantum() ? "quantum " : "classical ") << d.wire.base_dim;
                break;
            case Declaration::Kind::Tensor:
                out << tensor_text(d.tensor);
                break;
            case Declaration::Kind::Diagram:
                print_expr(*d.expr, out, 0);
                break;
        }
        out << "\n";
    }
    return out.str();
}

DiagramDoc document_from_diagram(const std::string &name, const Diagram &d) {
    DiagramDoc doc;
    auto g = make(ExprKind::Graph);
    g->inputs = type_names(d.inputs);
    g->outputs = type_names(d.outputs);
    std::size_t tensors = 0;
    for (const auto &node : d.nodes) {
        std::shared_ptr<Expr> e;
        if (const auto *s = std::get_if<Spider>(&node)) {
            e = make(ExprKind::Spider);
            std::vector<WireType> legs = s->inputs;
            legs.insert(legs.end(), s->outputs.begin(), s->outputs.end());
            bool uniform = std::all_of(legs.begin(), legs.end(), [&](const WireType &w) { return w == legs.front(); });
            if (legs.empty() || uniform) {
                WireType t = legs.empty() ? WireType::classical(s->dim) : legs.front();
                e->ints = {static_cast<long>(s->inputs.size()), static_cast<long>(s->outputs.size())};
                e->inputs = {{t.str(), {}}};
            } else {
                e->inputs = type_names(s->inputs);
                e->outputs = type_names(s->outputs);
            }
            if (s->phase) e->phase = s->phase->angles();
            e->flag = s->heads == Heads::Double;
            e->family = s->family;
        } else if (const auto *b = std::get_if<Box>(&node)) {
            e = make(ExprKind::Box);
            e->name = b->name;
            e->inputs = type_names(b->inputs);
            e->outputs = type_names(b->outputs);
            e->flag = b->flavor == BoxFlavor::Doubled;
            Declaration t;
            t.kind = Declaration::Kind::Tensor;
            t.name = name + "_t" + std::to_string(tensors++);
            t.tensor = b->payload;
            e->payload = t.name;
            doc.declarations.push_back(std::move(t));
        } else if (const auto *v = std::get_if<Value>(&node)) {
            e = make(v->effect ? ExprKind::Effect : ExprKind::Value);
            e->inputs = {{v->wire.str(), {}}};
            e->ints = {v->index};
        } else {
            e = make(ExprKind::Scalar);
            e->number = std::get<Scalar>(node).value;
        }
        g->children.push_back(e);
    }
    auto ep = [](const Endpoint &x) { return GraphEndpoint{x.kind, x.node, x.index}; };
    for (const auto &edge : d.edges) g->edges.emplace_back(ep(edge.a), ep(edge.b));
    Declaration decl;
    decl.kind = Declaration::Kind::Diagram;
    decl.name = name;
    decl.expr = g;
    doc.declarations.push_back(std::move(decl));
    return doc;
}

}  // namespace cqd
