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

#include <map>
#include <set>

#include "cqd/dsl.hpp"
#include "cqd/generators.hpp"

namespace cqd {
namespace {

struct Failed {
    std::optional<Diagnostic> diag;  // empty when an earlier error already covers it
};

[[noreturn]] void fail(const std::string &kind, const std::string &msg, const SourceSpan &span) {
    throw Failed{Diagnostic{kind, msg, span}};
}

Diagnostic from_error(const Error &e, const SourceSpan &span) {
    std::string msg = e.what();
    const std::string prefix = e.kind() + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    return {e.kind(), msg, span};
}

class Elaborator {
   public:
    ElaboratedDoc run(const DiagramDoc &doc) {
        ElaboratedDoc out;
        for (const auto &decl : doc.declarations) {
            switch (decl.kind) {
                case Declaration::Kind::Wire:
                    wires_[decl.name] = decl.wire;
                    break;
                case Declaration::Kind::Tensor:
                    tensors_[decl.name] = decl.tensor;
                    break;
                case Declaration::Kind::Diagram:
                    try {
                        Diagram d = expr(*decl.expr);
                        diagrams_[decl.name] = d;
                        out.diagrams.emplace_back(decl.name, std::move(d));
                    } catch (const Failed &f) {
                        failed_.insert(decl.name);
                        if (f.diag) errors_.push_back(*f.diag);
                    }
                    break;
            }
        }
        if (!errors_.empty()) throw DslError(errors_);
        return out;
    }

   private:
    std::map<std::string, WireType> wires_;
    std::map<std::string, Tensor> tensors_;
    std::map<std::string, Diagram> diagrams_;
    std::set<std::string> failed_;
    std::vector<Diagnostic> errors_;

    WireType type(const TypeName &t) const {
        auto it = wires_.find(t.name);
        if (it != wires_.end()) return it->second;
        const std::string &n = t.name;
        if (n.size() >= 2 && (n[0] == 'c' || n[0] == 'q') && n[1] != '0' &&
            n.find_first_not_of("0123456789", 1) == std::string::npos && n.size() < 8) {
            int dim = std::stoi(n.substr(1));
            return n[0] == 'q' ? WireType::quantum(dim) : WireType::classical(dim);
        }
        fail("UnknownName", "unknown wire type '" + n + "'", t.span);
    }

    std::vector<WireType> types(const std::vector<TypeName> &ts) const {
        std::vector<WireType> out;
        for (const auto &t : ts) out.push_back(type(t));
        return out;
    }

    static int dimension(const Expr &e, long d) {
        if (d < 1 || d > 4096) fail("BoundaryMismatch", "dimension must be between 1 and 4096", e.span);
        return static_cast<int>(d);
    }

    std::optional<PhaseVector> phase(const Expr &e, int dim) const {
        if (!e.phase) return std::nullopt;
        if (static_cast<int>(e.phase->size()) != dim - 1) {
            fail("BoundaryMismatch",
                 "a phase on dimension " + std::to_string(dim) + " takes " + std::to_string(dim - 1) + " angles",
                 e.span);
        }
        return PhaseVector::from_angles(*e.phase);
    }

    Diagram expr(const Expr &e) {
        try {
            return build(e);
        } catch (const Error &err) {
            throw Failed{from_error(err, e.span)};
        }
    }

    Diagram build(const Expr &e) {
        switch (e.kind) {
            case ExprKind::Ref: {
                if (failed_.count(e.name)) throw Failed{};
                auto it = diagrams_.find(e.name);
                if (it != diagrams_.end()) return it->second;
                if (wires_.count(e.name) || tensors_.count(e.name)) {
                    fail("UnknownName", "'" + e.name + "' is not a diagram", e.span);
                }
                fail("UnknownName", "unknown name '" + e.name + "'", e.span);
            }
            case ExprKind::Seq: {
                Diagram acc = expr(*e.children.front());
                for (std::size_t i = 1; i < e.children.size(); i++) {
                    Diagram next = expr(*e.children[i]);
                    try {
                        acc = compose_seq(acc, next);
                    } catch (const Error &err) {
                        throw Failed{from_error(err, e.children[i]->span)};
                    }
                }
                return acc;
            }
            case ExprKind::Par: {
                Diagram acc = expr(*e.children.front());
                for (std::size_t i = 1; i < e.children.size(); i++) acc = compose_par(acc, expr(*e.children[i]));
                return acc;
            }
            case ExprKind::Spider: {
                std::vector<WireType> ins, outs;
                int dim;
                if (e.ints.size() == 2) {
                    if (e.ints[0] < 0 || e.ints[1] < 0 || e.ints[0] + e.ints[1] > 64) {
                        fail("BoundaryMismatch", "bad spider leg count", e.span);
                    }
                    WireType t = type(e.inputs.at(0));
                    ins.assign(static_cast<std::size_t>(e.ints[0]), t);
                    outs.assign(static_cast<std::size_t>(e.ints[1]), t);
                    dim = t.base_dim;
                } else {
                    ins = types(e.inputs);
                    outs = types(e.outputs);
                    if (ins.empty() && outs.empty()) {
                        fail("BoundaryMismatch", "a spider without legs needs the form 'spider 0 -> 0 @ T'", e.span);
                    }
                    dim = (ins.empty() ? outs : ins).front().base_dim;
                    for (const auto &w : ins) {
                        if (w.base_dim != dim) fail("BoundaryMismatch", "spider legs differ in dimension", e.span);
                    }
                    for (const auto &w : outs) {
                        if (w.base_dim != dim) fail("BoundaryMismatch", "spider legs differ in dimension", e.span);
                    }
                }
                return spider(dim, ins, outs, phase(e, dim), e.flag ? Heads::Double : Heads::Single, e.family);
            }
            case ExprKind::Phase: {
                WireType t = type(e.inputs.at(0));
                return spider(t.base_dim, {t}, {t}, phase(e, t.base_dim), t.is_quantum() ? Heads::Double : Heads::Single);
            }
            case ExprKind::Box: {
                auto it = tensors_.find(e.payload);
                if (it == tensors_.end()) fail("UnknownName", "unknown tensor '" + e.payload + "'", e.span);
                std::vector<WireType> ins = types(e.inputs), outs = types(e.outputs);
                std::vector<std::size_t> shape;
                for (const auto &w : ins) shape.push_back(w.index_size());
                for (const auto &w : outs) shape.push_back(w.index_size());
                if (shape != it->second.shape()) {
                    fail("ShapeMismatch", "payload '" + e.payload + "' does not fit the box legs", e.span);
                }
                return box(e.name, ins, outs, it->second, e.flag ? BoxFlavor::Doubled : BoxFlavor::Plain);
            }
            case ExprKind::Cup:
                return cup(type(e.inputs.at(0)));
            case ExprKind::Cap:
                return cap(type(e.inputs.at(0)));
            case ExprKind::Id:
                return identity(type(e.inputs.at(0)));
            case ExprKind::Swap:
                return swap(type(e.inputs.at(0)), type(e.inputs.at(1)));
            case ExprKind::Discard:
                return discard(type(e.inputs.at(0)));
            case ExprKind::Measure:
                return measure(dimension(e, e.ints.at(0)));
            case ExprKind::Encode:
                return encode(dimension(e, e.ints.at(0)));
            case ExprKind::Delete:
                return delete_spider(dimension(e, e.ints.at(0)));
            case ExprKind::Copy:
                return copy_spider(dimension(e, e.ints.at(0)));
            case ExprKind::Mixed:
                return maximally_mixed(dimension(e, e.ints.at(0)));
            case ExprKind::Uniform:
                return uniform_state(dimension(e, e.ints.at(0)));
            case ExprKind::Bell:
                return bell_state(dimension(e, e.ints.at(0)));
            case ExprKind::Ghz: {
                if (e.ints.at(1) < 0 || e.ints.at(1) > 64) fail("BoundaryMismatch", "bad GHZ leg count", e.span);
                return ghz_state(dimension(e, e.ints.at(0)), static_cast<std::size_t>(e.ints.at(1)));
            }
            case ExprKind::Value:
            case ExprKind::Effect: {
                WireType t = type(e.inputs.at(0));
                long i = e.ints.at(0);
                if (i < 0 || i >= t.base_dim) fail("BoundaryMismatch", "value index out of range", e.span);
                Diagram d = single_node(Value{t, static_cast<int>(i), e.kind == ExprKind::Effect});
                d.validate();
                return d;
            }
            case ExprKind::Scalar:
                return scalar(e.number);
            case ExprKind::Double:
                return double_diagram(expr(*e.children.at(0)));
            case ExprKind::Dagger:
                return dagger(expr(*e.children.at(0)));
            case ExprKind::Transpose:
                return transpose(expr(*e.children.at(0)));
            case ExprKind::Conjugate:
                return conjugate(expr(*e.children.at(0)));
            case ExprKind::Empty:
                return empty_diagram();
            case ExprKind::Graph:
                return graph(e);
        }
        fail("SyntaxError", "unhandled expression", e.span);
    }

    Diagram graph(const Expr &e) {
        Diagram d;
        d.inputs = types(e.inputs);
        d.outputs = types(e.outputs);
        for (const auto &n : e.children) {
            Diagram g = expr(*n);
            if (g.nodes.size() != 1) fail("BoundaryMismatch", "a graph node must be a single generator", n->span);
            d.nodes.push_back(g.nodes.front());
        }
        auto type_at = [&](const GraphEndpoint &ep) -> WireType {
            switch (ep.kind) {
                case Endpoint::Kind::Input:
                    if (ep.index >= d.inputs.size()) fail("BoundaryMismatch", "input position out of range", e.span);
                    return d.inputs[ep.index];
                case Endpoint::Kind::Output:
                    if (ep.index >= d.outputs.size()) fail("BoundaryMismatch", "output position out of range", e.span);
                    return d.outputs[ep.index];
                case Endpoint::Kind::Port:
                    break;
            }
            if (ep.node >= d.nodes.size()) fail("UnknownName", "no node n" + std::to_string(ep.node), e.span);
            auto ports = port_types(d.nodes[ep.node]);
            if (ep.index >= ports.size()) fail("BoundaryMismatch", "port index out of range", e.span);
            return ports[ep.index];
        };
        for (const auto &[a, b] : e.edges) {
            WireType ta = type_at(a), tb = type_at(b);
            if (ta != tb) fail("BoundaryMismatch", "edge joins " + ta.str() + " and " + tb.str(), e.span);
            d.edges.push_back({{a.kind, a.node, a.index}, {b.kind, b.node, b.index}, ta});
        }
        d.validate();
        return d;
    }
};

}  // namespace

const Diagram &ElaboratedDoc::get(const std::string &name) const {
    for (const auto &[n, d] : diagrams) {
        if (n == name) return d;
    }
    throw UnknownName("no diagram named '" + name + "'");
}

const Diagram &ElaboratedDoc::last() const {
    if (diagrams.empty()) throw UnknownName("the document declares no diagram");
    return diagrams.back().second;
}

ElaboratedDoc elaborate(const DiagramDoc &doc) {
    return Elaborator().run(doc);
}

}  // namespace cqd
