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

#include "cqd/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "cqd/errors.hpp"

namespace cqd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_complex(Complex z) {
    return "(" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + ")";
}

std::string fmt_types(const std::vector<WireType> &ws) {
    std::string out = "[";
    for (std::size_t i = 0; i < ws.size(); i++) {
        out += (i ? "," : "") + ws[i].str();
    }
    return out + "]";
}

std::size_t remap_dagger_port(std::size_t p, std::size_t n_in, std::size_t n_out) {
    return p < n_in ? n_out + p : p - n_in;
}

std::string fmt_endpoint(const Endpoint &e) {
    switch (e.kind) {
        case Endpoint::Kind::Input:
            return "in" + std::to_string(e.index);
        case Endpoint::Kind::Output:
            return "out" + std::to_string(e.index);
        default:
            return "n" + std::to_string(e.node) + "." + std::to_string(e.index);
    }
}

}  // namespace

bool Spider::all_classical() const {
    if (leg_count() == 0) {
        return false;
    }
    auto cls = [](const WireType &w) { return w.is_classical(); };
    return std::all_of(inputs.begin(), inputs.end(), cls) &&
           std::all_of(outputs.begin(), outputs.end(), cls);
}

bool Spider::single_headed() const {
    if (heads == Heads::Single) {
        return true;
    }
    auto cls = [](const WireType &w) { return w.is_classical(); };
    return std::any_of(inputs.begin(), inputs.end(), cls) ||
           std::any_of(outputs.begin(), outputs.end(), cls);
}

std::vector<WireType> port_types(const Generator &g) {
    return std::visit(
        overloaded{
            [](const Spider &s) {
                auto t = s.inputs;
                t.insert(t.end(), s.outputs.begin(), s.outputs.end());
                return t;
            },
            [](const Box &b) {
                auto t = b.inputs;
                t.insert(t.end(), b.outputs.begin(), b.outputs.end());
                return t;
            },
            [](const Value &v) { return std::vector<WireType>{v.wire}; },
            [](const Scalar &) { return std::vector<WireType>{}; },
        },
        g);
}

std::size_t input_count(const Generator &g) {
    return std::visit(overloaded{
                          [](const Spider &s) { return s.inputs.size(); },
                          [](const Box &b) { return b.inputs.size(); },
                          [](const Value &v) -> std::size_t { return v.effect ? 1 : 0; },
                          [](const Scalar &) -> std::size_t { return 0; },
                      },
                      g);
}

std::size_t port_count(const Generator &g) {
    return port_types(g).size();
}

Tensor generator_tensor(const Generator &g) {
    return std::visit(
        overloaded{
            [](const Spider &s) {
                auto types = port_types(s);
                std::vector<std::size_t> shape;
                for (const auto &w : types) {
                    shape.push_back(w.index_size());
                }
                Tensor t = Tensor::zeros(shape);
                auto d = static_cast<std::size_t>(s.dim);
                auto weight = [&](std::size_t i) {
                    return s.phase ? (*s.phase)[i] : Complex{1.0, 0.0};
                };
                std::vector<std::size_t> idx(types.size());
                if (s.single_headed()) {
                    for (std::size_t i = 0; i < d; i++) {
                        for (std::size_t k = 0; k < types.size(); k++) {
                            idx[k] = types[k].is_quantum() ? i * d + i : i;
                        }
                        t[t.flat_index(idx)] += weight(i);
                    }
                } else {
                    for (std::size_t i = 0; i < d; i++) {
                        for (std::size_t j = 0; j < d; j++) {
                            for (std::size_t k = 0; k < types.size(); k++) {
                                idx[k] = i * d + j;
                            }
                            t[t.flat_index(idx)] += weight(i) * std::conj(weight(j));
                        }
                    }
                }
                return t;
            },
            [](const Box &b) { return b.payload; },
            [](const Value &v) {
                Tensor t = Tensor::zeros({v.wire.index_size()});
                auto i = static_cast<std::size_t>(v.index);
                auto d = static_cast<std::size_t>(v.wire.base_dim);
                t[v.wire.is_quantum() ? i * d + i : i] = 1.0;
                return t;
            },
            [](const Scalar &s) { return Tensor::scalar(s.value); },
        },
        g);
}

std::string generator_label(const Generator &g) {
    return std::visit(
        overloaded{
            [](const Spider &s) {
                std::string out = "spider" + fmt_types(s.inputs) + "->" + fmt_types(s.outputs) +
                                  " dim=" + std::to_string(s.dim) +
                                  (s.single_headed() ? " single" : " double");
                if (s.family != 0) {
                    out += " family=" + std::to_string(s.family);
                }
                if (s.phase) {
                    out += " phase=";
                    for (auto c : s.phase->components()) {
                        out += fmt_complex(c);
                    }
                }
                return out;
            },
            [](const Box &b) {
                std::string out = "box " + b.name + fmt_types(b.inputs) + "->" + fmt_types(b.outputs) +
                                  (b.flavor == BoxFlavor::Doubled ? " doubled" : "") + " payload=";
                for (auto c : b.payload.data()) {
                    out += fmt_complex(c);
                }
                return out;
            },
            [](const Value &v) {
                return std::string(v.effect ? "effect " : "value ") + std::to_string(v.index) + "@" +
                       v.wire.str();
            },
            [](const Scalar &s) { return "scalar " + fmt_complex(s.value); },
        },
        g);
}

WireType endpoint_type(const Diagram &d, const Endpoint &e) {
    switch (e.kind) {
        case Endpoint::Kind::Input:
            return d.inputs.at(e.index);
        case Endpoint::Kind::Output:
            return d.outputs.at(e.index);
        default:
            return port_types(d.nodes.at(e.node)).at(e.index);
    }
}

void Diagram::validate() const {
    std::vector<std::vector<int>> port_use(nodes.size());
    for (std::size_t n = 0; n < nodes.size(); n++) {
        port_use[n].assign(port_count(nodes[n]), 0);
        if (const auto *s = std::get_if<Spider>(&nodes[n])) {
            if (s->dim < 1) {
                throw InvalidDiagram("spider dimension must be positive");
            }
            for (const auto &w : port_types(*s)) {
                if (w.base_dim != s->dim) {
                    throw InvalidDiagram("spider legs must share the spider's dimension");
                }
            }
            if (s->phase && s->phase->dim() != s->dim) {
                throw InvalidDiagram("spider phase has the wrong dimension");
            }
            if (s->heads == Heads::Double && s->single_headed()) {
                throw InvalidDiagram("a double-headed spider cannot have classical legs");
            }
        } else if (const auto *b = std::get_if<Box>(&nodes[n])) {
            std::vector<std::size_t> shape;
            for (const auto &w : port_types(*b)) {
                shape.push_back(w.index_size());
            }
            if (shape != b->payload.shape()) {
                throw InvalidDiagram("box '" + b->name + "' payload shape does not match its legs");
            }
        } else if (const auto *v = std::get_if<Value>(&nodes[n])) {
            if (v->index < 0 || v->index >= v->wire.base_dim) {
                throw InvalidDiagram("value index out of range");
            }
        }
    }
    std::vector<int> in_use(inputs.size(), 0), out_use(outputs.size(), 0);
    auto mark = [&](const Endpoint &e) {
        switch (e.kind) {
            case Endpoint::Kind::Input:
                if (e.index >= inputs.size()) throw InvalidDiagram("edge refers to a missing input");
                in_use[e.index]++;
                break;
            case Endpoint::Kind::Output:
                if (e.index >= outputs.size()) throw InvalidDiagram("edge refers to a missing output");
                out_use[e.index]++;
                break;
            default:
                if (e.node >= nodes.size() || e.index >= port_use[e.node].size()) {
                    throw InvalidDiagram("edge refers to a missing port");
                }
                port_use[e.node][e.index]++;
        }
    };
    for (const auto &e : edges) {
        mark(e.a);
        mark(e.b);
        if (endpoint_type(*this, e.a) != e.type || endpoint_type(*this, e.b) != e.type) {
            throw InvalidDiagram("edge " + fmt_endpoint(e.a) + " -- " + fmt_endpoint(e.b) +
                                 " joins ports of different wire types");
        }
    }
    auto once = [](const std::vector<int> &v) {
        return std::all_of(v.begin(), v.end(), [](int c) { return c == 1; });
    };
    if (!once(in_use) || !once(out_use)) {
        throw InvalidDiagram("every boundary position must be used exactly once");
    }
    for (std::size_t n = 0; n < nodes.size(); n++) {
        if (!once(port_use[n])) {
            throw InvalidDiagram("every port of node " + std::to_string(n) + " must be used exactly once");
        }
    }
}

bool Diagram::is_plain() const {
    auto cls = [](const WireType &w) { return w.is_classical(); };
    if (!std::all_of(inputs.begin(), inputs.end(), cls) || !std::all_of(outputs.begin(), outputs.end(), cls)) {
        return false;
    }
    for (const auto &e : edges) {
        if (e.type.is_quantum()) {
            return false;
        }
    }
    for (const auto &n : nodes) {
        for (const auto &w : port_types(n)) {
            if (w.is_quantum()) {
                return false;
            }
        }
    }
    return true;
}

std::size_t Diagram::count_spiders() const {
    return static_cast<std::size_t>(std::count_if(
        nodes.begin(), nodes.end(), [](const Generator &g) { return std::holds_alternative<Spider>(g); }));
}

std::vector<std::vector<std::size_t>> Diagram::port_edges() const {
    std::vector<std::vector<std::size_t>> out(nodes.size());
    for (std::size_t n = 0; n < nodes.size(); n++) {
        out[n].assign(port_count(nodes[n]), SIZE_MAX);
    }
    for (std::size_t k = 0; k < edges.size(); k++) {
        for (const auto *e : {&edges[k].a, &edges[k].b}) {
            if (e->is_port()) {
                out[e->node][e->index] = k;
            }
        }
    }
    return out;
}

std::vector<std::size_t> Diagram::input_edges() const {
    std::vector<std::size_t> out(inputs.size(), SIZE_MAX);
    for (std::size_t k = 0; k < edges.size(); k++) {
        for (const auto *e : {&edges[k].a, &edges[k].b}) {
            if (e->kind == Endpoint::Kind::Input) {
                out[e->index] = k;
            }
        }
    }
    return out;
}

std::vector<std::size_t> Diagram::output_edges() const {
    std::vector<std::size_t> out(outputs.size(), SIZE_MAX);
    for (std::size_t k = 0; k < edges.size(); k++) {
        for (const auto *e : {&edges[k].a, &edges[k].b}) {
            if (e->kind == Endpoint::Kind::Output) {
                out[e->index] = k;
            }
        }
    }
    return out;
}

Diagram empty_diagram() {
    return {};
}

Diagram single_node(Generator g) {
    Diagram d;
    auto types = port_types(g);
    std::size_t n_in = input_count(g);
    for (std::size_t p = 0; p < types.size(); p++) {
        if (p < n_in) {
            d.edges.push_back({Endpoint::input(d.inputs.size()), Endpoint::port(0, p), types[p]});
            d.inputs.push_back(types[p]);
        } else {
            d.edges.push_back({Endpoint::port(0, p), Endpoint::output(d.outputs.size()), types[p]});
            d.outputs.push_back(types[p]);
        }
    }
    d.nodes.push_back(std::move(g));
    return d;
}

Diagram identity(WireType w) {
    return identity(std::vector<WireType>{w});
}

Diagram identity(const std::vector<WireType> &ws) {
    Diagram d;
    d.inputs = ws;
    d.outputs = ws;
    for (std::size_t k = 0; k < ws.size(); k++) {
        d.edges.push_back({Endpoint::input(k), Endpoint::output(k), ws[k]});
    }
    return d;
}

Diagram cup(WireType w) {
    Diagram d;
    d.outputs = {w, w};
    d.edges.push_back({Endpoint::output(0), Endpoint::output(1), w});
    return d;
}

Diagram cap(WireType w) {
    Diagram d;
    d.inputs = {w, w};
    d.edges.push_back({Endpoint::input(0), Endpoint::input(1), w});
    return d;
}

Diagram swap(WireType a, WireType b) {
    Diagram d;
    d.inputs = {a, b};
    d.outputs = {b, a};
    d.edges.push_back({Endpoint::input(0), Endpoint::output(1), a});
    d.edges.push_back({Endpoint::input(1), Endpoint::output(0), b});
    return d;
}

Diagram scalar(Complex z) {
    Diagram d;
    d.nodes.push_back(Scalar{z});
    return d;
}

Diagram circle(WireType w) {
    return compose_seq(cup(w), cap(w));
}

Diagram plug(const Diagram &f, const Diagram &g, const std::vector<std::size_t> &f_outputs,
             const std::vector<std::size_t> &g_inputs) {
    if (f_outputs.size() != g_inputs.size()) {
        throw BoundaryMismatch("plug needs as many outputs as inputs");
    }
    for (std::size_t t = 0; t < f_outputs.size(); t++) {
        if (f_outputs[t] >= f.outputs.size() || g_inputs[t] >= g.inputs.size()) {
            throw BoundaryMismatch("plug refers to a missing boundary position");
        }
        if (f.outputs[f_outputs[t]] != g.inputs[g_inputs[t]]) {
            throw BoundaryMismatch("cannot plug " + f.outputs[f_outputs[t]].str() + " into " +
                                   g.inputs[g_inputs[t]].str());
        }
    }
    constexpr std::size_t kNone = SIZE_MAX;
    std::vector<std::size_t> f_out_mid(f.outputs.size(), kNone), g_in_mid(g.inputs.size(), kNone);
    for (std::size_t t = 0; t < f_outputs.size(); t++) {
        if (f_out_mid[f_outputs[t]] != kNone || g_in_mid[g_inputs[t]] != kNone) {
            throw BoundaryMismatch("plug uses a boundary position twice");
        }
        f_out_mid[f_outputs[t]] = t;
        g_in_mid[g_inputs[t]] = t;
    }

    Diagram r;
    r.nodes = f.nodes;
    r.nodes.insert(r.nodes.end(), g.nodes.begin(), g.nodes.end());
    std::size_t offset = f.nodes.size();

    std::vector<std::size_t> f_out_new(f.outputs.size(), kNone), g_in_new(g.inputs.size(), kNone);
    r.inputs = f.inputs;
    for (std::size_t k = 0; k < g.inputs.size(); k++) {
        if (g_in_mid[k] == kNone) {
            g_in_new[k] = r.inputs.size();
            r.inputs.push_back(g.inputs[k]);
        }
    }
    for (std::size_t k = 0; k < f.outputs.size(); k++) {
        if (f_out_mid[k] == kNone) {
            f_out_new[k] = r.outputs.size();
            r.outputs.push_back(f.outputs[k]);
        }
    }
    std::size_t g_out_offset = r.outputs.size();
    r.outputs.insert(r.outputs.end(), g.outputs.begin(), g.outputs.end());

    // A vertex is either an endpoint of the result or a glue point.
    struct Vertex {
        bool mid = false;
        std::size_t mid_id = 0;
        Endpoint ep;
    };
    struct Link {
        Vertex a, b;
        WireType type;
    };
    auto map_f = [&](const Endpoint &e) -> Vertex {
        switch (e.kind) {
            case Endpoint::Kind::Input:
                return {false, 0, Endpoint::input(e.index)};
            case Endpoint::Kind::Output:
                if (f_out_mid[e.index] != kNone) return {true, f_out_mid[e.index], {}};
                return {false, 0, Endpoint::output(f_out_new[e.index])};
            default:
                return {false, 0, e};
        }
    };
    auto map_g = [&](const Endpoint &e) -> Vertex {
        switch (e.kind) {
            case Endpoint::Kind::Input:
                if (g_in_mid[e.index] != kNone) return {true, g_in_mid[e.index], {}};
                return {false, 0, Endpoint::input(g_in_new[e.index])};
            case Endpoint::Kind::Output:
                return {false, 0, Endpoint::output(g_out_offset + e.index)};
            default:
                return {false, 0, Endpoint::port(e.node + offset, e.index)};
        }
    };
    std::vector<Link> links;
    for (const auto &e : f.edges) {
        links.push_back({map_f(e.a), map_f(e.b), e.type});
    }
    for (const auto &e : g.edges) {
        links.push_back({map_g(e.a), map_g(e.b), e.type});
    }
    std::vector<std::vector<std::size_t>> at_mid(f_outputs.size());
    for (std::size_t l = 0; l < links.size(); l++) {
        if (links[l].a.mid) at_mid[links[l].a.mid_id].push_back(l);
        if (links[l].b.mid) at_mid[links[l].b.mid_id].push_back(l);
    }
    std::vector<bool> used(links.size(), false);
    // Follows the chain of glue points leaving link l through the end opposite to `enter_a`.
    auto walk = [&](std::size_t l, bool enter_a) {
        std::size_t cur = l;
        while (true) {
            used[cur] = true;
            const Link &lk = links[cur];
            const Vertex &next = enter_a ? lk.b : lk.a;
            if (!next.mid) {
                return next.ep;
            }
            const auto &pair = at_mid[next.mid_id];
            cur = pair[0] == cur ? pair[1] : pair[0];
            enter_a = links[cur].a.mid && links[cur].a.mid_id == next.mid_id;
        }
    };
    for (std::size_t l = 0; l < links.size(); l++) {
        if (used[l]) continue;
        if (!links[l].a.mid) {
            Endpoint end = walk(l, true);
            r.edges.push_back({links[l].a.ep, end, links[l].type});
        } else if (!links[l].b.mid) {
            Endpoint end = walk(l, false);
            r.edges.push_back({links[l].b.ep, end, links[l].type});
        }
    }
    // Whatever is left consists of closed loops through glue points only.
    for (std::size_t l = 0; l < links.size(); l++) {
        if (used[l]) continue;
        std::size_t cur = l;
        std::size_t mid = links[l].a.mid_id;
        while (!used[cur]) {
            used[cur] = true;
            const Link &lk = links[cur];
            std::size_t next_mid = lk.a.mid_id == mid ? lk.b.mid_id : lk.a.mid_id;
            const auto &pair = at_mid[next_mid];
            cur = pair[0] == cur ? pair[1] : pair[0];
            mid = next_mid;
        }
        r.nodes.push_back(Scalar{Complex(static_cast<double>(links[l].type.index_size()), 0.0)});
    }
    return r;
}

Diagram compose_seq(const Diagram &f, const Diagram &g) {
    if (f.outputs != g.inputs) {
        throw BoundaryMismatch("cannot compose: outputs " + fmt_types(f.outputs) + " vs inputs " +
                               fmt_types(g.inputs));
    }
    std::vector<std::size_t> idx(f.outputs.size());
    std::iota(idx.begin(), idx.end(), 0);
    return plug(f, g, idx, idx);
}

Diagram compose_par(const Diagram &f, const Diagram &g) {
    Diagram r = f;
    std::size_t offset = f.nodes.size();
    r.nodes.insert(r.nodes.end(), g.nodes.begin(), g.nodes.end());
    r.inputs.insert(r.inputs.end(), g.inputs.begin(), g.inputs.end());
    r.outputs.insert(r.outputs.end(), g.outputs.begin(), g.outputs.end());
    auto shift = [&](Endpoint e) {
        switch (e.kind) {
            case Endpoint::Kind::Input:
                e.index += f.inputs.size();
                break;
            case Endpoint::Kind::Output:
                e.index += f.outputs.size();
                break;
            default:
                e.node += offset;
        }
        return e;
    };
    for (const auto &e : g.edges) {
        r.edges.push_back({shift(e.a), shift(e.b), e.type});
    }
    return r;
}

Diagram compose_seq(std::initializer_list<Diagram> stages) {
    Diagram r;
    bool first = true;
    for (const auto &s : stages) {
        r = first ? s : compose_seq(r, s);
        first = false;
    }
    return r;
}

Diagram compose_par(std::initializer_list<Diagram> parts) {
    Diagram r;
    for (const auto &p : parts) {
        r = compose_par(r, p);
    }
    return r;
}

Diagram dagger(const Generator &g) {
    return single_node(std::visit(
        overloaded{
            [](const Spider &s) -> Generator {
                Spider t = s;
                std::swap(t.inputs, t.outputs);
                if (t.phase) t.phase = t.phase->inverse();
                return t;
            },
            [](const Box &b) -> Generator {
                Box t = b;
                std::swap(t.inputs, t.outputs);
                std::vector<std::size_t> perm;
                for (std::size_t k = 0; k < b.outputs.size(); k++) perm.push_back(b.inputs.size() + k);
                for (std::size_t k = 0; k < b.inputs.size(); k++) perm.push_back(k);
                t.payload = b.payload.permuted(perm).conj();
                const std::string suffix = "^dag";
                if (t.name.size() > suffix.size() && t.name.ends_with(suffix)) {
                    t.name.resize(t.name.size() - suffix.size());
                } else {
                    t.name += suffix;
                }
                return t;
            },
            [](const Value &v) -> Generator {
                Value t = v;
                t.effect = !v.effect;
                return t;
            },
            [](const Scalar &s) -> Generator { return Scalar{std::conj(s.value)}; },
        },
        g));
}

Diagram dagger(const Diagram &f) {
    Diagram r;
    r.inputs = f.outputs;
    r.outputs = f.inputs;
    std::vector<std::size_t> n_in(f.nodes.size()), n_out(f.nodes.size());
    for (std::size_t n = 0; n < f.nodes.size(); n++) {
        n_in[n] = input_count(f.nodes[n]);
        n_out[n] = port_count(f.nodes[n]) - n_in[n];
        r.nodes.push_back(dagger(f.nodes[n]).nodes.at(0));
    }
    auto flip = [&](Endpoint e) {
        switch (e.kind) {
            case Endpoint::Kind::Input:
                return Endpoint::output(e.index);
            case Endpoint::Kind::Output:
                return Endpoint::input(e.index);
            default:
                return Endpoint::port(e.node, remap_dagger_port(e.index, n_in[e.node], n_out[e.node]));
        }
    };
    for (const auto &e : f.edges) {
        r.edges.push_back({flip(e.a), flip(e.b), e.type});
    }
    return r;
}

Diagram transpose(const Diagram &f) {
    Diagram r = f;
    std::swap(r.inputs, r.outputs);
    for (auto &e : r.edges) {
        for (auto *p : {&e.a, &e.b}) {
            if (p->kind == Endpoint::Kind::Input) {
                p->kind = Endpoint::Kind::Output;
            } else if (p->kind == Endpoint::Kind::Output) {
                p->kind = Endpoint::Kind::Input;
            }
        }
    }
    return r;
}

Diagram conjugate(const Diagram &f) {
    return transpose(dagger(f));
}

Diagram double_diagram(const Diagram &f) {
    if (!f.is_plain()) {
        throw NotPlain("double() expects a diagram with only classical (single) wires");
    }
    auto dbl = [](std::vector<WireType> ws) {
        for (auto &w : ws) w.kind = WireKind::Quantum;
        return ws;
    };
    Diagram r;
    r.inputs = dbl(f.inputs);
    r.outputs = dbl(f.outputs);
    for (const auto &g : f.nodes) {
        r.nodes.push_back(std::visit(overloaded{
                                         [&](const Spider &s) -> Generator {
                                             Spider t = s;
                                             t.inputs = dbl(s.inputs);
                                             t.outputs = dbl(s.outputs);
                                             t.heads = Heads::Double;
                                             return t;
                                         },
                                         [&](const Box &b) -> Generator {
                                             Box t = b;
                                             t.inputs = dbl(b.inputs);
                                             t.outputs = dbl(b.outputs);
                                             t.payload = double_tensor(b.payload);
                                             t.flavor = BoxFlavor::Doubled;
                                             return t;
                                         },
                                         [](const Value &v) -> Generator {
                                             Value t = v;
                                             t.wire.kind = WireKind::Quantum;
                                             return t;
                                         },
                                         [](const Scalar &s) -> Generator {
                                             return Scalar{Complex(std::norm(s.value), 0.0)};
                                         },
                                     },
                                     g));
    }
    for (auto e : f.edges) {
        e.type.kind = WireKind::Quantum;
        r.edges.push_back(e);
    }
    return r;
}

Diagram permute_boundary(const Diagram &f, const std::vector<std::size_t> &in_perm,
                         const std::vector<std::size_t> &out_perm) {
    if (in_perm.size() != f.inputs.size() || out_perm.size() != f.outputs.size()) {
        throw BoundaryMismatch("boundary permutation has the wrong length");
    }
    Diagram r = f;
    std::vector<std::size_t> in_inv(in_perm.size()), out_inv(out_perm.size());
    for (std::size_t k = 0; k < in_perm.size(); k++) {
        r.inputs[k] = f.inputs.at(in_perm[k]);
        in_inv[in_perm[k]] = k;
    }
    for (std::size_t k = 0; k < out_perm.size(); k++) {
        r.outputs[k] = f.outputs.at(out_perm[k]);
        out_inv[out_perm[k]] = k;
    }
    for (auto &e : r.edges) {
        for (auto *p : {&e.a, &e.b}) {
            if (p->kind == Endpoint::Kind::Input) {
                p->index = in_inv[p->index];
            } else if (p->kind == Endpoint::Kind::Output) {
                p->index = out_inv[p->index];
            }
        }
    }
    return r;
}

std::string describe(const Diagram &d) {
    std::string out = "diagram " + fmt_types(d.inputs) + " -> " + fmt_types(d.outputs) + "\n";
    for (std::size_t n = 0; n < d.nodes.size(); n++) {
        out += "  n" + std::to_string(n) + ": " + generator_label(d.nodes[n]) + "\n";
    }
    for (const auto &e : d.edges) {
        out += "  " + fmt_endpoint(e.a) + " -- " + fmt_endpoint(e.b) + " : " + e.type.str() + "\n";
    }
    return out;
}

std::uint64_t structural_hash(const Diagram &d) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : describe(d)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace cqd
