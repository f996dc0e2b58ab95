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

#include <algorithm>
#include <cmath>
#include <set>

#include "cqd/entanglement.hpp"
#include "cqd/errors.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"
#include "cqd/rewrite.hpp"

namespace cqd {

namespace {

// ---------------------------------------------------------------------------
// Graph helpers.

struct Leg {
    WireType type;
    Endpoint outer;
    bool input = false;
};

Endpoint other_end(const Diagram &d, std::size_t edge, const Endpoint &self) {
    const Edge &e = d.edges[edge];
    return e.a == self ? e.b : e.a;
}

Endpoint port_partner(const Diagram &d, const std::vector<std::vector<std::size_t>> &pe, std::size_t n,
                      std::size_t p) {
    return other_end(d, pe[n][p], Endpoint::port(n, p));
}

bool in_set(const Endpoint &e, std::initializer_list<std::size_t> nodes) {
    return e.is_port() && std::find(nodes.begin(), nodes.end(), e.node) != nodes.end();
}

// Legs of node n whose partner lies outside `region`.
std::vector<Leg> outer_legs(const Diagram &d, const std::vector<std::vector<std::size_t>> &pe, std::size_t n,
                            std::initializer_list<std::size_t> region) {
    std::vector<Leg> out;
    auto types = port_types(d.nodes[n]);
    std::size_t n_in = input_count(d.nodes[n]);
    for (std::size_t p = 0; p < types.size(); p++) {
        Endpoint o = port_partner(d, pe, n, p);
        if (!in_set(o, region)) out.push_back({types[p], o, p < n_in});
    }
    return out;
}

bool has_self_loop(const Diagram &d, const std::vector<std::vector<std::size_t>> &pe, std::size_t n) {
    for (std::size_t p = 0; p < pe[n].size(); p++) {
        Endpoint o = port_partner(d, pe, n, p);
        if (o.is_port() && o.node == n) return true;
    }
    return false;
}

// Builds a spider over `legs` and the matching attachment list.
std::pair<Diagram, std::vector<Endpoint>> spider_over(const Spider &proto, const std::vector<Leg> &legs) {
    Spider s = proto;
    s.inputs.clear();
    s.outputs.clear();
    std::vector<Endpoint> attach_in, attach_out;
    for (const auto &l : legs) {
        if (l.input) {
            s.inputs.push_back(l.type);
            attach_in.push_back(l.outer);
        } else {
            s.outputs.push_back(l.type);
            attach_out.push_back(l.outer);
        }
    }
    attach_in.insert(attach_in.end(), attach_out.begin(), attach_out.end());
    return {single_node(s), attach_in};
}

bool unit_phase(const std::optional<PhaseVector> &p) {
    return !p || p->is_unit(1e-12);
}

std::optional<PhaseVector> canonical(std::optional<PhaseVector> p) {
    if (unit_phase(p)) return std::nullopt;
    return p;
}

std::optional<PhaseVector> phase_product(const std::optional<PhaseVector> &a, const std::optional<PhaseVector> &b) {
    if (!a) return canonical(b);
    if (!b) return canonical(a);
    return canonical(*a * *b);
}

// ---------------------------------------------------------------------------
// Random instances.

int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64 &rng) {
    return uniform_int(rng, 0, 1) == 1;
}

PhaseVector random_phase(std::mt19937_64 &rng, int dim) {
    std::uniform_real_distribution<double> u(-M_PI, M_PI);
    std::vector<double> angles;
    for (int i = 1; i < dim; i++) angles.push_back(u(rng));
    return PhaseVector::from_angles(angles);
}

WireType random_wire(std::mt19937_64 &rng, int dim) {
    return coin(rng) ? WireType::quantum(dim) : WireType::classical(dim);
}

std::vector<WireType> random_legs(std::mt19937_64 &rng, int dim, int count, bool quantum_only) {
    std::vector<WireType> legs;
    for (int i = 0; i < count; i++) legs.push_back(quantum_only ? WireType::quantum(dim) : random_wire(rng, dim));
    return legs;
}

Tensor random_tensor(std::mt19937_64 &rng, const std::vector<WireType> &legs) {
    std::vector<std::size_t> shape;
    for (const auto &w : legs) shape.push_back(w.index_size());
    Tensor t = Tensor::zeros(shape);
    std::normal_distribution<double> g(0.0, 1.0);
    for (auto &z : t.data()) z = Complex(g(rng), g(rng));
    return t;
}

// Closes the open boundary of `core` with random boxes so instances test
// more than the bare rule.
Diagram dress(std::mt19937_64 &rng, const Diagram &core) {
    Diagram pre = identity(core.inputs);
    if (!core.inputs.empty() && coin(rng)) {
        auto w = core.inputs.front();
        Diagram b = box("f", {w}, {w}, random_tensor(rng, {w, w}));
        std::vector<WireType> rest(core.inputs.begin() + 1, core.inputs.end());
        pre = compose_par(b, identity(rest));
    }
    return compose_seq(pre, core);
}

// Instances whose boundary tensor would exceed the evaluation cap are redrawn.
bool fits(const Diagram &d) {
    double entries = 1.0;
    for (const auto *side : {&d.inputs, &d.outputs}) {
        for (const auto &w : *side) entries *= static_cast<double>(w.index_size());
    }
    return entries <= static_cast<double>(kMaxTensorEntries);
}

// ---------------------------------------------------------------------------
// Rule base classes.

class NormalizingRule : public RewriteRule {
   public:
    RuleInstance sample(std::mt19937_64 &rng, int dim) const override {
        for (int attempt = 0; attempt < 64; attempt++) {
            Diagram lhs = sample_lhs(rng, dim);
            if (!fits(lhs)) continue;
            auto matches = find_matches(lhs);
            if (!matches.empty()) {
                return {lhs, apply(lhs, matches.front())};
            }
        }
        throw std::logic_error("rule '" + name() + "' could not sample a matching instance");
    }

   protected:
    virtual Diagram sample_lhs(std::mt19937_64 &rng, int dim) const = 0;
};

class Lemma : public RewriteRule {
   public:
    bool is_lemma() const override {
        return true;
    }
    std::vector<Match> find_matches(const Diagram &) const override {
        return {};
    }
    Diagram apply(const Diagram &, const Match &) const override {
        throw Unsupported("lemma '" + name() + "' is not applied by rewriting");
    }
};

// ---------------------------------------------------------------------------
// Normalizing rules.

class SpiderLoopRule : public NormalizingRule {
   public:
    std::string name() const override {
        return "spider-loop";
    }
    std::string law() const override {
        return "spider fusion (self-loop)";
    }
    std::string summary() const override {
        return "drops a wire joining two legs of the same spider";
    }
    std::vector<Match> find_matches(const Diagram &d) const override {
        std::vector<Match> out;
        auto pe = d.port_edges();
        for (std::size_t n = 0; n < d.nodes.size(); n++) {
            if (std::holds_alternative<Spider>(d.nodes[n]) && has_self_loop(d, pe, n)) out.push_back({{n}, {}});
        }
        return out;
    }
    Diagram apply(const Diagram &d, const Match &m) const override {
        auto pe = d.port_edges();
        std::size_t n = m.nodes.at(0);
        auto [r, attach] = spider_over(std::get<Spider>(d.nodes[n]), outer_legs(d, pe, n, {n}));
        return replace_subgraph(d, {n}, r, attach);
    }

   protected:
    Diagram sample_lhs(std::mt19937_64 &rng, int dim) const override {
        bool dbl = coin(rng);
        auto w = dbl ? WireType::quantum(dim) : random_wire(rng, dim);
        auto outs = random_legs(rng, dim, uniform_int(rng, 0, 2), dbl);
        outs.insert(outs.begin(), {w, w});
        auto ins = random_legs(rng, dim, uniform_int(rng, 0, 2), dbl);
        std::optional<PhaseVector> ph;
        if (coin(rng)) ph = random_phase(rng, dim);
        Diagram s = spider(dim, ins, outs, ph, dbl ? Heads::Double : Heads::Single);
        return dress(rng, plug(s, cap(w), {0, 1}, {0, 1}));
    }
};

enum class FusionKind { Spider, Bastard, Phase };

FusionKind classify_fusion(const Spider &a, const Spider &b) {
    if (!unit_phase(a.phase) || !unit_phase(b.phase)) return FusionKind::Phase;
    auto any_quantum = [](const Spider &s) {
        auto t = port_types(s);
        return std::any_of(t.begin(), t.end(), [](const WireType &w) { return w.is_quantum(); });
    };
    bool bastard = a.single_headed() != b.single_headed() || (a.single_headed() && any_quantum(a)) ||
                   (b.single_headed() && any_quantum(b));
    return bastard ? FusionKind::Bastard : FusionKind::Spider;
}

class FusionRule : public NormalizingRule {
   public:
    explicit FusionRule(FusionKind kind) : kind_(kind) {
    }
    std::string name() const override {
        switch (kind_) {
            case FusionKind::Spider:
                return "spider-fusion";
            case FusionKind::Bastard:
                return "bastard-fusion";
            default:
                return "phase-fusion";
        }
    }
    std::string law() const override {
        switch (kind_) {
            case FusionKind::Spider:
                return "spider fusion";
            case FusionKind::Bastard:
                return "fusion with a single-headed spider";
            default:
                return "phase spider fusion";
        }
    }
    std::string summary() const override {
        switch (kind_) {
            case FusionKind::Spider:
                return "merges two connected unphased spiders that are both classical or both double-headed";
            case FusionKind::Bastard:
                return "merges connected spiders when one is single-headed with a quantum leg; the result is "
                       "single-headed and a double-headed phase vanishes";
            default:
                return "merges connected phased spiders; phases multiply componentwise";
        }
    }
    std::vector<Match> find_matches(const Diagram &d) const override {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto &e : d.edges) {
            if (!e.a.is_port() || !e.b.is_port() || e.a.node == e.b.node) continue;
            const auto *sa = std::get_if<Spider>(&d.nodes[e.a.node]);
            const auto *sb = std::get_if<Spider>(&d.nodes[e.b.node]);
            if (!sa || !sb || sa->dim != sb->dim || sa->family != sb->family) continue;
            if (classify_fusion(*sa, *sb) != kind_) continue;
            seen.insert(std::minmax(e.a.node, e.b.node));
        }
        std::vector<Match> out;
        for (auto [a, b] : seen) out.push_back({{a, b}, {}});
        return out;
    }
    Diagram apply(const Diagram &d, const Match &m) const override {
        auto pe = d.port_edges();
        std::size_t a = m.nodes.at(0), b = m.nodes.at(1);
        const auto &sa = std::get<Spider>(d.nodes[a]);
        const auto &sb = std::get<Spider>(d.nodes[b]);
        auto legs = outer_legs(d, pe, a, {a, b});
        auto legs_b = outer_legs(d, pe, b, {a, b});
        legs.insert(legs.end(), legs_b.begin(), legs_b.end());
        Spider proto = sa;
        bool single_a = sa.single_headed(), single_b = sb.single_headed();
        if (single_a == single_b) {
            proto.heads = single_a ? Heads::Single : Heads::Double;
            proto.phase = phase_product(sa.phase, sb.phase);
        } else {
            proto.heads = Heads::Single;
            proto.phase = canonical(single_a ? sa.phase : sb.phase);
        }
        auto [r, attach] = spider_over(proto, legs);
        return replace_subgraph(d, {a, b}, r, attach);
    }

   protected:
    Diagram sample_lhs(std::mt19937_64 &rng, int dim) const override {
        bool dbl_a = true, dbl_b = true;
        bool phased = kind_ == FusionKind::Phase;
        switch (kind_) {
            case FusionKind::Spider:
                dbl_a = dbl_b = coin(rng);
                break;
            case FusionKind::Bastard:
                dbl_a = coin(rng);
                dbl_b = false;
                break;
            case FusionKind::Phase:
                dbl_a = coin(rng);
                dbl_b = coin(rng);
                break;
        }
        bool classical_only = kind_ == FusionKind::Spider && !dbl_a;
        auto make = [&](bool dbl, std::size_t shared, bool shared_first) {
            std::vector<WireType> ins = classical_only ? std::vector<WireType>(uniform_int(rng, 0, 2), WireType::classical(dim))
                                                       : random_legs(rng, dim, uniform_int(rng, 0, 2), dbl);
            std::vector<WireType> outs = classical_only ? std::vector<WireType>(uniform_int(rng, 0, 2), WireType::classical(dim))
                                                        : random_legs(rng, dim, uniform_int(rng, 0, 2), dbl);
            auto w = (dbl_a || dbl_b || kind_ == FusionKind::Bastard) ? WireType::quantum(dim) : WireType::classical(dim);
            auto &side = shared_first ? outs : ins;
            side.insert(side.begin(), shared, w);
            if (kind_ == FusionKind::Bastard && !dbl) {
                // Guarantee a quantum leg on the single-headed spider.
                if (std::none_of(ins.begin(), ins.end(), [](auto x) { return x.is_quantum(); }) &&
                    std::none_of(outs.begin(), outs.end(), [](auto x) { return x.is_quantum(); })) {
                    outs.push_back(WireType::quantum(dim));
                }
            }
            std::optional<PhaseVector> ph;
            if (phased) ph = random_phase(rng, dim);
            return spider(dim, ins, outs, ph, dbl ? Heads::Double : Heads::Single);
        };
        std::size_t shared = static_cast<std::size_t>(uniform_int(rng, 1, 2));
        Diagram a = make(dbl_a, shared, true);
        Diagram b = make(dbl_b, shared, false);
        std::vector<std::size_t> idx(shared);
        for (std::size_t k = 0; k < shared; k++) idx[k] = k;
        return dress(rng, plug(a, b, idx, idx));
    }

   private:
    FusionKind kind_;
};

class WireSpiderRule : public NormalizingRule {
   public:
    std::string name() const override {
        return "wire-spider";
    }
    std::string law() const override {
        return "identity wire as a spider; yanking";
    }
    std::string summary() const override {
        return "replaces an unphased two-legged classical or double-headed spider by a plain wire";
    }
    std::vector<Match> find_matches(const Diagram &d) const override {
        std::vector<Match> out;
        auto pe = d.port_edges();
        for (std::size_t n = 0; n < d.nodes.size(); n++) {
            const auto *s = std::get_if<Spider>(&d.nodes[n]);
            if (!s || s->leg_count() != 2 || !unit_phase(s->phase) || has_self_loop(d, pe, n)) continue;
            auto t = port_types(*s);
            if (t[0] != t[1]) continue;
            if (t[0].is_quantum() && s->single_headed()) continue;
            out.push_back({{n}, {}});
        }
        return out;
    }
    Diagram apply(const Diagram &d, const Match &m) const override {
        auto pe = d.port_edges();
        std::size_t n = m.nodes.at(0);
        auto t = port_types(d.nodes[n]);
        return replace_subgraph(d, {n}, identity(t[0]), {port_partner(d, pe, n, 0), port_partner(d, pe, n, 1)});
    }

   protected:
    Diagram sample_lhs(std::mt19937_64 &rng, int dim) const override {
        auto w = random_wire(rng, dim);
        int ins = uniform_int(rng, 0, 2);
        Diagram s = spider(dim, std::vector<WireType>(ins, w), std::vector<WireType>(2 - ins, w), std::nullopt,
                           w.is_quantum() ? Heads::Double : Heads::Single);
        return dress(rng, s);
    }
};

class CopyRule : public NormalizingRule {
   public:
    std::string name() const override {
        return "copy";
    }
    std::string law() const override {
        return "classical values are copied by spiders";
    }
    std::string summary() const override {
        return "a basis value on one leg of a spider becomes the same value on every other leg, times the "
               "phase weight";
    }
    std::vector<Match> find_matches(const Diagram &d) const override {
        std::vector<Match> out;
        auto pe = d.port_edges();
        for (std::size_t n = 0; n < d.nodes.size(); n++) {
            const auto *s = std::get_if<Spider>(&d.nodes[n]);
            if (!s || s->family != 0 || has_self_loop(d, pe, n)) continue;
            for (std::size_t p = 0; p < pe[n].size(); p++) {
                Endpoint o = port_partner(d, pe, n, p);
                if (o.is_port() && std::holds_alternative<Value>(d.nodes[o.node])) {
                    out.push_back({{n, o.node}, {p}});
                }
            }
        }
        return out;
    }
    Diagram apply(const Diagram &d, const Match &m) const override {
        auto pe = d.port_edges();
        std::size_t n = m.nodes.at(0), v = m.nodes.at(1);
        const auto &s = std::get<Spider>(d.nodes[n]);
        int i = std::get<Value>(d.nodes[v]).index;
        Complex weight = 1.0;
        if (s.single_headed() && s.phase) weight = (*s.phase)[static_cast<std::size_t>(i)];
        Diagram effects, states;
        std::vector<Endpoint> attach_in, attach_out;
        for (const auto &l : outer_legs(d, pe, n, {n, v})) {
            if (l.input) {
                effects = compose_par(effects, single_node(Value{l.type, i, true}));
                attach_in.push_back(l.outer);
            } else {
                states = compose_par(states, single_node(Value{l.type, i, false}));
                attach_out.push_back(l.outer);
            }
        }
        Diagram r = compose_par(effects, states);
        if (std::abs(weight - 1.0) > 1e-12) r = compose_par(r, scalar(weight));
        attach_in.insert(attach_in.end(), attach_out.begin(), attach_out.end());
        return replace_subgraph(d, {n, v}, r, attach_in);
    }

   protected:
    Diagram sample_lhs(std::mt19937_64 &rng, int dim) const override {
        bool dbl = coin(rng);
        auto w = dbl ? WireType::quantum(dim) : random_wire(rng, dim);
        auto ins = random_legs(rng, dim, uniform_int(rng, 0, 2), dbl);
        auto outs = random_legs(rng, dim, uniform_int(rng, 0, 3), dbl);
        ins.insert(ins.begin(), w);
        std::optional<PhaseVector> ph;
        if (coin(rng)) ph = random_phase(rng, dim);
        Diagram s = spider(dim, ins, outs, ph, dbl ? Heads::Double : Heads::Single);
        Value val{w, uniform_int(rng, 0, dim - 1), false};
        std::vector<WireType> rest(ins.begin() + 1, ins.end());
        return compose_seq(compose_par(single_node(val), identity(rest)), s);
    }
};

class ValueContractRule : public NormalizingRule {
   public:
    std::string name() const override {
        return "value-contract";
    }
    std::string law() const override {
        return "orthonormality of classical values";
    }
    std::string summary() const override {
        return "a basis value meeting a basis effect becomes the scalar 1 or 0";
    }
    std::vector<Match> find_matches(const Diagram &d) const override {
        std::vector<Match> out;
        for (const auto &e : d.edges) {
            if (!e.a.is_port() || !e.b.is_port()) continue;
            if (std::holds_alternative<Value>(d.nodes[e.a.node]) && std::holds_alternative<Value>(d.nodes[e.b.node])) {
                auto [x, y] = std::minmax(e.a.node, e.b.node);
                out.push_back({{x, y}, {}});
            }
        }
        std::sort(out.begin(), out.end(), [](const Match &a, const Match &b) { return a.nodes < b.nodes; });
        return out;
    }
    Diagram apply(const Diagram &d, const Match &m) const override {
        const auto &a = std::get<Value>(d.nodes[m.nodes.at(0)]);
        const auto &b = std::get<Value>(d.nodes[m.nodes.at(1)]);
        return replace_subgraph(d, m.nodes, scalar(a.index == b.index ? 1.0 : 0.0), {});
    }

   protected:
    Diagram sample_lhs(std::mt19937_64 &rng, int dim) const override {
        auto w = random_wire(rng, dim);
        return compose_seq(single_node(Value{w, uniform_int(rng, 0, dim - 1), false}),
                           single_node(Value{w, uniform_int(rng, 0, dim - 1), true}));
    }
};

class SpiderScalarRule : public NormalizingRule {
   public:
    std::string name() const override {
        return "spider-scalar";
    }
    std::string law() const override {
        return "a spider without legs is a number";
    }
    std::string summary() const override {
        return "replaces a leg-free spider by its scalar value";
    }
    std::vector<Match> find_matches(const Diagram &d) const override {
        std::vector<Match> out;
        for (std::size_t n = 0; n < d.nodes.size(); n++) {
            const auto *s = std::get_if<Spider>(&d.nodes[n]);
            if (s && s->leg_count() == 0) out.push_back({{n}, {}});
        }
        return out;
    }
    Diagram apply(const Diagram &d, const Match &m) const override {
        Complex z = generator_tensor(d.nodes[m.nodes.at(0)])[0];
        return replace_subgraph(d, m.nodes, scalar(z), {});
    }

   protected:
    Diagram sample_lhs(std::mt19937_64 &rng, int dim) const override {
        std::optional<PhaseVector> ph;
        if (coin(rng)) ph = random_phase(rng, dim);
        return spider(dim, {}, {}, ph, coin(rng) ? Heads::Double : Heads::Single);
    }
};

// A controlled box: inputs (classical control, w), output w.
bool controlled_shape(const Generator &g) {
    const auto *b = std::get_if<Box>(&g);
    return b && b->inputs.size() == 2 && b->outputs.size() == 1 && b->inputs[0].is_classical() &&
           b->inputs[1] == b->outputs[0];
}

bool branches_invert(const Box &x, const Box &y) {
    std::size_t k = x.inputs[0].index_size();
    std::size_t n = x.outputs[0].index_size();
    if (y.inputs != x.inputs) return false;
    auto entry = [n](const Box &b, std::size_t c, std::size_t out, std::size_t in) {
        return b.payload[(c * n + in) * n + out];
    };
    for (std::size_t c = 0; c < k; c++) {
        for (std::size_t o = 0; o < n; o++) {
            for (std::size_t i = 0; i < n; i++) {
                Complex acc = 0.0;
                for (std::size_t mid = 0; mid < n; mid++) acc += entry(y, c, o, mid) * entry(x, c, mid, i);
                if (std::abs(acc - (o == i ? 1.0 : 0.0)) > 1e-9) return false;
            }
        }
    }
    return true;
}

class ControlledCancelRule : public NormalizingRule {
   public:
    std::string name() const override {
        return "cu-cancel";
    }
    std::string law() const override {
        return "controlled unitaries: a correction undoes its branch";
    }
    std::string summary() const override {
        return "two controlled boxes in sequence sharing their control, whose branches compose to the "
               "identity, become a wire; a direct control wire leaves the scalar k, a shared control spider "
               "loses the two legs";
    }
    std::vector<Match> find_matches(const Diagram &d) const override {
        std::vector<Match> out;
        auto pe = d.port_edges();
        for (std::size_t x = 0; x < d.nodes.size(); x++) {
            if (!controlled_shape(d.nodes[x])) continue;
            Endpoint o = port_partner(d, pe, x, 2);
            if (!o.is_port() || o.index != 1 || o.node == x || !controlled_shape(d.nodes[o.node])) continue;
            std::size_t y = o.node;
            const auto &bx = std::get<Box>(d.nodes[x]);
            const auto &by = std::get<Box>(d.nodes[y]);
            if (!branches_invert(bx, by)) continue;
            Endpoint in_x = port_partner(d, pe, x, 1), out_y = port_partner(d, pe, y, 2);
            if (in_set(in_x, {x, y}) || in_set(out_y, {x, y})) continue;
            Endpoint cx = port_partner(d, pe, x, 0);
            if (cx == Endpoint::port(y, 0)) {
                out.push_back({{x, y}, {}});
                continue;
            }
            Endpoint cy = port_partner(d, pe, y, 0);
            if (!cx.is_port() || !cy.is_port() || cx.node != cy.node) continue;
            std::size_t s = cx.node;
            if (!std::holds_alternative<Spider>(d.nodes[s]) || has_self_loop(d, pe, s)) continue;
            if (in_set(in_x, {s}) || in_set(out_y, {s})) continue;
            bool clean = true;
            for (const auto &l : outer_legs(d, pe, s, {s})) {
                if (in_set(l.outer, {x, y}) && !(l.outer == Endpoint::port(x, 0) || l.outer == Endpoint::port(y, 0))) {
                    clean = false;
                }
            }
            if (clean) out.push_back({{x, y, s}, {cx.index, cy.index}});
        }
        return out;
    }
    Diagram apply(const Diagram &d, const Match &m) const override {
        auto pe = d.port_edges();
        std::size_t x = m.nodes.at(0), y = m.nodes.at(1);
        const auto &bx = std::get<Box>(d.nodes[x]);
        WireType w = bx.outputs[0];
        Endpoint in_x = port_partner(d, pe, x, 1), out_y = port_partner(d, pe, y, 2);
        if (m.nodes.size() == 2) {
            Diagram r = compose_par(identity(w), scalar(static_cast<double>(bx.inputs[0].index_size())));
            return replace_subgraph(d, {x, y}, r, {in_x, out_y});
        }
        std::size_t s = m.nodes.at(2);
        auto [rest, attach_s] = spider_over(std::get<Spider>(d.nodes[s]), outer_legs(d, pe, s, {s, x, y}));
        Diagram r = compose_par(identity(w), rest);
        std::size_t n_in = rest.inputs.size();
        std::vector<Endpoint> attach{in_x};
        attach.insert(attach.end(), attach_s.begin(), attach_s.begin() + static_cast<std::ptrdiff_t>(n_in));
        attach.push_back(out_y);
        attach.insert(attach.end(), attach_s.begin() + static_cast<std::ptrdiff_t>(n_in), attach_s.end());
        return replace_subgraph(d, {x, y, s}, r, attach);
    }

   protected:
    Diagram sample_lhs(std::mt19937_64 &rng, int dim) const override {
        int k = uniform_int(rng, 1, 3);
        std::vector<Matrix> us;
        for (int c = 0; c < k; c++) us.push_back(random_unitary(dim, rng));
        auto controlled = [&](bool inverse) {
            auto nd = static_cast<std::size_t>(dim);
            Tensor plain = Tensor::zeros({static_cast<std::size_t>(k), nd, nd});
            for (int c = 0; c < k; c++) {
                Matrix u = inverse ? Matrix(us[c].adjoint()) : us[c];
                for (std::size_t i = 0; i < nd; i++) {
                    for (std::size_t o = 0; o < nd; o++) {
                        plain[(static_cast<std::size_t>(c) * nd + i) * nd + o] =
                            u(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i));
                    }
                }
            }
            Tensor payload = double_tensor(plain, {true, false, false});
            auto q = WireType::quantum(dim);
            return Box{inverse ? "U^dag" : "U", {WireType::classical(k), q}, {q}, payload, BoxFlavor::Doubled};
        };
        auto c = WireType::classical(k);
        auto q = WireType::quantum(dim);
        Diagram d;
        d.nodes = {controlled(false), controlled(true)};
        d.edges.push_back({Endpoint::port(0, 2), Endpoint::port(1, 1), q});
        d.edges.push_back({Endpoint::input(0), Endpoint::port(0, 1), q});
        d.edges.push_back({Endpoint::port(1, 2), Endpoint::output(0), q});
        d.inputs = {q};
        d.outputs = {q};
        if (coin(rng)) {
            d.edges.push_back({Endpoint::port(0, 0), Endpoint::port(1, 0), c});
        } else {
            d.nodes.push_back(Spider{k, {c}, {c, c}, std::nullopt, Heads::Single, 0});
            d.edges.push_back({Endpoint::input(1), Endpoint::port(2, 0), c});
            d.edges.push_back({Endpoint::port(2, 1), Endpoint::port(0, 0), c});
            d.edges.push_back({Endpoint::port(2, 2), Endpoint::port(1, 0), c});
            d.inputs.push_back(c);
        }
        d.validate();
        return d;
    }
};

class ScalarMergeRule : public NormalizingRule {
   public:
    std::string name() const override {
        return "scalar-merge";
    }
    std::string law() const override {
        return "numbers multiply";
    }
    std::string summary() const override {
        return "multiplies all scalar nodes into one and drops it when it equals 1";
    }
    std::vector<Match> find_matches(const Diagram &d) const override {
        Match m;
        Complex prod = 1.0;
        for (std::size_t n = 0; n < d.nodes.size(); n++) {
            if (const auto *s = std::get_if<Scalar>(&d.nodes[n])) {
                m.nodes.push_back(n);
                prod *= s->value;
            }
        }
        if (m.nodes.size() >= 2 || (m.nodes.size() == 1 && std::abs(prod - 1.0) <= 1e-12)) return {m};
        return {};
    }
    Diagram apply(const Diagram &d, const Match &m) const override {
        Complex prod = 1.0;
        for (auto n : m.nodes) prod *= std::get<Scalar>(d.nodes[n]).value;
        Diagram r = std::abs(prod - 1.0) <= 1e-12 ? empty_diagram() : scalar(prod);
        return replace_subgraph(d, m.nodes, r, {});
    }

   protected:
    Diagram sample_lhs(std::mt19937_64 &rng, int dim) const override {
        std::normal_distribution<double> g(0.0, 1.0);
        return compose_par({scalar(Complex(g(rng), g(rng))), classical_spider(dim, 1, 1 + uniform_int(rng, 0, 1)),
                            scalar(Complex(g(rng), g(rng)))});
    }
};

// ---------------------------------------------------------------------------
// Lemmas.

Diagram sample_spider(std::mt19937_64 &, int dim, std::size_t n, std::size_t m, bool dbl) {
    return dbl ? quantum_spider(dim, n, m) : classical_spider(dim, n, m);
}

template <class F>
class FunctionLemma : public Lemma {
   public:
    FunctionLemma(std::string name, std::string law, std::string summary, bool approx, F f)
        : name_(std::move(name)), law_(std::move(law)), summary_(std::move(summary)), approx_(approx), f_(f) {
    }
    std::string name() const override {
        return name_;
    }
    std::string law() const override {
        return law_;
    }
    std::string summary() const override {
        return summary_;
    }
    bool up_to_scalar() const override {
        return approx_;
    }
    RuleInstance sample(std::mt19937_64 &rng, int dim) const override {
        return f_(rng, dim);
    }

   private:
    std::string name_, law_, summary_;
    bool approx_;
    F f_;
};

template <class F>
RulePtr lemma(std::string name, std::string law, std::string summary, bool approx, F f) {
    return std::make_shared<FunctionLemma<F>>(std::move(name), std::move(law), std::move(summary), approx, f);
}

WireType spider_wire(bool dbl, int dim) {
    return dbl ? WireType::quantum(dim) : WireType::classical(dim);
}

RuleSet build_default_rules() {
    RuleSet rs;
    rs.add(std::make_shared<SpiderLoopRule>());
    rs.add(std::make_shared<FusionRule>(FusionKind::Spider));
    rs.add(std::make_shared<FusionRule>(FusionKind::Bastard));
    rs.add(std::make_shared<FusionRule>(FusionKind::Phase));
    rs.add(std::make_shared<WireSpiderRule>());
    rs.add(std::make_shared<CopyRule>());
    rs.add(std::make_shared<ValueContractRule>());
    rs.add(std::make_shared<SpiderScalarRule>());
    rs.add(std::make_shared<ControlledCancelRule>());
    rs.add(std::make_shared<ScalarMergeRule>());

    rs.add(lemma("frobenius", "Frobenius equations", "(mu x 1)(1 x delta) = delta mu = (1 x mu)(delta x 1)", false,
                 [](std::mt19937_64 &rng, int dim) {
                     bool dbl = coin(rng);
                     auto w = spider_wire(dbl, dim);
                     Diagram mu = sample_spider(rng, dim, 2, 1, dbl), delta = sample_spider(rng, dim, 1, 2, dbl);
                     Diagram lhs = coin(rng) ? compose_seq(compose_par(identity(w), delta), compose_par(mu, identity(w)))
                                             : compose_seq(compose_par(delta, identity(w)), compose_par(identity(w), mu));
                     return RuleInstance{lhs, compose_seq(mu, delta)};
                 }));
    rs.add(lemma("associativity", "associativity", "mu (mu x 1) = mu (1 x mu)", false, [](std::mt19937_64 &rng, int dim) {
        bool dbl = coin(rng);
        auto w = spider_wire(dbl, dim);
        Diagram mu = sample_spider(rng, dim, 2, 1, dbl);
        return RuleInstance{compose_seq(compose_par(mu, identity(w)), mu), compose_seq(compose_par(identity(w), mu), mu)};
    }));
    rs.add(lemma("coassociativity", "coassociativity", "(delta x 1) delta = (1 x delta) delta", false,
                 [](std::mt19937_64 &rng, int dim) {
                     bool dbl = coin(rng);
                     auto w = spider_wire(dbl, dim);
                     Diagram delta = sample_spider(rng, dim, 1, 2, dbl);
                     return RuleInstance{compose_seq(delta, compose_par(delta, identity(w))),
                                         compose_seq(delta, compose_par(identity(w), delta))};
                 }));
    rs.add(lemma("unit", "unit and counit laws", "mu (eta x 1) = 1 and (eps x 1) delta = 1", false,
                 [](std::mt19937_64 &rng, int dim) {
                     bool dbl = coin(rng);
                     auto w = spider_wire(dbl, dim);
                     if (coin(rng)) {
                         return RuleInstance{compose_seq(compose_par(sample_spider(rng, dim, 0, 1, dbl), identity(w)),
                                                         sample_spider(rng, dim, 2, 1, dbl)),
                                             identity(w)};
                     }
                     return RuleInstance{compose_seq(sample_spider(rng, dim, 1, 2, dbl),
                                                     compose_par(sample_spider(rng, dim, 1, 0, dbl), identity(w))),
                                         identity(w)};
                 }));
    rs.add(lemma("commutativity", "commutativity", "mu . swap = mu and swap . delta = delta", false,
                 [](std::mt19937_64 &rng, int dim) {
                     bool dbl = coin(rng);
                     auto w = spider_wire(dbl, dim);
                     if (coin(rng)) {
                         Diagram mu = sample_spider(rng, dim, 2, 1, dbl);
                         return RuleInstance{compose_seq(swap(w, w), mu), mu};
                     }
                     Diagram delta = sample_spider(rng, dim, 1, 2, dbl);
                     return RuleInstance{compose_seq(delta, swap(w, w)), delta};
                 }));
    rs.add(lemma("special", "special Frobenius algebra", "mu . delta = 1", false, [](std::mt19937_64 &rng, int dim) {
        bool dbl = coin(rng);
        return RuleInstance{compose_seq(sample_spider(rng, dim, 1, 2, dbl), sample_spider(rng, dim, 2, 1, dbl)),
                            identity(spider_wire(dbl, dim))};
    }));
    rs.add(lemma("copy-delete", "copying then deleting one copy does nothing", "(1 x delete) copy = 1", false,
                 [](std::mt19937_64 &rng, int dim) {
                     auto c = WireType::classical(dim);
                     Diagram lhs = coin(rng) ? compose_seq(copy_spider(dim), compose_par(identity(c), delete_spider(dim)))
                                             : compose_seq(copy_spider(dim), compose_par(delete_spider(dim), identity(c)));
                     return RuleInstance{lhs, identity(c)};
                 }));
    rs.add(lemma("copy-swap", "copies can be swapped", "swap . copy = copy", false, [](std::mt19937_64 &, int dim) {
        auto c = WireType::classical(dim);
        return RuleInstance{compose_seq(copy_spider(dim), swap(c, c)), copy_spider(dim)};
    }));
    rs.add(lemma("copy-value", "classical values are copied", "copy . |i> = |i> x |i>", false,
                 [](std::mt19937_64 &rng, int dim) {
                     int i = uniform_int(rng, 0, dim - 1);
                     return RuleInstance{compose_seq(classical_value(dim, i), copy_spider(dim)),
                                         compose_par(classical_value(dim, i), classical_value(dim, i))};
                 }));
    rs.add(lemma("encode-discard", "encoding then discarding is deleting", "discard . encode = delete", false,
                 [](std::mt19937_64 &, int dim) {
                     return RuleInstance{compose_seq(encode(dim), discard(WireType::quantum(dim))), delete_spider(dim)};
                 }));
    rs.add(lemma("measure-delete", "measuring then deleting is discarding", "delete . measure = discard", false,
                 [](std::mt19937_64 &, int dim) {
                     return RuleInstance{compose_seq(measure(dim), delete_spider(dim)), discard(WireType::quantum(dim))};
                 }));
    rs.add(lemma("measure-encode", "measuring undoes encoding", "measure . encode = 1", false,
                 [](std::mt19937_64 &, int dim) {
                     return RuleInstance{compose_seq(encode(dim), measure(dim)), identity(WireType::classical(dim))};
                 }));
    rs.add(lemma("yanking", "yanking", "(cap x 1)(1 x cup) = 1 = (1 x cap)(cup x 1)", false,
                 [](std::mt19937_64 &rng, int dim) {
                     auto w = random_wire(rng, dim);
                     Diagram lhs = coin(rng) ? compose_seq(compose_par(identity(w), cup(w)), compose_par(cap(w), identity(w)))
                                             : compose_seq(compose_par(cup(w), identity(w)), compose_par(identity(w), cap(w)));
                     return RuleInstance{lhs, identity(w)};
                 }));
    rs.add(lemma("anti-special", "anti-special separation (qubit anti-spider)",
                 "mu . delta ~ (mu . delta . eta)(eps . mu . delta); ignores the requested dimension", true,
                 [](std::mt19937_64 &, int) {
                     auto [lhs, rhs] = anti_special_sides(anti_spider_candidate());
                     return RuleInstance{lhs, rhs};
                 }));
    return rs;
}

}  // namespace

const RuleSet &default_rules() {
    static const RuleSet rules = build_default_rules();
    return rules;
}

}  // namespace cqd
