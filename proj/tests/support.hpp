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

// Random generators and small linear-algebra oracles shared by the unit
// tests and the acceptance runner.

#ifndef CQD_TESTS_SUPPORT_HPP
#define CQD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cqd/cq.hpp"
#include "cqd/diagram.hpp"
#include "cqd/dsl.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"
#include "cqd/linalg.hpp"

namespace cqd::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng &rng, double p = 0.5) {
    return std::bernoulli_distribution(p)(rng);
}

inline PhaseVector random_phase(Rng &rng, int dim) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    std::vector<double> angles;
    for (int k = 1; k < dim; k++) angles.push_back(u(rng));
    return PhaseVector::from_angles(angles);
}

/// Spider flavours used by the generators: all legs classical, all legs
/// quantum and double-headed, or single-headed with at least one quantum leg.
enum class SpiderFlavor { Classical, Quantum, Bastard };

struct SpiderDiagramOptions {
    int max_nodes = 6;
    int max_legs = 4;
    int max_boundary = 3;
    double phase_probability = 0.3;
    bool allow_bastards = true;
};

/// A random diagram of spiders of one family on base dimension `dim`.
inline Diagram random_spider_diagram(Rng &rng, int dim, const SpiderDiagramOptions &opt = {}) {
    struct Half {
        std::size_t node;
        WireType type;
    };
    const auto c = WireType::classical(dim), q = WireType::quantum(dim);
    Diagram d;
    std::vector<std::vector<WireType>> legs;
    int n = uniform_int(rng, 1, opt.max_nodes);
    for (int i = 0; i < n; i++) {
        int pick = uniform_int(rng, 0, opt.allow_bastards ? 2 : 1);
        auto flavor = static_cast<SpiderFlavor>(pick);
        int k = uniform_int(rng, 1, opt.max_legs);
        std::vector<WireType> ls;
        for (int j = 0; j < k; j++) {
            if (flavor == SpiderFlavor::Classical) {
                ls.push_back(c);
            } else if (flavor == SpiderFlavor::Quantum) {
                ls.push_back(q);
            } else {
                ls.push_back(j == 0 || coin(rng) ? q : c);
            }
        }
        std::shuffle(ls.begin(), ls.end(), rng);
        legs.push_back(ls);
        Spider s;
        s.dim = dim;
        int n_in = uniform_int(rng, 0, k);
        s.inputs.assign(ls.begin(), ls.begin() + n_in);
        s.outputs.assign(ls.begin() + n_in, ls.end());
        s.heads = flavor == SpiderFlavor::Quantum ? Heads::Double : Heads::Single;
        if (coin(rng, opt.phase_probability)) s.phase = random_phase(rng, dim);
        d.nodes.push_back(s);
    }
    // Half-edges: (node, port).
    std::vector<std::pair<std::size_t, std::size_t>> halves;
    for (std::size_t i = 0; i < legs.size(); i++) {
        for (std::size_t p = 0; p < legs[i].size(); p++) halves.emplace_back(i, p);
    }
    std::shuffle(halves.begin(), halves.end(), rng);
    auto type_of = [&](const std::pair<std::size_t, std::size_t> &h) {
        return port_types(d.nodes[h.first])[h.second];
    };
    int boundary_budget = uniform_int(rng, 0, opt.max_boundary);
    std::vector<std::pair<std::size_t, std::size_t>> open;
    while (!halves.empty()) {
        auto h = halves.back();
        halves.pop_back();
        if (boundary_budget > 0 && coin(rng, 0.3)) {
            open.push_back(h);
            boundary_budget--;
            continue;
        }
        auto it = std::find_if(halves.begin(), halves.end(), [&](const auto &o) { return type_of(o) == type_of(h); });
        if (it == halves.end()) {
            open.push_back(h);
            continue;
        }
        auto o = *it;
        halves.erase(it);
        d.edges.push_back({Endpoint::port(h.first, h.second), Endpoint::port(o.first, o.second), type_of(h)});
    }
    for (const auto &h : open) {
        WireType t = type_of(h);
        if (coin(rng)) {
            d.edges.push_back({Endpoint::input(d.inputs.size()), Endpoint::port(h.first, h.second), t});
            d.inputs.push_back(t);
        } else {
            d.edges.push_back({Endpoint::port(h.first, h.second), Endpoint::output(d.outputs.size()), t});
            d.outputs.push_back(t);
        }
    }
    d.validate();
    return d;
}

/// Splits one spider into two connected spiders; the semantics is unchanged.
inline Diagram split_random_spider(const Diagram &d, Rng &rng) {
    std::vector<std::size_t> spiders;
    for (std::size_t i = 0; i < d.nodes.size(); i++) {
        if (std::holds_alternative<Spider>(d.nodes[i])) spiders.push_back(i);
    }
    if (spiders.empty()) return d;
    std::size_t s = spiders[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(spiders.size()) - 1))];
    Diagram out = d;
    const Spider old = std::get<Spider>(d.nodes[s]);
    auto types = port_types(old);
    std::size_t n_in = old.inputs.size();
    bool double_headed = !old.single_headed();
    WireType link = double_headed ? WireType::quantum(old.dim) : WireType::classical(old.dim);
    // Ports of the old spider that move to the new one.
    std::vector<bool> moves(types.size());
    for (std::size_t p = 0; p < types.size(); p++) moves[p] = coin(rng);
    Spider a = old, b = old;
    a.inputs.clear();
    a.outputs.clear();
    b.inputs.clear();
    b.outputs.clear();
    b.phase.reset();
    std::vector<std::pair<std::size_t, std::size_t>> remap(types.size());  // old port -> (node, port)
    std::size_t t = d.nodes.size();
    // Inputs first, then outputs, keeping the port numbering consistent.
    for (std::size_t p = 0; p < types.size(); p++) {
        Spider &target = moves[p] ? b : a;
        if (p < n_in) target.inputs.push_back(types[p]);
    }
    a.inputs.push_back(link);  // a's link port is its last input
    for (std::size_t p = 0; p < types.size(); p++) {
        Spider &target = moves[p] ? b : a;
        if (p >= n_in) target.outputs.push_back(types[p]);
    }
    b.outputs.push_back(link);  // b's link port is its last output
    std::size_t ai = 0, bi = 0, ao = 0, bo = 0;
    for (std::size_t p = 0; p < types.size(); p++) {
        if (p < n_in) {
            remap[p] = moves[p] ? std::pair(t, bi++) : std::pair(s, ai++);
        }
    }
    std::size_t a_out_base = a.inputs.size(), b_out_base = b.inputs.size();
    for (std::size_t p = n_in; p < types.size(); p++) {
        remap[p] = moves[p] ? std::pair(t, b_out_base + bo++) : std::pair(s, a_out_base + ao++);
    }
    out.nodes[s] = a;
    out.nodes.push_back(b);
    for (auto &e : out.edges) {
        for (Endpoint *ep : {&e.a, &e.b}) {
            if (ep->is_port() && ep->node == s) {
                auto [node, port] = remap[ep->index];
                *ep = Endpoint::port(node, port);
            }
        }
    }
    out.edges.push_back({Endpoint::port(t, b.outputs.size() + b.inputs.size() - 1), Endpoint::port(s, a.inputs.size() - 1),
                         link});
    out.validate();
    return out;
}

/// Inserts an unphased two-legged spider on a random edge.
inline Diagram insert_identity_spider(const Diagram &d, Rng &rng) {
    if (d.edges.empty()) return d;
    Diagram out = d;
    auto k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(d.edges.size()) - 1));
    Edge e = out.edges[k];
    Spider s;
    s.dim = e.type.base_dim;
    s.inputs = {e.type};
    s.outputs = {e.type};
    s.heads = e.type.is_quantum() ? Heads::Double : Heads::Single;
    std::size_t n = out.nodes.size();
    out.nodes.push_back(s);
    out.edges[k] = {e.a, Endpoint::port(n, 0), e.type};
    out.edges.push_back({Endpoint::port(n, 1), e.b, e.type});
    out.validate();
    return out;
}

/// Relabels the nodes by a random permutation.
inline Diagram shuffle_nodes(const Diagram &d, Rng &rng) {
    std::vector<std::size_t> perm(d.nodes.size());
    for (std::size_t i = 0; i < perm.size(); i++) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Diagram out = d;
    for (std::size_t i = 0; i < perm.size(); i++) out.nodes[perm[i]] = d.nodes[i];
    for (auto &e : out.edges) {
        for (Endpoint *ep : {&e.a, &e.b}) {
            if (ep->is_port()) ep->node = perm[ep->node];
        }
        if (coin(rng)) std::swap(e.a, e.b);
    }
    std::shuffle(out.edges.begin(), out.edges.end(), rng);
    return out;
}

/// Swaps the far ends of two edges of the same type.
inline Diagram rewire(const Diagram &d, Rng &rng) {
    Diagram out = d;
    for (int attempt = 0; attempt < 20 && out.edges.size() >= 2; attempt++) {
        auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(out.edges.size()) - 1));
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(out.edges.size()) - 1));
        if (i == j || out.edges[i].type != out.edges[j].type) continue;
        std::swap(out.edges[i].b, out.edges[j].b);
        return out;
    }
    return out;
}

inline Matrix random_density(Rng &rng, int dim) {
    Matrix a = random_complex_matrix(dim, dim, rng);
    Matrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline std::vector<Complex> row_major(const Matrix &m) {
    std::vector<Complex> out;
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) out.push_back(m(r, c));
    }
    return out;
}

inline Vector random_vector(Rng &rng, int n) {
    Matrix m = random_complex_matrix(n, 1, rng);
    return m.col(0) / m.norm();
}

/// n random effects summing to the identity: E_c = S^-1/2 A_c S^-1/2.
inline std::vector<Matrix> random_povm(Rng &rng, int dim, int n) {
    std::vector<Matrix> a;
    Matrix s = Matrix::Zero(dim, dim);
    for (int c = 0; c < n; c++) {
        Matrix g = random_complex_matrix(dim, dim, rng);
        a.push_back(g * g.adjoint());
        s += a.back();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(s);
    Matrix inv_sqrt = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                      es.eigenvectors().adjoint();
    for (auto &e : a) e = inv_sqrt * e * inv_sqrt;
    return a;
}

/// The qubit trine: E_k = (2/3) |psi_k><psi_k| with psi_k at 120 degrees.
inline std::vector<Matrix> trine_povm() {
    std::vector<Matrix> out;
    for (int k = 0; k < 3; k++) {
        double t = 2.0 * std::numbers::pi * k / 3.0;
        Vector v(2);
        v << std::cos(t / 2.0), std::sin(t / 2.0);
        out.push_back((2.0 / 3.0) * v * v.adjoint());
    }
    return out;
}

inline Matrix random_invertible(Rng &rng, int dim) {
    while (true) {
        Matrix m = random_complex_matrix(dim, dim, rng);
        Eigen::JacobiSVD<Matrix> svd(m);
        auto sv = svd.singularValues();
        if (sv(sv.size() - 1) / sv(0) > 0.05) return m;
    }
}

inline std::vector<Complex> apply_locals(const std::vector<Complex> &psi, const std::vector<Matrix> &locals) {
    Vector v = Eigen::Map<const Vector>(psi.data(), static_cast<Eigen::Index>(psi.size()));
    Matrix op = Matrix::Ones(1, 1);
    for (const auto &m : locals) {
        Matrix next(op.rows() * m.rows(), op.cols() * m.cols());
        for (Eigen::Index i = 0; i < op.rows(); i++) {
            for (Eigen::Index j = 0; j < op.cols(); j++) next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = op(i, j) * m;
        }
        op = next;
    }
    Vector w = op * v;
    w /= w.norm();
    return {w.data(), w.data() + w.size()};
}

inline std::vector<Complex> ket3(std::initializer_list<std::pair<int, Complex>> terms) {
    std::vector<Complex> psi(8, 0.0);
    double n = 0.0;
    for (const auto &[i, a] : terms) psi[static_cast<std::size_t>(i)] += a;
    for (auto a : psi) n += std::norm(a);
    for (auto &a : psi) a /= std::sqrt(n);
    return psi;
}

/// A random well-typed document mixing declarations, expressions and graph
/// literals.
inline DiagramDoc random_document(Rng &rng) {
    DiagramDoc doc;
    auto add_decl = [&](Declaration d) { doc.declarations.push_back(std::move(d)); };
    const int dim = uniform_int(rng, 2, 3);
    {
        Declaration w;
        w.kind = Declaration::Kind::Wire;
        w.name = "w";
        w.wire = coin(rng) ? WireType::quantum(dim) : WireType::classical(dim);
        add_decl(w);
    }
    auto wtype = doc.declarations.front().wire;
    auto mk = [](ExprKind k) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        return e;
    };
    auto type_name = [](const std::string &n) { return TypeName{n, {}}; };
    // Each generated expression has type (w^k -> w^m); `sig` tracks (k, m).
    std::vector<std::pair<std::string, std::pair<int, int>>> known;
    int count = uniform_int(rng, 1, 5);
    for (int i = 0; i < count; i++) {
        std::string name = "d" + std::to_string(i);
        ExprPtr e;
        std::pair<int, int> sig;
        int choice = uniform_int(rng, 0, 6);
        if (choice == 0 && !known.empty()) {
            auto &[ref, s] = known[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(known.size()) - 1))];
            auto r = mk(ExprKind::Ref);
            r->name = ref;
            auto dg = mk(ExprKind::Dagger);
            dg->children = {r};
            e = dg;
            sig = {s.second, s.first};
        } else if (choice <= 2) {
            auto sp = mk(ExprKind::Spider);
            int a = uniform_int(rng, 0, 3), b = uniform_int(rng, 0, 3);
            sp->ints = {a, b};
            sp->inputs = {type_name("w")};
            if (coin(rng)) {
                std::vector<double> angles;
                std::uniform_real_distribution<double> u(-3.0, 3.0);
                for (int k = 1; k < dim; k++) angles.push_back(u(rng));
                sp->phase = angles;
            }
            sp->flag = wtype.is_quantum() && coin(rng);
            sp->family = coin(rng, 0.2) ? 1 : 0;
            e = sp;
            sig = {a, b};
        } else if (choice == 3) {
            // (spider 1 -> 2 @ w) ; (id w | spider 1 -> 1 @ w)
            auto s1 = mk(ExprKind::Spider);
            s1->ints = {1, 2};
            s1->inputs = {type_name("w")};
            auto id = mk(ExprKind::Id);
            id->inputs = {type_name(wtype.str())};
            auto s2 = mk(ExprKind::Spider);
            s2->ints = {1, 1};
            s2->inputs = {type_name("w")};
            auto par = mk(ExprKind::Par);
            par->children = {id, s2};
            auto seq = mk(ExprKind::Seq);
            seq->children = {s1, par};
            e = seq;
            sig = {1, 2};
        } else if (choice == 4) {
            auto cup = mk(ExprKind::Cup);
            cup->inputs = {type_name("w")};
            auto sc = mk(ExprKind::Scalar);
            std::normal_distribution<double> g;
            sc->number = {g(rng), g(rng)};
            auto par = mk(ExprKind::Par);
            par->children = {cup, sc};
            e = par;
            sig = {0, 2};
        } else if (choice == 5) {
            auto sw = mk(ExprKind::Swap);
            sw->inputs = {type_name("w"), type_name("w")};
            auto tr = mk(ExprKind::Transpose);
            tr->children = {sw};
            e = tr;
            sig = {2, 2};
        } else {
            Diagram g = random_spider_diagram(rng, dim, {4, 3, 3, 0.3, true});
            DiagramDoc sub = document_from_diagram(name, g);
            for (auto &decl : sub.declarations) add_decl(decl);
            continue;  // its signature mixes wire types; never referenced
        }
        Declaration decl;
        decl.kind = Declaration::Kind::Diagram;
        decl.name = name;
        decl.expr = e;
        add_decl(decl);
        known.emplace_back(name, sig);
    }
    return doc;
}

}  // namespace cqd::testing

#endif
