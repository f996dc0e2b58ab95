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
#include <map>

#include "cqd/diagram.hpp"

namespace cqd {

namespace {

struct Adjacency {
    std::vector<std::vector<Endpoint>> port_other;
    std::vector<Endpoint> input_other, output_other;
    std::vector<std::size_t> real_nodes;  // non-scalar nodes
    Complex scalar{1.0, 0.0};
};

Adjacency adjacency(const Diagram &d) {
    Adjacency a;
    a.port_other.resize(d.nodes.size());
    for (std::size_t n = 0; n < d.nodes.size(); n++) {
        a.port_other[n].resize(port_count(d.nodes[n]));
        if (const auto *s = std::get_if<Scalar>(&d.nodes[n])) {
            a.scalar *= s->value;
        } else {
            a.real_nodes.push_back(n);
        }
    }
    a.input_other.resize(d.inputs.size());
    a.output_other.resize(d.outputs.size());
    auto set = [&](const Endpoint &at, const Endpoint &other) {
        switch (at.kind) {
            case Endpoint::Kind::Input:
                a.input_other[at.index] = other;
                break;
            case Endpoint::Kind::Output:
                a.output_other[at.index] = other;
                break;
            default:
                a.port_other[at.node][at.index] = other;
        }
    };
    for (const auto &e : d.edges) {
        set(e.a, e.b);
        set(e.b, e.a);
    }
    return a;
}

bool phases_match(const std::optional<PhaseVector> &a, const std::optional<PhaseVector> &b, int dim, double tol) {
    PhaseVector pa = a ? *a : PhaseVector::unit(dim);
    PhaseVector pb = b ? *b : PhaseVector::unit(dim);
    return pa.approx_equal(pb, tol);
}

std::vector<WireType> sorted_legs(const Spider &s) {
    auto legs = port_types(s);
    std::sort(legs.begin(), legs.end(), [](const WireType &x, const WireType &y) {
        return std::pair(x.kind, x.base_dim) < std::pair(y.kind, y.base_dim);
    });
    return legs;
}

bool nodes_compatible(const Generator &a, const Generator &b, double tol) {
    if (a.index() != b.index()) return false;
    if (const auto *sa = std::get_if<Spider>(&a)) {
        const auto &sb = std::get<Spider>(b);
        return sa->dim == sb.dim && sa->family == sb.family && sa->single_headed() == sb.single_headed() &&
               sorted_legs(*sa) == sorted_legs(sb) && phases_match(sa->phase, sb.phase, sa->dim, tol);
    }
    if (const auto *ba = std::get_if<Box>(&a)) {
        const auto &bb = std::get<Box>(b);
        return ba->name == bb.name && ba->inputs == bb.inputs && ba->outputs == bb.outputs &&
               ba->flavor == bb.flavor && ba->payload.approx_equal(bb.payload, tol);
    }
    if (const auto *va = std::get_if<Value>(&a)) {
        const auto &vb = std::get<Value>(b);
        return va->wire == vb.wire && va->index == vb.index;
    }
    return true;
}

class Matcher {
   public:
    Matcher(const Diagram &a, const Diagram &b, double tol)
        : a_(&a), b_(&b), adj_a_(adjacency(a)), adj_b_(adjacency(b)), tol_(tol) {
        node_map_.assign(a.nodes.size(), SIZE_MAX);
        node_inv_.assign(b.nodes.size(), SIZE_MAX);
        port_map_.resize(a.nodes.size());
        port_inv_.resize(b.nodes.size());
        for (std::size_t n = 0; n < a.nodes.size(); n++) port_map_[n].assign(port_count(a.nodes[n]), SIZE_MAX);
        for (std::size_t n = 0; n < b.nodes.size(); n++) port_inv_[n].assign(port_count(b.nodes[n]), SIZE_MAX);
    }

    const Adjacency &adj_a() const {
        return adj_a_;
    }
    const Adjacency &adj_b() const {
        return adj_b_;
    }

    bool run() {
        std::vector<std::pair<Endpoint, Endpoint>> work;
        for (std::size_t k = 0; k < a_->inputs.size(); k++) {
            work.push_back({adj_a_.input_other[k], adj_b_.input_other[k]});
        }
        for (std::size_t k = 0; k < a_->outputs.size(); k++) {
            work.push_back({adj_a_.output_other[k], adj_b_.output_other[k]});
        }
        if (!propagate(work)) return false;
        return search();
    }

   private:
    bool is_spider(const Diagram &d, std::size_t n) const {
        return std::holds_alternative<Spider>(d.nodes[n]);
    }

    // Records that endpoint ea of a corresponds to endpoint eb of b and
    // follows forced consequences.
    bool propagate(std::vector<std::pair<Endpoint, Endpoint>> work) {
        while (!work.empty()) {
            auto [ea, eb] = work.back();
            work.pop_back();
            if (ea.is_boundary() || eb.is_boundary()) {
                if (!(ea == eb)) return false;
                continue;
            }
            std::size_t na = ea.node, nb = eb.node;
            if (node_map_[na] == SIZE_MAX) {
                if (node_inv_[nb] != SIZE_MAX) return false;
                if (!nodes_compatible(a_->nodes[na], b_->nodes[nb], tol_)) return false;
                node_map_[na] = nb;
                node_inv_[nb] = na;
                if (!is_spider(*a_, na)) {
                    for (std::size_t p = 0; p < port_map_[na].size(); p++) {
                        if (p != ea.index) work.push_back({Endpoint::port(na, p), Endpoint::port(nb, p)});
                    }
                }
            } else if (node_map_[na] != nb) {
                return false;
            }
            std::size_t pa = ea.index, pb = eb.index;
            if (!is_spider(*a_, na) && pa != pb) return false;
            if (port_map_[na][pa] != SIZE_MAX) {
                if (port_map_[na][pa] != pb) return false;
                continue;
            }
            if (port_inv_[nb][pb] != SIZE_MAX) return false;
            if (port_types(a_->nodes[na])[pa] != port_types(b_->nodes[nb])[pb]) return false;
            port_map_[na][pa] = pb;
            port_inv_[nb][pb] = pa;
            work.push_back({adj_a_.port_other[na][pa], adj_b_.port_other[nb][pb]});
        }
        return true;
    }

    bool search() {
        // A mapped spider with an unmapped port: branch on its partner port.
        for (std::size_t na = 0; na < a_->nodes.size(); na++) {
            if (node_map_[na] == SIZE_MAX) continue;
            for (std::size_t pa = 0; pa < port_map_[na].size(); pa++) {
                if (port_map_[na][pa] != SIZE_MAX) continue;
                std::size_t nb = node_map_[na];
                for (std::size_t pb = 0; pb < port_inv_[nb].size(); pb++) {
                    if (port_inv_[nb][pb] != SIZE_MAX) continue;
                    Matcher saved = *this;
                    if (propagate({{Endpoint::port(na, pa), Endpoint::port(nb, pb)}}) && search()) return true;
                    *this = saved;
                }
                return false;
            }
        }
        for (std::size_t na : adj_a_.real_nodes) {
            if (node_map_[na] != SIZE_MAX) continue;
            for (std::size_t nb : adj_b_.real_nodes) {
                if (node_inv_[nb] != SIZE_MAX) continue;
                if (port_count(a_->nodes[na]) == 0) {
                    if (!nodes_compatible(a_->nodes[na], b_->nodes[nb], tol_)) continue;
                    Matcher saved = *this;
                    node_map_[na] = nb;
                    node_inv_[nb] = na;
                    if (search()) return true;
                    *this = saved;
                    continue;
                }
                Matcher saved = *this;
                if (propagate({{Endpoint::port(na, 0), Endpoint::port(nb, 0)}}) && search()) return true;
                *this = saved;
            }
            return false;
        }
        return true;
    }

    const Diagram *a_;
    const Diagram *b_;
    Adjacency adj_a_, adj_b_;
    double tol_;
    std::vector<std::size_t> node_map_, node_inv_;
    std::vector<std::vector<std::size_t>> port_map_, port_inv_;
};

}  // namespace

bool isomorphic(const Diagram &a, const Diagram &b, ScalarMode mode, double tol) {
    if (a.inputs != b.inputs || a.outputs != b.outputs) return false;
    Matcher m(a, b, tol);
    if (m.adj_a().real_nodes.size() != m.adj_b().real_nodes.size()) return false;
    Complex sa = m.adj_a().scalar, sb = m.adj_b().scalar;
    if (mode == ScalarMode::Strict) {
        if (std::abs(sa - sb) > tol * std::max(1.0, std::abs(sa))) return false;
    } else if ((std::abs(sa) <= tol) != (std::abs(sb) <= tol)) {
        return false;
    }
    return m.run();
}

}  // namespace cqd
