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

#include "cqd/evaluate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "cqd/errors.hpp"

namespace cqd {

namespace {

using Label = std::size_t;

struct Factor {
    Tensor tensor;
    std::vector<Label> labels;
};

struct Network {
    std::vector<Factor> factors;
    std::map<Label, std::size_t> dims;
    std::vector<Label> open;  // boundary order
};

std::vector<std::size_t> label_shape(const std::vector<Label> &labels, const std::map<Label, std::size_t> &dims) {
    std::vector<std::size_t> shape;
    for (auto l : labels) shape.push_back(dims.at(l));
    return shape;
}

// Labels 0..E-1 are edges; a boundary-to-boundary edge k gets the extra
// label E+k for its second end, joined to the first by a delta factor.
Network build_network(const Diagram &d) {
    Network net;
    const std::size_t n_edges = d.edges.size();
    std::vector<std::vector<Label>> node_labels(d.nodes.size());
    for (std::size_t n = 0; n < d.nodes.size(); n++) {
        node_labels[n].assign(port_count(d.nodes[n]), SIZE_MAX);
    }
    std::vector<Label> in_label(d.inputs.size(), SIZE_MAX), out_label(d.outputs.size(), SIZE_MAX);
    std::vector<Factor> deltas;
    for (std::size_t k = 0; k < n_edges; k++) {
        const Edge &e = d.edges[k];
        net.dims[k] = e.type.index_size();
        Label second = k;
        if (e.a.is_boundary() && e.b.is_boundary()) {
            second = n_edges + k;
            net.dims[second] = e.type.index_size();
            std::size_t n = e.type.index_size();
            Tensor delta = Tensor::zeros({n, n});
            for (std::size_t i = 0; i < n; i++) delta[i * n + i] = 1.0;
            deltas.push_back({delta, {k, second}});
        }
        auto assign = [&](const Endpoint &ep, Label l) {
            switch (ep.kind) {
                case Endpoint::Kind::Input:
                    in_label.at(ep.index) = l;
                    break;
                case Endpoint::Kind::Output:
                    out_label.at(ep.index) = l;
                    break;
                default:
                    node_labels.at(ep.node).at(ep.index) = l;
            }
        };
        assign(e.a, k);
        assign(e.b, second);
    }
    for (std::size_t n = 0; n < d.nodes.size(); n++) {
        net.factors.push_back({generator_tensor(d.nodes[n]), node_labels[n]});
    }
    for (auto &f : deltas) net.factors.push_back(std::move(f));
    net.open = in_label;
    net.open.insert(net.open.end(), out_label.begin(), out_label.end());
    for (auto l : net.open) {
        if (l == SIZE_MAX) throw InvalidDiagram("boundary position without an edge");
    }
    return net;
}

// Sums over labels that occur twice within one factor.
Factor trace_repeated(const Factor &f, const std::map<Label, std::size_t> &dims) {
    std::vector<Label> kept;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < f.labels.size(); i++) {
        auto first = std::find(f.labels.begin(), f.labels.end(), f.labels[i]) - f.labels.begin();
        auto count = std::count(f.labels.begin(), f.labels.end(), f.labels[i]);
        if (count == 1) {
            kept.push_back(f.labels[i]);
        } else if (static_cast<std::size_t>(first) != i) {
            pairs.push_back({static_cast<std::size_t>(first), i});
        }
    }
    if (pairs.empty()) return f;
    Tensor out = Tensor::zeros(label_shape(kept, dims));
    const auto &src = f.tensor;
    for (std::size_t flat = 0; flat < src.size(); flat++) {
        auto idx = src.multi_index(flat);
        bool diag = std::all_of(pairs.begin(), pairs.end(), [&](auto p) { return idx[p.first] == idx[p.second]; });
        if (!diag) continue;
        std::vector<std::size_t> kidx;
        for (std::size_t i = 0; i < idx.size(); i++) {
            if (std::count(f.labels.begin(), f.labels.end(), f.labels[i]) == 1) kidx.push_back(idx[i]);
        }
        out[out.flat_index(kidx)] += src[flat];
    }
    return {out, kept};
}

std::size_t check_size(std::size_t n) {
    if (n > kMaxTensorEntries) {
        throw TensorTooLarge("intermediate tensor with " + std::to_string(n) + " entries exceeds the cap of " +
                             std::to_string(kMaxTensorEntries));
    }
    return n;
}

struct PairInfo {
    std::vector<Label> free_a, shared, free_b;
};

PairInfo split_labels(const std::vector<Label> &a, const std::vector<Label> &b) {
    PairInfo p;
    for (auto l : a) {
        if (std::find(b.begin(), b.end(), l) != b.end()) {
            p.shared.push_back(l);
        } else {
            p.free_a.push_back(l);
        }
    }
    for (auto l : b) {
        if (std::find(a.begin(), a.end(), l) == a.end()) p.free_b.push_back(l);
    }
    return p;
}

std::size_t product_of(const std::vector<Label> &ls, const std::map<Label, std::size_t> &dims) {
    std::size_t n = 1;
    for (auto l : ls) n *= dims.at(l);
    return n;
}

std::vector<std::size_t> positions(const std::vector<Label> &order, const std::vector<Label> &labels) {
    std::vector<std::size_t> perm;
    for (auto l : order) {
        perm.push_back(static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin()));
    }
    return perm;
}

Factor contract_pair(const Factor &a, const Factor &b, const std::map<Label, std::size_t> &dims) {
    PairInfo p = split_labels(a.labels, b.labels);
    std::vector<Label> a_order = p.free_a;
    a_order.insert(a_order.end(), p.shared.begin(), p.shared.end());
    std::vector<Label> b_order = p.shared;
    b_order.insert(b_order.end(), p.free_b.begin(), p.free_b.end());
    Tensor ta = a.tensor.permuted(positions(a_order, a.labels));
    Tensor tb = b.tensor.permuted(positions(b_order, b.labels));
    auto m = static_cast<Eigen::Index>(product_of(p.free_a, dims));
    auto k = static_cast<Eigen::Index>(product_of(p.shared, dims));
    auto n = static_cast<Eigen::Index>(product_of(p.free_b, dims));
    check_size(static_cast<std::size_t>(m * n));
    using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMat> ma(ta.data().data(), m, k);
    Eigen::Map<const RowMat> mb(tb.data().data(), k, n);
    std::vector<Label> labels = p.free_a;
    labels.insert(labels.end(), p.free_b.begin(), p.free_b.end());
    Tensor out = Tensor::zeros(label_shape(labels, dims));
    Eigen::Map<RowMat> mo(out.data().data(), m, n);
    mo.noalias() = ma * mb;
    return {std::move(out), std::move(labels)};
}

bool shares_label(const std::vector<Label> &a, const std::vector<Label> &b) {
    return std::any_of(a.begin(), a.end(), [&](Label l) { return std::find(b.begin(), b.end(), l) != b.end(); });
}

std::vector<std::vector<Label>> traced_labels(const Network &net) {
    std::vector<std::vector<Label>> out;
    for (const auto &f : net.factors) {
        std::vector<Label> kept;
        for (auto l : f.labels) {
            if (std::count(f.labels.begin(), f.labels.end(), l) == 1) kept.push_back(l);
        }
        out.push_back(kept);
    }
    return out;
}

template <class Choose>
ContractionPlan plan_with(const Network &net, Choose choose) {
    auto labels = traced_labels(net);
    ContractionPlan plan;
    while (labels.size() > 1) {
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t i = 0; i < labels.size(); i++) {
            for (std::size_t j = i + 1; j < labels.size(); j++) {
                if (shares_label(labels[i], labels[j])) candidates.push_back({i, j});
            }
        }
        std::pair<std::size_t, std::size_t> pick{0, 1};
        if (!candidates.empty()) pick = choose(candidates, labels);
        PairInfo p = split_labels(labels[pick.first], labels[pick.second]);
        std::vector<Label> merged = p.free_a;
        merged.insert(merged.end(), p.free_b.begin(), p.free_b.end());
        std::size_t size = product_of(merged, net.dims);
        plan.steps.push_back({pick.first, pick.second, size});
        plan.cost += static_cast<double>(size);
        labels[pick.first] = merged;
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pick.second));
    }
    return plan;
}

}  // namespace

ContractionPlan contract_order(const Diagram &d) {
    Network net = build_network(d);
    return plan_with(net, [&](const auto &candidates, const auto &labels) {
        auto best = candidates.front();
        std::size_t best_size = SIZE_MAX;
        for (auto c : candidates) {
            PairInfo p = split_labels(labels[c.first], labels[c.second]);
            std::size_t size = product_of(p.free_a, net.dims) * product_of(p.free_b, net.dims);
            if (size < best_size) {
                best_size = size;
                best = c;
            }
        }
        return best;
    });
}

ContractionPlan random_plan(const Diagram &d, std::mt19937_64 &rng) {
    Network net = build_network(d);
    return plan_with(net, [&](const auto &candidates, const auto &) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        return candidates[pick(rng)];
    });
}

double naive_cost(const Diagram &d) {
    Network net = build_network(d);
    double cost = 1.0;
    for (const auto &[label, dim] : net.dims) cost *= static_cast<double>(dim);
    return cost;
}

Tensor evaluate(const Diagram &d) {
    return evaluate(d, contract_order(d));
}

Tensor evaluate(const Diagram &d, const ContractionPlan &plan) {
    Network net = build_network(d);
    std::vector<Factor> factors;
    for (const auto &f : net.factors) factors.push_back(trace_repeated(f, net.dims));
    if (plan.steps.size() + 1 != std::max<std::size_t>(factors.size(), 1)) {
        throw InvalidDiagram("contraction plan does not fit the diagram");
    }
    for (const auto &step : plan.steps) {
        if (step.left >= step.right || step.right >= factors.size()) {
            throw InvalidDiagram("contraction plan refers to a missing factor");
        }
        factors[step.left] = contract_pair(factors[step.left], factors[step.right], net.dims);
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(step.right));
    }
    if (factors.empty()) return Tensor::scalar(1.0);
    const Factor &f = factors.front();
    return f.tensor.permuted(positions(net.open, f.labels));
}

NumericComparison compare_tensors(const Tensor &t1, const Tensor &t2, NumericTolerance tol) {
    if (t1.shape() != t2.shape()) {
        throw BoundaryMismatch("tensors have different shapes");
    }
    NumericComparison r;
    if (tol.mode == ScalarMode::Strict) {
        r.deviation = t1.max_abs_diff(t2);
        r.equal = r.deviation <= tol.absolute;
        return r;
    }
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < t1.size(); i++) {
        if (std::abs(t1[i]) > best) {
            best = std::abs(t1[i]);
            arg = i;
        }
    }
    double scale = std::max(1.0, t2.max_abs());
    if (best <= tol.absolute) {
        r.lambda = 0.0;
        r.deviation = t2.max_abs();
        r.equal = r.deviation <= tol.absolute;
        return r;
    }
    r.lambda = t2[arg] / t1[arg];
    if (std::abs(r.lambda) <= tol.absolute) {
        r.deviation = t2.max_abs();
        r.equal = false;
        return r;
    }
    r.deviation = t2.max_abs_diff(t1.scaled(r.lambda));
    r.equal = r.deviation <= tol.absolute * scale;
    return r;
}

NumericComparison compare_numeric(const Diagram &d1, const Diagram &d2, NumericTolerance tol) {
    if (d1.inputs != d2.inputs || d1.outputs != d2.outputs) {
        throw BoundaryMismatch("diagrams have different boundary signatures");
    }
    return compare_tensors(evaluate(d1), evaluate(d2), tol);
}

bool numeric_equal(const Diagram &d1, const Diagram &d2, NumericTolerance tol) {
    return compare_numeric(d1, d2, tol).equal;
}

}  // namespace cqd
