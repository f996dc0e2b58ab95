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

#include "cqd/protocols.hpp"

#include <cmath>

#include "cqd/cq.hpp"
#include "cqd/entanglement.hpp"
#include "cqd/errors.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"

namespace cqd {

double ControlledUnitary::unitarity_defect() const {
    double worst = 0.0;
    for (const auto &u : branches) {
        worst = std::max(worst, (u.adjoint() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff());
    }
    return worst;
}

ControlledUnitary shift_clock_corrections(int dim) {
    Matrix x = Matrix::Zero(dim, dim), z = Matrix::Zero(dim, dim);
    for (int j = 0; j < dim; j++) {
        x((j + 1) % dim, j) = 1.0;
        z(j, j) = std::polar(1.0, 2.0 * M_PI * j / dim);
    }
    ControlledUnitary cu{dim, {}};
    Matrix xa = Matrix::Identity(dim, dim);
    for (int a = 0; a < dim; a++) {
        Matrix zb = Matrix::Identity(dim, dim);
        for (int b = 0; b < dim; b++) {
            cu.branches.push_back(xa * zb);
            zb = zb * z;
        }
        xa = xa * x;
    }
    return cu;
}

ControlledUnitary constant_corrections(int dim, const Matrix &u) {
    return {dim, std::vector<Matrix>(static_cast<std::size_t>(dim * dim), u)};
}

Diagram controlled_box(const ControlledUnitary &cu, bool dagger) {
    auto k = static_cast<std::size_t>(cu.control_dim());
    auto d = static_cast<std::size_t>(cu.dim);
    Tensor plain = Tensor::zeros({k, d, d});
    for (std::size_t c = 0; c < k; c++) {
        Matrix u = dagger ? Matrix(cu.branches[c].adjoint()) : cu.branches[c];
        for (std::size_t i = 0; i < d; i++) {
            for (std::size_t o = 0; o < d; o++) {
                plain[(c * d + i) * d + o] = u(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i));
            }
        }
    }
    auto q = WireType::quantum(cu.dim);
    return box(dagger ? "U^dag" : "U", {WireType::classical(cu.control_dim()), q}, {q},
               double_tensor(plain, {true, false, false}), BoxFlavor::Doubled);
}

Diagram normalized_bell_state(int dim) {
    auto q = WireType::quantum(dim);
    Diagram d;
    d.outputs = {q, q};
    d.nodes.push_back(Scalar{1.0 / dim});
    d.edges.push_back({Endpoint::output(0), Endpoint::output(1), q});
    return d;
}

Diagram bell_measurement(const ControlledUnitary &cu) {
    auto q = WireType::quantum(cu.dim);
    auto c = WireType::classical(cu.control_dim());
    Diagram d;
    d.inputs = {q, q};
    d.outputs = {c};
    d.nodes.push_back(controlled_box(cu).nodes.at(0));
    d.nodes.push_back(Scalar{1.0 / cu.dim});
    d.edges.push_back({Endpoint::input(0), Endpoint::port(0, 1), q});
    d.edges.push_back({Endpoint::port(0, 2), Endpoint::input(1), q});
    d.edges.push_back({Endpoint::port(0, 0), Endpoint::output(0), c});
    d.validate();
    return d;
}

Matrix bell_effects_matrix(const ControlledUnitary &cu) {
    int d = cu.dim, k = cu.control_dim();
    Matrix v(k, d * d);
    for (int c = 0; c < k; c++) {
        for (int x = 0; x < d; x++) {
            for (int y = 0; y < d; y++) v(c, x * d + y) = cu.branches[static_cast<std::size_t>(c)](y, x) / std::sqrt(d);
        }
    }
    return v;
}

bool ProtocolReport::pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim &c) { return c.pass; });
}

double ProtocolReport::max_deviation() const {
    double worst = 0.0;
    for (const auto &c : claims) worst = std::max(worst, c.deviation);
    return worst;
}

namespace {

void check_dims(const ControlledUnitary &cu) {
    if (cu.control_dim() != cu.dim * cu.dim) {
        throw DimMismatch("control dimension " + std::to_string(cu.control_dim()) + " differs from D^2 = " +
                          std::to_string(cu.dim * cu.dim));
    }
}

Claim numeric_claim(const std::string &name, const Diagram &lhs, const Diagram &rhs, double tol,
                    ScalarMode mode = ScalarMode::Strict) {
    NumericComparison c = compare_numeric(lhs, rhs, {tol, mode});
    return {name, c.equal, c.deviation};
}

Claim flag_claim(const std::string &name, bool ok) {
    return {name, ok, 0.0};
}

// Discard of one wire next to (1/D) times the maximally mixed state.
Diagram forget_and_mix(int dim) {
    return compose_par({discard(WireType::quantum(dim)), maximally_mixed(dim), scalar(1.0 / dim)});
}

}  // namespace

Diagram build_teleportation(const ControlledUnitary &corrections, const std::optional<ControlledUnitary> &measurement) {
    const ControlledUnitary &meas = measurement ? *measurement : corrections;
    check_dims(corrections);
    check_dims(meas);
    if (meas.dim != corrections.dim) throw DimMismatch("measurement and corrections act on different systems");
    auto q = WireType::quantum(corrections.dim);
    return compose_seq({compose_par(identity(q), normalized_bell_state(corrections.dim)),
                        compose_par(bell_measurement(meas), identity(q)), controlled_box(corrections, true)});
}

ProtocolReport verify_teleportation(const ControlledUnitary &corrections,
                                    const std::optional<ControlledUnitary> &measurement, double tol) {
    const ControlledUnitary &meas = measurement ? *measurement : corrections;
    int d = corrections.dim, k = corrections.control_dim();
    auto q = WireType::quantum(d);
    Diagram composite = build_teleportation(corrections, measurement);
    ProtocolReport rep{"teleport", d, {}, std::nullopt};
    rep.claims.push_back({"corrections-unitary", corrections.unitarity_defect() <= tol, corrections.unitarity_defect()});
    Claim identity_claim = numeric_claim("composite-identity", composite, identity(q), tol);
    rep.claims.push_back(identity_claim);

    Matrix v = bell_effects_matrix(meas);
    double defect = (v * v.adjoint() - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
    rep.claims.push_back({"bell-effects-unitary", defect <= tol, defect});
    rep.claims.push_back(numeric_claim("measurement-is-measure-after-V", bell_measurement(meas),
                                       compose_seq(doubled_box("V", v, {d, d}, {k}), measure(k)), tol));

    Diagram unread = compose_seq(compose_par(identity(q), normalized_bell_state(d)),
                                 compose_par(compose_seq(bell_measurement(meas), delete_spider(k)), identity(q)));
    rep.claims.push_back(numeric_claim("no-communication-maximally-mixed", unread, forget_and_mix(d), tol));

    Diagram uniform = compose_seq(compose_par({uniform_state(k), scalar(1.0 / k), identity(q)}),
                                  controlled_box(corrections));
    rep.claims.push_back(numeric_claim("uniform-control-maximally-mixed", uniform, forget_and_mix(d), tol));
    rep.claims.push_back(flag_claim("causal", is_causal(composite, tol)));

    NormalizeResult nf = normalize(composite);
    bool closes = isomorphic(nf.diagram, identity(q), ScalarMode::Strict, tol);
    bool replays = structural_hash(replay(composite, nf.trace)) == structural_hash(nf.diagram);
    rep.claims.push_back(flag_claim("trace-replays", replays));
    rep.claims.push_back(flag_claim("rewriting-agrees-with-numeric", closes == identity_claim.pass));
    rep.trace = nf.trace;
    return rep;
}

Diagram build_dense_coding(const ControlledUnitary &cu, bool shared_bell) {
    check_dims(cu);
    int d = cu.dim, k = cu.control_dim();
    auto q = WireType::quantum(d);
    Diagram source = shared_bell ? normalized_bell_state(d)
                                 : compose_par({maximally_mixed(d), maximally_mixed(d), scalar(1.0 / (d * d))});
    return compose_seq({compose_par(identity(WireType::classical(k)), source),
                        compose_par(controlled_box(cu, true), identity(q)), bell_measurement(cu)});
}

ProtocolReport verify_dense_coding(const ControlledUnitary &cu, double tol) {
    int d = cu.dim, k = cu.control_dim();
    auto c = WireType::classical(k);
    Diagram composite = build_dense_coding(cu);
    ProtocolReport rep{"dense-coding", d, {}, std::nullopt};
    rep.claims.push_back({"corrections-unitary", cu.unitarity_defect() <= tol, cu.unitarity_defect()});
    rep.claims.push_back(numeric_claim("classical-identity", composite, identity(c), tol));
    rep.claims.push_back(flag_claim("stochastic", is_stochastic(composite, tol)));
    Diagram uniform_out = compose_seq(delete_spider(k), compose_par(uniform_state(k), scalar(1.0 / k)));
    rep.claims.push_back(numeric_claim("without-entanglement-uniform", build_dense_coding(cu, false), uniform_out, tol));
    return rep;
}

Diagram build_entanglement_swap(const ControlledUnitary &cu, SwapOptions options) {
    check_dims(cu);
    int d = cu.dim, k = cu.control_dim();
    auto q = WireType::quantum(d);
    auto c = WireType::classical(k);
    Diagram g;
    if (options.expose_outcome) g.outputs.push_back(c);
    std::size_t o = g.outputs.size();  // index of output 1a
    g.outputs.insert(g.outputs.end(), {q, q, q, q});
    auto out = [&](std::size_t i) { return Endpoint::output(o + i); };
    g.nodes.push_back(Scalar{1.0 / d});  // 0: first Bell pair
    g.nodes.push_back(Scalar{1.0 / d});  // 1: second Bell pair
    g.nodes.push_back(controlled_box(cu).nodes.at(0));        // 2: Bell effect on (1b, 2a)
    g.nodes.push_back(Scalar{1.0 / d});                        // 3
    g.nodes.push_back(controlled_box(cu, true).nodes.at(0));  // 4: re-prepares the Bell state
    g.nodes.push_back(Scalar{1.0 / d});                        // 5
    std::size_t n_spider_legs = 2 + (options.corrections ? 2 : 0) + (options.expose_outcome ? 1 : 0);
    g.nodes.push_back(Spider{k, {}, std::vector<WireType>(n_spider_legs, c), std::nullopt, Heads::Single, 0});  // 6
    const std::size_t spider = 6;
    std::size_t leg = 0;
    g.edges.push_back({out(0), Endpoint::port(2, 1), q});
    g.edges.push_back({Endpoint::port(spider, leg++), Endpoint::port(2, 0), c});
    g.edges.push_back({Endpoint::port(spider, leg++), Endpoint::port(4, 0), c});
    g.edges.push_back({Endpoint::port(4, 1), out(2), q});
    if (options.corrections) {
        g.nodes.push_back(controlled_box(cu, true).nodes.at(0));  // 7: correction on 2b
        g.nodes.push_back(controlled_box(cu).nodes.at(0));        // 8: correction on 1b
        g.edges.push_back({Endpoint::port(2, 2), Endpoint::port(7, 1), q});
        g.edges.push_back({Endpoint::port(7, 2), out(3), q});
        g.edges.push_back({Endpoint::port(4, 2), Endpoint::port(8, 1), q});
        g.edges.push_back({Endpoint::port(8, 2), out(1), q});
        g.edges.push_back({Endpoint::port(spider, leg++), Endpoint::port(7, 0), c});
        g.edges.push_back({Endpoint::port(spider, leg++), Endpoint::port(8, 0), c});
    } else {
        g.edges.push_back({Endpoint::port(2, 2), out(3), q});
        g.edges.push_back({Endpoint::port(4, 2), out(1), q});
    }
    if (options.expose_outcome) g.edges.push_back({Endpoint::port(spider, leg++), Endpoint::output(0), c});
    g.validate();
    return g;
}

namespace {

Diagram crossed_bell_pairs(int dim) {
    auto q = WireType::quantum(dim);
    Diagram d;
    d.outputs = {q, q, q, q};
    d.nodes = {Scalar{1.0 / dim}, Scalar{1.0 / dim}};
    d.edges.push_back({Endpoint::output(0), Endpoint::output(3), q});
    d.edges.push_back({Endpoint::output(1), Endpoint::output(2), q});
    return d;
}

// Keeps 1a and 2b of a (1a, 1b, 2a, 2b) state.
Diagram outer_pair(const Diagram &state) {
    auto q = state.outputs.back();
    return compose_seq(state, compose_par({identity(q), discard(q), discard(q), identity(q)}));
}

Diagram condition_on(const Diagram &exposed, int k, int outcome) {
    auto q = exposed.outputs.back();
    return compose_seq(exposed, compose_par(classical_effect(k, outcome), identity(std::vector<WireType>(4, q))));
}

}  // namespace

ProtocolReport verify_entanglement_swap(const ControlledUnitary &cu, double tol) {
    int d = cu.dim, k = cu.control_dim();
    Diagram composite = build_entanglement_swap(cu);
    ProtocolReport rep{"swap", d, {}, std::nullopt};
    rep.claims.push_back({"corrections-unitary", cu.unitarity_defect() <= tol, cu.unitarity_defect()});
    rep.claims.push_back(numeric_claim("crossed-bell-pairs", composite, crossed_bell_pairs(d), tol,
                                       ScalarMode::UpToScalar));
    rep.claims.push_back(flag_claim("causal", is_causal(composite, tol)));
    Diagram unread = build_entanglement_swap(cu, {false, false});
    Diagram mixed = compose_par({maximally_mixed(d), maximally_mixed(d), scalar(1.0 / (d * d))});
    rep.claims.push_back(numeric_claim("no-communication-maximally-mixed", outer_pair(unread), mixed, tol));
    if (d == 2) {
        Diagram exposed = build_entanglement_swap(cu, {true, true});
        bool all = true;
        for (int c = 0; c < k; c++) all = all && is_entangled_2q(outer_pair(condition_on(exposed, k, c)));
        rep.claims.push_back(flag_claim("entangled-after-each-outcome", all));
        Diagram raw = build_entanglement_swap(cu, {false, true});
        double ev = min_partial_transpose_eigenvalue(outer_pair(condition_on(raw, k, 0)));
        rep.claims.push_back({"uncorrected-outcome-maximally-entangled", std::abs(ev + 0.5) <= tol, std::abs(ev + 0.5)});
        rep.claims.push_back(flag_claim("unread-not-entangled", !is_entangled_2q(outer_pair(unread))));
    }
    return rep;
}

}  // namespace cqd
