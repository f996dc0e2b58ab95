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

#include "cqd/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

#include "cqd/errors.hpp"
#include "cqd/evaluate.hpp"

namespace cqd {

Diagram replace_subgraph(const Diagram &d, const std::vector<std::size_t> &removed, const Diagram &r,
                         const std::vector<Endpoint> &attach) {
    if (attach.size() != r.inputs.size() + r.outputs.size()) {
        throw InvalidMatch("replacement boundary does not match the attachment list");
    }
    std::vector<bool> gone(d.nodes.size(), false);
    for (auto n : removed) gone.at(n) = true;
    std::size_t insert_at = removed.empty() ? d.nodes.size() : *std::min_element(removed.begin(), removed.end());

    Diagram out;
    out.inputs = d.inputs;
    out.outputs = d.outputs;
    std::vector<std::size_t> new_index(d.nodes.size(), SIZE_MAX);
    std::size_t r_offset = 0;
    for (std::size_t n = 0; n <= d.nodes.size(); n++) {
        if (n == insert_at) {
            r_offset = out.nodes.size();
            out.nodes.insert(out.nodes.end(), r.nodes.begin(), r.nodes.end());
        }
        if (n < d.nodes.size() && !gone[n]) {
            new_index[n] = out.nodes.size();
            out.nodes.push_back(d.nodes[n]);
        }
    }
    auto remap = [&](Endpoint e) {
        if (e.is_port()) e.node = new_index[e.node];
        return e;
    };
    auto inside = [&](const Endpoint &e) { return e.is_port() && gone[e.node]; };
    std::vector<bool> attach_used(attach.size(), false);
    for (const auto &e : d.edges) {
        bool ia = inside(e.a), ib = inside(e.b);
        if (!ia && !ib) {
            out.edges.push_back({remap(e.a), remap(e.b), e.type});
            continue;
        }
        if (ia && ib) continue;
        const Endpoint &outer = ia ? e.b : e.a;
        auto it = std::find(attach.begin(), attach.end(), outer);
        if (it == attach.end()) {
            throw InvalidMatch("an edge leaving the rewritten region is not reattached");
        }
        attach_used[static_cast<std::size_t>(it - attach.begin())] = true;
    }
    if (!std::all_of(attach_used.begin(), attach_used.end(), [](bool b) { return b; })) {
        throw InvalidMatch("attachment endpoint is not on an edge leaving the rewritten region");
    }
    auto map_r = [&](const Endpoint &e) {
        switch (e.kind) {
            case Endpoint::Kind::Input:
                return remap(attach[e.index]);
            case Endpoint::Kind::Output:
                return remap(attach[r.inputs.size() + e.index]);
            default:
                return Endpoint::port(e.node + r_offset, e.index);
        }
    };
    for (const auto &e : r.edges) {
        out.edges.push_back({map_r(e.a), map_r(e.b), e.type});
    }
    return out;
}

void RuleSet::add(RulePtr rule, bool verify) {
    if (verify) {
        std::mt19937_64 rng(0x5eed);
        for (int trial = 0; trial < 3; trial++) {
            RuleInstance inst = rule->sample(rng, 2);
            double dev = instance_deviation(*rule, inst);
            if (dev > 1e-9) {
                throw AxiomFailure("rule '" + rule->name() + "' fails on a sampled instance (deviation " +
                                   std::to_string(dev) + ")");
            }
        }
    }
    rules_.push_back(std::move(rule));
}

const RewriteRule *RuleSet::find(const std::string &name) const {
    for (const auto &r : rules_) {
        if (r->name() == name) return r.get();
    }
    return nullptr;
}

std::vector<RulePtr> RuleSet::normalizing() const {
    std::vector<RulePtr> out;
    std::copy_if(rules_.begin(), rules_.end(), std::back_inserter(out), [](const RulePtr &r) { return !r->is_lemma(); });
    return out;
}

std::vector<RulePtr> RuleSet::lemmas() const {
    std::vector<RulePtr> out;
    std::copy_if(rules_.begin(), rules_.end(), std::back_inserter(out), [](const RulePtr &r) { return r->is_lemma(); });
    return out;
}

double instance_deviation(const RewriteRule &rule, const RuleInstance &inst) {
    NumericTolerance tol{1e-9, rule.up_to_scalar() ? ScalarMode::UpToScalar : ScalarMode::Strict};
    NumericComparison c = compare_numeric(inst.lhs, inst.rhs, tol);
    return c.equal ? c.deviation : std::max(c.deviation, 1.0);
}

Diagram apply_rule(const Diagram &d, const RewriteRule &rule, const Match &m) {
    if (rule.is_lemma()) {
        throw InvalidMatch("rule '" + rule.name() + "' is a lemma and is not applied by rewriting");
    }
    auto matches = rule.find_matches(d);
    if (std::find(matches.begin(), matches.end(), m) == matches.end()) {
        throw InvalidMatch("not a match of rule '" + rule.name() + "'");
    }
    return rule.apply(d, m);
}

TerminationMeasure termination_measure(const Diagram &d) {
    std::size_t gens = 0, ports = 0;
    for (const auto &n : d.nodes) {
        if (std::holds_alternative<Spider>(n) || std::holds_alternative<Box>(n)) gens++;
        ports += port_count(n);
    }
    return {gens, ports, d.nodes.size()};
}

namespace {

struct Candidate {
    const RewriteRule *rule;
    Match match;
};

std::vector<Candidate> all_matches(const Diagram &d, const std::vector<RulePtr> &rules) {
    std::vector<Candidate> out;
    for (const auto &r : rules) {
        for (auto &m : r->find_matches(d)) out.push_back({r.get(), std::move(m)});
    }
    return out;
}

template <class Pick>
NormalizeResult run_normalize(const Diagram &d, const RuleSet &rules, Pick pick) {
    auto active = rules.normalizing();
    NormalizeResult res{d, {}};
    while (true) {
        auto cands = all_matches(res.diagram, active);
        if (cands.empty()) break;
        const Candidate &c = pick(cands);
        Diagram next = c.rule->apply(res.diagram, c.match);
        if (!(termination_measure(next) < termination_measure(res.diagram))) {
            throw std::logic_error("rule '" + c.rule->name() + "' did not decrease the termination measure");
        }
        res.trace.steps.push_back({c.rule->name(), c.match, structural_hash(next)});
        res.diagram = std::move(next);
    }
    return res;
}

}  // namespace

NormalizeResult normalize(const Diagram &d, const RuleSet &rules) {
    return run_normalize(d, rules, [](const std::vector<Candidate> &cands) -> const Candidate & {
        // Matches come grouped by rule priority, so the first one with the
        // lowest anchor wins ties.
        std::size_t best = 0;
        for (std::size_t i = 1; i < cands.size(); i++) {
            if (cands[i].match.nodes.front() < cands[best].match.nodes.front()) best = i;
        }
        return cands[best];
    });
}

NormalizeResult normalize_randomized(const Diagram &d, std::mt19937_64 &rng, const RuleSet &rules) {
    return run_normalize(d, rules, [&](const std::vector<Candidate> &cands) -> const Candidate & {
        std::uniform_int_distribution<std::size_t> u(0, cands.size() - 1);
        return cands[u(rng)];
    });
}

Diagram replay(const Diagram &initial, const RewriteTrace &trace, const RuleSet &rules) {
    Diagram cur = initial;
    for (std::size_t i = 0; i < trace.steps.size(); i++) {
        const auto &step = trace.steps[i];
        const RewriteRule *rule = rules.find(step.rule);
        if (rule == nullptr) throw InvalidMatch("unknown rule '" + step.rule + "' in trace");
        cur = apply_rule(cur, *rule, step.match);
        if (structural_hash(cur) != step.result_hash) {
            throw InvalidMatch("trace step " + std::to_string(i) + " does not reproduce the recorded diagram");
        }
    }
    return cur;
}

RewriteEqualResult rewrite_equal(const Diagram &d1, const Diagram &d2, ScalarMode mode, double tol) {
    if (d1.inputs != d2.inputs || d1.outputs != d2.outputs) {
        throw BoundaryMismatch("diagrams have different boundary signatures");
    }
    Diagram n1 = normalize(d1).diagram;
    Diagram n2 = normalize(d2).diagram;
    if (isomorphic(n1, n2, mode, tol)) return {true, false};
    return {numeric_equal(d1, d2, {tol, mode}), true};
}

std::string rules_markdown(const RuleSet &rules) {
    std::string out = "# Rewrite rules\n\n";
    out += "Generated by `cqd rules`. Normalizing rules are listed in priority order;\n";
    out += "lemmas are checked for soundness and used by equality tests only.\n\n";
    out += "| rule | kind | law | equality | description |\n|---|---|---|---|---|\n";
    for (const auto &r : rules.rules()) {
        out += "| `" + r->name() + "` | " + (r->is_lemma() ? "lemma" : "normalizing") + " | " + r->law() + " | " +
               (r->up_to_scalar() ? "up to scalar" : "strict") + " | " + r->summary() + " |\n";
    }
    return out;
}

}  // namespace cqd
