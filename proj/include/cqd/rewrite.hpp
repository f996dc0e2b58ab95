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

#ifndef CQD_REWRITE_HPP
#define CQD_REWRITE_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "cqd/diagram.hpp"

namespace cqd {

/// An embedding of a rule's left-hand side: the matched nodes (the first is
/// the anchor) and, for rules acting on specific legs, the ports involved.
struct Match {
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> ports;
    bool operator==(const Match &) const = default;
};

/// A sampled instantiation of a rule: both sides as closed-form diagrams.
struct RuleInstance {
    Diagram lhs;
    Diagram rhs;
};

class RewriteRule {
   public:
    virtual ~RewriteRule() = default;
    virtual std::string name() const = 0;
    /// The law the rule implements, for the rule catalog.
    virtual std::string law() const = 0;
    virtual std::string summary() const = 0;
    /// Lemmas hold in the model but are not used by normalize.
    virtual bool is_lemma() const {
        return false;
    }
    /// Whether the rule only holds up to a non-zero scalar.
    virtual bool up_to_scalar() const {
        return false;
    }
    virtual std::vector<Match> find_matches(const Diagram &d) const = 0;
    /// Assumes `m` came from find_matches; use apply_rule for checked use.
    virtual Diagram apply(const Diagram &d, const Match &m) const = 0;
    /// A random instance with legs of base dimension `dim`.
    virtual RuleInstance sample(std::mt19937_64 &rng, int dim) const = 0;
};

using RulePtr = std::shared_ptr<const RewriteRule>;

/// Immutable ordered rule registry. Registration checks each rule on a few
/// sampled instances and throws AxiomFailure when one is unsound.
class RuleSet {
   public:
    void add(RulePtr rule, bool verify = true);
    const std::vector<RulePtr> &rules() const {
        return rules_;
    }
    const RewriteRule *find(const std::string &name) const;
    std::vector<RulePtr> normalizing() const;
    std::vector<RulePtr> lemmas() const;

   private:
    std::vector<RulePtr> rules_;
};

/// The registered catalog: normalizing rules in priority order, then lemmas.
const RuleSet &default_rules();

/// Throws InvalidMatch unless `m` is a current match of `rule` in d.
Diagram apply_rule(const Diagram &d, const RewriteRule &rule, const Match &m);

struct RewriteStep {
    std::string rule;
    Match match;
    std::uint64_t result_hash = 0;
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;
};

/// Lexicographic termination measure: (spiders + boxes, total ports, nodes).
using TerminationMeasure = std::tuple<std::size_t, std::size_t, std::size_t>;
TerminationMeasure termination_measure(const Diagram &d);

struct NormalizeResult {
    Diagram diagram;
    RewriteTrace trace;
};

/// Rewrites to a fixpoint, always taking the match with the lowest anchor
/// node and, among those, the earliest rule.
NormalizeResult normalize(const Diagram &d, const RuleSet &rules = default_rules());
/// Same rules, but each step picks a uniformly random match.
NormalizeResult normalize_randomized(const Diagram &d, std::mt19937_64 &rng, const RuleSet &rules = default_rules());
/// Replays a trace and checks every intermediate hash; throws InvalidMatch.
Diagram replay(const Diagram &initial, const RewriteTrace &trace, const RuleSet &rules = default_rules());

struct RewriteEqualResult {
    bool equal = false;
    bool delegated = false;  // decided by the tensor oracle
};

/// Throws BoundaryMismatch when the signatures differ.
RewriteEqualResult rewrite_equal(const Diagram &d1, const Diagram &d2, ScalarMode mode, double tol = 1e-9);

/// Soundness check of one instance; returns the deviation.
double instance_deviation(const RewriteRule &rule, const RuleInstance &inst);

/// Markdown catalog of the rules.
std::string rules_markdown(const RuleSet &rules = default_rules());

/// Replaces the nodes in `removed` by `r`. `attach` lists, for every input
/// then output of r, the endpoint of d it is wired to; each must be the outer
/// end of an edge leaving the removed set, and that edge is dropped.
Diagram replace_subgraph(const Diagram &d, const std::vector<std::size_t> &removed, const Diagram &r,
                         const std::vector<Endpoint> &attach);

}  // namespace cqd

#endif
