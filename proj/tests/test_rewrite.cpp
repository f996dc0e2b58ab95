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

#include <gtest/gtest.h>

#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"
#include "cqd/rewrite.hpp"
#include "support.hpp"

namespace cqd {
namespace {

using testing::Rng;

class WrongRule : public RewriteRule {
   public:
    std::string name() const override {
        return "doubling-wire";
    }
    std::string law() const override {
        return "none";
    }
    std::string summary() const override {
        return "claims a wire equals twice a wire";
    }
    std::vector<Match> find_matches(const Diagram &) const override {
        return {};
    }
    Diagram apply(const Diagram &d, const Match &) const override {
        return d;
    }
    RuleInstance sample(std::mt19937_64 &, int dim) const override {
        auto c = WireType::classical(dim);
        return {identity(c), compose_par(identity(c), scalar(2.0))};
    }
};

TEST(Rules, RegistryOrderAndLemmas) {
    const RuleSet &rules = default_rules();
    ASSERT_FALSE(rules.normalizing().empty());
    EXPECT_EQ(rules.normalizing().front()->name(), "spider-loop");
    EXPECT_NE(rules.find("frobenius"), nullptr);
    EXPECT_TRUE(rules.find("frobenius")->is_lemma());
    EXPECT_EQ(rules.find("no-such-rule"), nullptr);
    for (const auto &r : rules.rules()) {
        EXPECT_NE(rules_markdown().find("`" + r->name() + "`"), std::string::npos);
    }
}

TEST(Rules, SoundAtDimensionFour) {
    Rng rng(21);
    for (const auto &rule : default_rules().rules()) {
        int checked = 0;
        for (int k = 0; k < 20 && checked < 5; k++) {
            try {
                EXPECT_LE(instance_deviation(*rule, rule->sample(rng, 4)), 1e-9) << rule->name();
                checked++;
            } catch (const TensorTooLarge &) {
            }
        }
        EXPECT_EQ(checked, 5) << rule->name();
    }
}

TEST(Rules, RegistrationRejectsUnsoundRule) {
    RuleSet set;
    EXPECT_THROW(set.add(std::make_shared<WrongRule>()), AxiomFailure);
    EXPECT_NO_THROW(set.add(std::make_shared<WrongRule>(), false));
}

TEST(Normalize, PreservesSemantics) {
    Rng rng(22);
    for (int k = 0; k < 60; k++) {
        Diagram d = testing::random_spider_diagram(rng, 2 + k % 2);
        NormalizeResult nf = normalize(d);
        EXPECT_TRUE(numeric_equal(d, nf.diagram)) << describe(d);
    }
}

TEST(Normalize, MeasureStrictlyDecreases) {
    Rng rng(23);
    for (int k = 0; k < 30; k++) {
        Diagram d = testing::random_spider_diagram(rng, 2);
        NormalizeResult nf = normalize(d);
        Diagram cur = d;
        for (const auto &step : nf.trace.steps) {
            Diagram next = apply_rule(cur, *default_rules().find(step.rule), step.match);
            EXPECT_LT(termination_measure(next), termination_measure(cur));
            cur = next;
        }
        EXPECT_EQ(cur, nf.diagram);
    }
}

TEST(Normalize, FixpointHasNoMatches) {
    Rng rng(24);
    for (int k = 0; k < 30; k++) {
        NormalizeResult nf = normalize(testing::random_spider_diagram(rng, 3));
        for (const auto &r : default_rules().normalizing()) EXPECT_TRUE(r->find_matches(nf.diagram).empty()) << r->name();
    }
}

TEST(Normalize, RandomizedOrderReachesSameNormalForm) {
    Rng gen(25);
    for (int k = 0; k < 30; k++) {
        Diagram d = testing::random_spider_diagram(gen, 2);
        Diagram a = normalize(d).diagram;
        Rng rng(1000 + static_cast<unsigned>(k));
        Diagram b = normalize_randomized(d, rng).diagram;
        EXPECT_TRUE(isomorphic(a, b, ScalarMode::Strict)) << describe(d);
    }
}

TEST(Normalize, FusesChainOfSpiders) {
    Diagram chain = compose_seq({classical_spider(2, 1, 2), compose_par(classical_spider(2, 1, 1), identity(WireType::classical(2))),
                                 classical_spider(2, 2, 1)});
    Diagram nf = normalize(chain).diagram;
    // A loop-free chain collapses to a wire.
    EXPECT_TRUE(isomorphic(nf, identity(WireType::classical(2)), ScalarMode::Strict));
}

TEST(Normalize, CopiesValues) {
    Diagram d = compose_seq(classical_value(3, 2), copy_spider(3));
    Diagram nf = normalize(d).diagram;
    EXPECT_TRUE(isomorphic(nf, compose_par(classical_value(3, 2), classical_value(3, 2)), ScalarMode::Strict));
}

TEST(Replay, DetectsTampering) {
    Diagram d = compose_seq(classical_spider(2, 1, 2), classical_spider(2, 2, 1));
    NormalizeResult nf = normalize(d);
    ASSERT_FALSE(nf.trace.steps.empty());
    EXPECT_EQ(replay(d, nf.trace), nf.diagram);
    RewriteTrace bad = nf.trace;
    bad.steps.front().result_hash ^= 1;
    EXPECT_THROW(replay(d, bad), InvalidMatch);
}

TEST(ApplyRule, RejectsForeignMatch) {
    const RewriteRule *fusion = default_rules().find("spider-fusion");
    ASSERT_NE(fusion, nullptr);
    EXPECT_THROW(apply_rule(copy_spider(2), *fusion, Match{{0, 0}, {}}), InvalidMatch);
}

TEST(RewriteEqual, ClosesSplitSpiders) {
    Rng rng(26);
    for (int k = 0; k < 30; k++) {
        Diagram d = testing::random_spider_diagram(rng, 2);
        Diagram e = testing::shuffle_nodes(testing::split_random_spider(d, rng), rng);
        RewriteEqualResult r = rewrite_equal(d, e, ScalarMode::Strict);
        EXPECT_TRUE(r.equal);
        EXPECT_FALSE(r.delegated);
    }
}

TEST(RewriteEqual, SignatureMismatch) {
    EXPECT_THROW(rewrite_equal(copy_spider(2), identity(WireType::classical(2)), ScalarMode::Strict), BoundaryMismatch);
}

TEST(ReplaceSubgraph, SwapsNodeForIdentity) {
    Diagram d = compose_seq({classical_spider(2, 1, 1), classical_spider(2, 1, 1)});
    // Remove node 1 and reconnect its neighbours through a plain wire.
    std::vector<std::size_t> removed{1};
    auto pe = d.port_edges();
    auto outer = [&](std::size_t edge) {
        const Edge &e = d.edges[edge];
        return e.a.is_port() && e.a.node == 1 ? e.b : e.a;
    };
    Diagram r = replace_subgraph(d, removed, identity(WireType::classical(2)), {outer(pe[1][0]), outer(pe[1][1])});
    EXPECT_EQ(r.nodes.size(), 1u);
    EXPECT_TRUE(numeric_equal(r, d));
}

}  // namespace
}  // namespace cqd
