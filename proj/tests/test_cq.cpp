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

#include <cmath>

#include "cqd/cq.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"
#include "cqd/linalg.hpp"
#include "support.hpp"

namespace cqd {
namespace {

using testing::Rng;

Diagram rho_state(const Matrix &rho) {
    return density_state(static_cast<int>(rho.rows()), testing::row_major(rho));
}

TEST(ProbDist, Validation) {
    EXPECT_THROW(ProbDist({}), NotNormalized);
    EXPECT_THROW(ProbDist({0.5, 0.6}), NotNormalized);
    EXPECT_THROW(ProbDist({1.5, -0.5}), NotNormalized);
    ProbDist p({1.0, 0.0});
    EXPECT_FALSE(p.full_support());
    EXPECT_THROW(p.inverse(), NoFullSupport);
    auto inv = ProbDist({0.25, 0.75}).inverse();
    EXPECT_DOUBLE_EQ(inv[0], 4.0);
    EXPECT_NEAR(inv[1], 4.0 / 3.0, 1e-15);
    EXPECT_TRUE(is_stochastic(ProbDist::uniform(3).state()));
}

TEST(ClassicalQuantum, MeasureAfterEncodeIsIdentity) {
    for (int d : {2, 3, 5}) {
        EXPECT_TRUE(numeric_equal(compose_seq(encode(d), measure(d)), identity(WireType::classical(d))));
        EXPECT_FALSE(numeric_equal(decoherence(d), identity(WireType::quantum(d))));
    }
}

TEST(ClassicalQuantum, BornRuleMatchesDiagonal) {
    Rng rng(41);
    for (int d : {2, 3, 4}) {
        Matrix rho = testing::random_density(rng, d);
        auto p = born_probabilities(rho_state(rho));
        ASSERT_EQ(p.size(), static_cast<std::size_t>(d));
        for (int i = 0; i < d; i++) EXPECT_NEAR(p[static_cast<std::size_t>(i)], rho(i, i).real(), 1e-12);
    }
    EXPECT_THROW(born_probabilities(classical_value(2, 0)), WrongSignature);
}

TEST(ClassicalQuantum, DecoherenceKillsOffDiagonals) {
    Rng rng(42);
    Matrix rho = testing::random_density(rng, 3);
    Matrix out = density_matrix(evaluate(compose_seq(rho_state(rho), decoherence(3))), 3);
    Matrix expected = rho.diagonal().asDiagonal();
    EXPECT_LT((out - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ClassicalQuantum, CausalityChecks) {
    EXPECT_TRUE(is_causal(measure(3)));
    EXPECT_TRUE(is_causal(encode(3)));
    EXPECT_FALSE(is_causal(maximally_mixed(2)));
    EXPECT_TRUE(is_causal(compose_par(maximally_mixed(2), scalar(0.5))));
    EXPECT_FALSE(is_causal(bell_state(2)));
    EXPECT_TRUE(is_causal(quantum_value(2, 0)));
    Rng rng(43);
    Matrix u = random_unitary(3, rng);
    EXPECT_TRUE(is_causal(doubled_box("U", u)));
    EXPECT_FALSE(is_causal(doubled_box("2U", 2.0 * u)));
}

TEST(ClassicalQuantum, StochasticAndDeterministic) {
    EXPECT_TRUE(is_deterministic(copy_spider(3)));
    EXPECT_TRUE(is_stochastic(copy_spider(3)));
    EXPECT_TRUE(is_deterministic(classical_value(4, 2)));
    EXPECT_TRUE(is_stochastic(ProbDist({0.2, 0.8}).state()));
    EXPECT_FALSE(is_deterministic(ProbDist({0.2, 0.8}).state()));
    EXPECT_FALSE(is_stochastic(classical_spider(2, 0, 1)));
    EXPECT_THROW(is_stochastic(measure(2)), WrongSignature);
}

TEST(ClassicalQuantum, PurityOfStates) {
    EXPECT_TRUE(is_pure(bell_state(3)));
    EXPECT_FALSE(is_pure(maximally_mixed(2)));
    Rng rng(44);
    Vector v = testing::random_vector(rng, 3);
    Matrix pure = v * v.adjoint();
    EXPECT_TRUE(is_pure(rho_state(pure)));
    EXPECT_THROW(is_pure(measure(2)), WrongSignature);
}

TEST(Measurement, ProjectionPostulate) {
    Rng rng(45);
    for (int d : {2, 3, 4}) {
        EXPECT_TRUE(is_vn_measurement(non_demolition_measurement(d)));
        EXPECT_TRUE(is_vn_measurement(rotated_measurement(random_unitary(d, rng))));
    }
}

TEST(Measurement, NonProjectiveKrausFails) {
    Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
    double a = std::sqrt(0.7), b = std::sqrt(0.3);
    k0(0, 0) = 1.0;
    k0(1, 1) = a;
    k1(1, 1) = b;
    Diagram weak = kraus_measurement({k0, k1});
    EXPECT_TRUE(is_causal(weak));
    EXPECT_FALSE(is_vn_measurement(weak));
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    EXPECT_TRUE(is_vn_measurement(kraus_measurement({p0, p1})));
    EXPECT_THROW(is_vn_measurement(measure(2)), WrongSignature);
}

TEST(Measurement, PovmEffectsRoundTrip) {
    Rng rng(46);
    auto effects = testing::random_povm(rng, 3, 4);
    auto back = povm_effects(povm_diagram(effects));
    ASSERT_EQ(back.size(), effects.size());
    for (std::size_t i = 0; i < effects.size(); i++) EXPECT_LT((back[i] - effects[i]).cwiseAbs().maxCoeff(), 1e-14);
    Matrix rho = testing::random_density(rng, 3);
    Tensor probs = evaluate(compose_seq(rho_state(rho), povm_diagram(effects)));
    for (std::size_t i = 0; i < effects.size(); i++) {
        EXPECT_NEAR(probs[i].real(), (effects[i] * rho).trace().real(), 1e-12);
    }
}

TEST(Naimark, TrineDilation) {
    auto trine = testing::trine_povm();
    NaimarkDilation n = naimark_dilate(povm_diagram(trine));
    EXPECT_EQ(n.v.rows(), 6);
    EXPECT_LT(n.isometry_defect, 1e-12);
    EXPECT_LT(n.reconstruction_error, 1e-12);
    EXPECT_TRUE(is_causal(n.isometry));
    EXPECT_TRUE(numeric_equal(n.composite, povm_diagram(trine)));
}

TEST(Naimark, RejectsIncompletePovm) {
    auto trine = testing::trine_povm();
    trine.pop_back();
    EXPECT_THROW(naimark_dilate(povm_diagram(trine)), NotCausal);
}

TEST(Mixing, ControlledProcessAndMix) {
    Rng rng(47);
    Matrix r1 = testing::random_density(rng, 2), r2 = testing::random_density(rng, 2);
    Diagram m = mix({rho_state(r1), rho_state(r2)}, ProbDist({0.3, 0.7}));
    Matrix got = density_matrix(evaluate(m), 2);
    EXPECT_LT((got - (0.3 * r1 + 0.7 * r2)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(mix({rho_state(r1), rho_state(r2)}, ProbDist({1.0, 0.0})), NoFullSupport);
    EXPECT_THROW(mix({rho_state(r1)}, ProbDist({0.5, 0.5})), DimMismatch);
    EXPECT_THROW(controlled_process({measure(2), encode(2)}), BoundaryMismatch);
}

TEST(Mixing, PureMixturesHaveEqualBranches) {
    Rng rng(48);
    Vector v = testing::random_vector(rng, 2);
    Diagram psi = rho_state(v * v.adjoint());
    std::vector<MixtureSample> samples;
    samples.push_back({{psi, psi, psi}, {0.2, 0.3, 0.5}});
    Vector w = testing::random_vector(rng, 2);
    samples.push_back({{psi, rho_state(w * w.adjoint())}, {0.5, 0.5}});
    PurityExtremalReport rep = check_purity_extremal(samples);
    EXPECT_EQ(rep.pure, 1u);
    EXPECT_EQ(rep.impure, 1u);
    EXPECT_EQ(rep.violations, 0u);
}

TEST(Terminate, MixedBoundary) {
    Diagram t = terminate_all({WireType::quantum(2), WireType::classical(3)});
    EXPECT_EQ(t.inputs.size(), 2u);
    EXPECT_TRUE(t.outputs.empty());
}

}  // namespace
}  // namespace cqd
