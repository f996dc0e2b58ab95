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

#include <algorithm>
#include <cmath>

#include "cqd/cq.hpp"
#include "cqd/entanglement.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"
#include "cqd/linalg.hpp"
#include "cqd/protocols.hpp"
#include "support.hpp"

namespace cqd {
namespace {

using testing::ket3;
using testing::Rng;

const double kR2 = 1.0 / std::sqrt(2.0);
const double kR3 = 1.0 / std::sqrt(3.0);

TEST(Ppt, BellStateVersusProduct) {
    EXPECT_NEAR(min_partial_transpose_eigenvalue(bell_state(2)), -0.5, 1e-12);
    EXPECT_TRUE(is_entangled_2q(bell_state(2)));
    EXPECT_FALSE(is_entangled_2q(compose_par(maximally_mixed(2), quantum_value(2, 1))));
    EXPECT_THROW(is_entangled_2q(bell_state(3)), WrongSignature);
    EXPECT_THROW(min_partial_transpose_eigenvalue(maximally_mixed(2)), WrongSignature);
}

TEST(Disentangled, ClassicalCorrelationsStaySeparable) {
    Rng rng(51);
    for (int k = 0; k < 20; k++) {
        std::vector<Matrix> r1, r2;
        for (int c = 0; c < 2; c++) {
            r1.push_back(testing::random_density(rng, 2));
            r2.push_back(testing::random_density(rng, 2));
        }
        Diagram phi1 = controlled_process({density_state(2, testing::row_major(r1[0])),
                                           density_state(2, testing::row_major(r1[1]))});
        Diagram phi2 = controlled_process({density_state(2, testing::row_major(r2[0])),
                                           density_state(2, testing::row_major(r2[1]))});
        double p = 0.1 + 0.8 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        Diagram state = make_disentangled(phi1, phi2, ProbDist({p, 1.0 - p}));
        EXPECT_FALSE(is_entangled_2q(state));
        Matrix got = joint_density_matrix(evaluate(state), {2, 2});
        Matrix oracle = Matrix::Zero(4, 4);
        for (int c = 0; c < 2; c++) {
            double w = c == 0 ? p : 1.0 - p;
            for (int a = 0; a < 2; a++)
                for (int b = 0; b < 2; b++)
                    for (int a2 = 0; a2 < 2; a2++)
                        for (int b2 = 0; b2 < 2; b2++)
                            oracle(a * 2 + b, a2 * 2 + b2) += w * r1[c](a, a2) * r2[c](b, b2);
        }
        EXPECT_LT((got - oracle).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Disentangled, Validation) {
    Diagram phi = encode(2);
    EXPECT_NO_THROW(make_disentangled(phi, phi));
    EXPECT_THROW(make_disentangled(measure(2), phi), WrongSignature);
    EXPECT_THROW(make_disentangled(phi, encode(3)), DimMismatch);
    EXPECT_THROW(make_disentangled(compose_seq(encode(2), doubled_box("2I", 2.0 * Matrix::Identity(2, 2))), phi),
                 NotCausal);
    EXPECT_THROW(make_disentangled(phi, phi, ProbDist::uniform(3)), DimMismatch);
}

TEST(Disentangled, CorrelatedEncodings) {
    Diagram s = make_disentangled(encode(2), encode(2), ProbDist::uniform(2));
    Matrix rho = joint_density_matrix(evaluate(s), {2, 2});
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    EXPECT_LT((rho - expected).cwiseAbs().maxCoeff(), 1e-12);
    Diagram decohered = compose_seq(normalized_bell_state(2), compose_par(decoherence(2), identity(WireType::quantum(2))));
    EXPECT_TRUE(numeric_equal(decohered, s));
    EXPECT_FALSE(is_entangled_2q(decohered));
    Diagram constant = compose_seq(delete_spider(2), compose_par(quantum_value(2, 1), scalar(1.0)));
    Diagram product = make_disentangled(constant, constant);
    EXPECT_TRUE(numeric_equal(product, compose_par(quantum_value(2, 1), quantum_value(2, 1))));
}

TEST(Slocc, CanonicalFixtures) {
    EXPECT_EQ(slocc_classify_3q(ket3({{0b000, kR2}, {0b111, kR2}})), SloccClass::GHZ);
    EXPECT_EQ(slocc_classify_3q(ket3({{0b001, kR3}, {0b010, kR3}, {0b100, kR3}})), SloccClass::W);
    EXPECT_EQ(slocc_classify_3q(ket3({{0b000, kR2}, {0b011, kR2}})), SloccClass::BiseparableA_BC);
    EXPECT_EQ(slocc_classify_3q(ket3({{0b000, kR2}, {0b101, kR2}})), SloccClass::BiseparableB_AC);
    EXPECT_EQ(slocc_classify_3q(ket3({{0b000, kR2}, {0b110, kR2}})), SloccClass::BiseparableC_AB);
    EXPECT_EQ(slocc_classify_3q(ket3({{0b000, 1.0}})), SloccClass::Separable);
    std::vector<Complex> unnormalized(8, 0.0);
    unnormalized[0] = 2.0;
    EXPECT_THROW(slocc_classify_3q(unnormalized), NotNormalized);
    EXPECT_THROW(three_tangle({1.0, 0.0}), ShapeMismatch);
}

TEST(Slocc, ThreeTangleValues) {
    EXPECT_NEAR(three_tangle(ket3({{0b000, kR2}, {0b111, kR2}})), 1.0, 1e-12);
    EXPECT_NEAR(three_tangle(ket3({{0b001, kR3}, {0b010, kR3}, {0b100, kR3}})), 0.0, 1e-12);
    auto ranks = local_ranks(ket3({{0b000, kR2}, {0b011, kR2}}));
    EXPECT_EQ(ranks, (std::array<int, 3>{1, 2, 2}));
}

TEST(Slocc, ClassInvariantUnderInvertibleLocals) {
    Rng rng(52);
    auto ghz = ket3({{0b000, kR2}, {0b111, kR2}});
    auto w = ket3({{0b001, kR3}, {0b010, kR3}, {0b100, kR3}});
    for (int k = 0; k < 25; k++) {
        std::vector<Matrix> locals{testing::random_invertible(rng, 2), testing::random_invertible(rng, 2),
                                   testing::random_invertible(rng, 2)};
        for (const auto *psi : {&ghz, &w}) {
            auto moved = testing::apply_locals(*psi, locals);
            double n = 0.0;
            for (auto z : moved) n += std::norm(z);
            for (auto &z : moved) z /= std::sqrt(n);
            EXPECT_EQ(slocc_classify_3q(moved), slocc_classify_3q(*psi));
            EXPECT_TRUE(slocc_convert_check(*psi, moved, {2, 2, 2}, locals));
        }
    }
}

TEST(Slocc, CupDegeneratesToProduct) {
    std::vector<Complex> cup{1.0, 0.0, 0.0, 1.0}, zero_zero{1.0, 0.0, 0.0, 0.0};
    Matrix p0 = Matrix::Zero(2, 2), l2 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    l2(0, 0) = l2(0, 1) = 1.0;
    EXPECT_TRUE(slocc_convert_check(cup, zero_zero, {2, 2}, {p0, l2}));
    EXPECT_FALSE(slocc_convert_check(zero_zero, cup, {2, 2}, {p0, l2}));
}

TEST(Slocc, GhzDoesNotReachW) {
    Rng rng(53);
    auto ghz = ket3({{0b000, kR2}, {0b111, kR2}});
    auto w = ket3({{0b001, kR3}, {0b010, kR3}, {0b100, kR3}});
    for (int k = 0; k < 25; k++) {
        std::vector<Matrix> locals{testing::random_invertible(rng, 2), testing::random_invertible(rng, 2),
                                   testing::random_invertible(rng, 2)};
        EXPECT_FALSE(slocc_convert_check(ghz, w, {2, 2, 2}, locals));
        EXPECT_TRUE(slocc_convert_check(ghz, ghz, {2, 2, 2}, std::vector<Matrix>(3, Matrix::Identity(2, 2))));
    }
}

TEST(Slocc, ConvertCheckRejectsWrongTarget) {
    auto ghz = ket3({{0b000, kR2}, {0b111, kR2}});
    auto w = ket3({{0b001, kR3}, {0b010, kR3}, {0b100, kR3}});
    std::vector<Matrix> id(3, Matrix::Identity(2, 2));
    EXPECT_FALSE(slocc_convert_check(ghz, w, {2, 2, 2}, id));
    EXPECT_THROW(slocc_convert_check(ghz, w, {2, 2}, id), ShapeMismatch);
}

TEST(AntiSpider, RegistersAsWFamily) {
    AntiSpiderFamily fam = register_anti_spider(anti_spider_candidate());
    EXPECT_EQ(fam.state_class, SloccClass::W);
    EXPECT_EQ(fam.spider_state_class, SloccClass::GHZ);
    EXPECT_NE(std::find(fam.laws_checked.begin(), fam.laws_checked.end(), "anti-special"), fam.laws_checked.end());
    EXPECT_NE(std::find(fam.laws_checked.begin(), fam.laws_checked.end(), "frobenius"), fam.laws_checked.end());
}

TEST(AntiSpider, OrdinarySpiderFailsAntiSpecial) {
    EXPECT_THROW(register_anti_spider(onb_spider_candidate()), AxiomFailure);
    auto [lhs, rhs] = anti_special_sides(onb_spider_candidate());
    EXPECT_FALSE(numeric_equal(lhs, rhs, {1e-9, ScalarMode::UpToScalar}));
}

TEST(AntiSpider, BrokenUnitIsRejected) {
    FrobeniusCandidate c = anti_spider_candidate();
    c.unit[1] = 1.0;
    EXPECT_THROW(register_anti_spider(c), AxiomFailure);
}

}  // namespace
}  // namespace cqd
