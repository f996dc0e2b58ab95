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
#include "cqd/linalg.hpp"
#include "support.hpp"

namespace cqd {
namespace {

using testing::Rng;

Tensor random_tensor(Rng &rng, std::vector<std::size_t> shape) {
    std::normal_distribution<double> g;
    Tensor t = Tensor::zeros(std::move(shape));
    for (std::size_t i = 0; i < t.size(); i++) t[i] = {g(rng), g(rng)};
    return t;
}

TEST(Tensor, RowMajorLayout) {
    Tensor t({2, 3}, {1, 2, 3, 4, 5, 6});
    std::vector<std::size_t> idx{1, 2};
    EXPECT_EQ(t.at(idx), Complex(6.0));
    EXPECT_EQ(t.flat_index(idx), 5u);
    EXPECT_EQ(t.multi_index(4), (std::vector<std::size_t>{1, 1}));
}

TEST(Tensor, PermutedMatchesLoop) {
    Rng rng(1);
    Tensor t = random_tensor(rng, {2, 3, 4});
    std::vector<std::size_t> perm{2, 0, 1};
    Tensor p = t.permuted(perm);
    ASSERT_EQ(p.shape(), (std::vector<std::size_t>{4, 2, 3}));
    for (std::size_t a = 0; a < 2; a++) {
        for (std::size_t b = 0; b < 3; b++) {
            for (std::size_t c = 0; c < 4; c++) {
                std::vector<std::size_t> src{a, b, c}, dst{c, a, b};
                EXPECT_EQ(t.at(src), p.at(dst));
            }
        }
    }
}

TEST(Tensor, KronOrdersOtherLast) {
    Tensor a({2}, {1, 2});
    Tensor b({3}, {1, 10, 100});
    Tensor k = a.kron(b);
    EXPECT_EQ(k.shape(), (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(k[5], Complex(200.0));
}

TEST(Tensor, DoubleTensorInterleavesKetAndBra) {
    Tensor t({2}, {Complex(1, 1), Complex(2, 0)});
    Tensor d = double_tensor(t);
    ASSERT_EQ(d.shape(), (std::vector<std::size_t>{4}));
    // entry (k, b) = t[k] conj(t[b]) at k * 2 + b
    EXPECT_EQ(d[0], Complex(2, 0));
    EXPECT_EQ(d[1], Complex(2, 2));
    EXPECT_EQ(d[2], Complex(2, -2));
    EXPECT_EQ(d[3], Complex(4, 0));
    Tensor shared = double_tensor(Tensor({2, 2}, {1, 2, 3, 4}), {true, false});
    ASSERT_EQ(shared.shape(), (std::vector<std::size_t>{2, 4}));
    EXPECT_EQ(shared[4 + 1], Complex(12.0));  // c = 1, (k, b) = (0, 1): 3 * 4
}

TEST(Tensor, ColumnarTextRoundTrip) {
    Rng rng(2);
    Tensor t = random_tensor(rng, {3, 2});
    EXPECT_EQ(from_columnar_text(to_columnar_text(t)), t);
}

TEST(Tensor, TooLargeThrows) {
    EXPECT_THROW(Tensor::zeros({1024, 1025}), TensorTooLarge);
    auto q = WireType::quantum(8);
    Diagram wide = identity(std::vector<WireType>(3, q));
    EXPECT_THROW(evaluate(wide), TensorTooLarge);
}

TEST(Evaluate, CopySpiderMatrix) {
    Matrix m = diagram_matrix(copy_spider(2));
    Matrix expected = Matrix::Zero(4, 2);
    expected(0, 0) = 1.0;
    expected(3, 1) = 1.0;
    EXPECT_LE((m - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Evaluate, MatrixBoxComposition) {
    Rng rng(3);
    Matrix a = random_complex_matrix(3, 2, rng), b = random_complex_matrix(2, 3, rng);
    Diagram da = matrix_box("A", 2, 3, testing::row_major(a));
    Diagram db = matrix_box("B", 3, 2, testing::row_major(b));
    Matrix got = diagram_matrix(compose_seq(da, db));
    EXPECT_LE((got - b * a).cwiseAbs().maxCoeff(), 1e-12);
    Matrix kron = diagram_matrix(compose_par(da, db));
    Matrix oracle(6, 6);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 2; j++) oracle.block(i * 2, j * 3, 2, 3) = a(i, j) * b;
    }
    EXPECT_LE((kron - oracle).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Evaluate, CircleIsDimension) {
    EXPECT_EQ(evaluate(circle(WireType::classical(3)))[0], Complex(3.0));
    EXPECT_EQ(evaluate(circle(WireType::quantum(3)))[0], Complex(9.0));
}

TEST(Evaluate, ContractionOrderIrrelevant) {
    Rng rng(4);
    for (int k = 0; k < 40; k++) {
        Diagram d = testing::random_spider_diagram(rng, 2 + k % 2);
        Tensor greedy = evaluate(d);
        for (int r = 0; r < 3; r++) {
            Tensor other = evaluate(d, random_plan(d, rng));
            EXPECT_LE(greedy.max_abs_diff(other), 1e-9);
        }
    }
}

TEST(Evaluate, GreedyPlanIsDeterministic) {
    Rng rng(5);
    Diagram d = testing::random_spider_diagram(rng, 2, {6, 4, 3, 0.3, true});
    ContractionPlan a = contract_order(d), b = contract_order(d);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); i++) {
        EXPECT_EQ(a.steps[i].left, b.steps[i].left);
        EXPECT_EQ(a.steps[i].right, b.steps[i].right);
    }
    EXPECT_EQ(a.cost, b.cost);
    EXPECT_GT(naive_cost(d), 0.0);
}

TEST(Compare, StrictAndUpToScalar) {
    Tensor t({2}, {1, Complex(0, 2)});
    Tensor s = t.scaled(Complex(0, -3));
    EXPECT_FALSE(compare_tensors(t, s).equal);
    NumericComparison c = compare_tensors(t, s, {1e-9, ScalarMode::UpToScalar});
    EXPECT_TRUE(c.equal);
    EXPECT_NEAR(std::abs(c.lambda - Complex(0, -3)), 0.0, 1e-12);
    Tensor zero = Tensor::zeros({2});
    EXPECT_TRUE(compare_tensors(zero, zero, {1e-9, ScalarMode::UpToScalar}).equal);
    EXPECT_FALSE(compare_tensors(zero, t, {1e-9, ScalarMode::UpToScalar}).equal);
    EXPECT_FALSE(compare_tensors(t, zero, {1e-9, ScalarMode::UpToScalar}).equal);
    EXPECT_THROW(compare_tensors(t, Tensor::zeros({3})), BoundaryMismatch);
}

TEST(Compare, BoundaryMismatchOnDiagrams) {
    EXPECT_THROW(compare_numeric(copy_spider(2), delete_spider(2)), BoundaryMismatch);
}

}  // namespace
}  // namespace cqd
