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

#include "cqd/diagram.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"
#include "cqd/linalg.hpp"
#include "support.hpp"

namespace cqd {
namespace {

using testing::Rng;

const WireType c2 = WireType::classical(2);
const WireType q2 = WireType::quantum(2);

TEST(Diagram, YankingIsStructural) {
    Diagram zigzag = compose_seq(compose_par(cup(q2), identity(q2)), compose_par(identity(q2), cap(q2)));
    EXPECT_TRUE(isomorphic(zigzag, identity(q2), ScalarMode::Strict));
    EXPECT_TRUE(zigzag.nodes.empty());
}

TEST(Diagram, ValidateRejectsDanglingPorts) {
    Diagram d = copy_spider(2);
    d.edges.pop_back();
    EXPECT_THROW(d.validate(), InvalidDiagram);
    Diagram typed = copy_spider(2);
    typed.edges[0].type = q2;
    EXPECT_THROW(typed.validate(), InvalidDiagram);
}

TEST(Diagram, ComposeChecksBoundaries) {
    EXPECT_THROW(compose_seq(copy_spider(2), identity(q2)), BoundaryMismatch);
}

TEST(Diagram, ComposeIsAssociative) {
    Rng rng(10);
    Diagram a = matrix_box("A", 2, 3, testing::row_major(random_complex_matrix(3, 2, rng)));
    Diagram b = matrix_box("B", 3, 3, testing::row_major(random_complex_matrix(3, 3, rng)));
    Diagram c = matrix_box("C", 3, 2, testing::row_major(random_complex_matrix(2, 3, rng)));
    EXPECT_TRUE(isomorphic(compose_seq(compose_seq(a, b), c), compose_seq(a, compose_seq(b, c)), ScalarMode::Strict));
}

TEST(Diagram, DaggerMatchesAdjoint) {
    Rng rng(11);
    for (int k = 0; k < 20; k++) {
        Diagram d = testing::random_spider_diagram(rng, 2);
        Matrix m = diagram_matrix(d);
        EXPECT_LE((diagram_matrix(dagger(d)) - m.adjoint()).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LE((diagram_matrix(transpose(d)) - m.transpose()).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LE((diagram_matrix(conjugate(d)) - m.conjugate()).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_EQ(dagger(dagger(d)), d);
    }
}

TEST(Diagram, DaggerOfBox) {
    Rng rng(12);
    Matrix a = random_complex_matrix(3, 2, rng);
    Diagram d = dagger(matrix_box("A", 2, 3, testing::row_major(a)));
    EXPECT_LE((diagram_matrix(d) - a.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(std::get<Box>(d.nodes[0]).name, "A^dag");
    EXPECT_EQ(std::get<Box>(dagger(d).nodes[0]).name, "A");
}

TEST(Diagram, DoublingMatchesDoubledTensor) {
    Rng rng(13);
    for (int k = 0; k < 20; k++) {
        testing::SpiderDiagramOptions opt;
        opt.allow_bastards = false;
        Diagram d = testing::random_spider_diagram(rng, 2, opt);
        bool plain = d.is_plain();
        if (!plain) {
            EXPECT_THROW(double_diagram(d), NotPlain);
            continue;
        }
        Tensor doubled = evaluate(double_diagram(d));
        Tensor oracle = double_tensor(evaluate(d));
        EXPECT_LE(doubled.max_abs_diff(oracle), 1e-9);
    }
}

TEST(Diagram, PlugWiresSelectedPorts) {
    // Plug output 1 of copy into the input of a delete: one copy is dropped.
    Diagram d = plug(copy_spider(2), delete_spider(2), {1}, {0});
    EXPECT_TRUE(numeric_equal(d, identity(c2)));
    EXPECT_THROW(plug(copy_spider(2), delete_spider(2), {2}, {0}), BoundaryMismatch);
}

TEST(Diagram, PermuteBoundary) {
    Diagram s = permute_boundary(identity(std::vector<WireType>{c2, q2}), {1, 0}, {1, 0});
    EXPECT_EQ(s.inputs, (std::vector<WireType>{q2, c2}));
    EXPECT_TRUE(numeric_equal(s, identity(std::vector<WireType>{q2, c2})));
}

TEST(Diagram, SwapIsInvolution) {
    Diagram twice = compose_seq(swap(c2, q2), swap(q2, c2));
    EXPECT_TRUE(isomorphic(twice, identity(std::vector<WireType>{c2, q2}), ScalarMode::Strict));
}

TEST(Isomorphism, InvariantUnderRelabelling) {
    Rng rng(14);
    for (int k = 0; k < 50; k++) {
        Diagram d = testing::random_spider_diagram(rng, 2 + k % 2);
        Diagram e = testing::shuffle_nodes(d, rng);
        EXPECT_TRUE(isomorphic(d, e, ScalarMode::Strict));
        EXPECT_EQ(structural_hash(d), structural_hash(d));
    }
}

TEST(Isomorphism, DistinguishesPhasesAndScalars) {
    Diagram a = phase_gate_diagram(PhaseVector::from_angles({0.3}));
    Diagram b = phase_gate_diagram(PhaseVector::from_angles({0.4}));
    EXPECT_FALSE(isomorphic(a, b, ScalarMode::Strict));
    Diagram s = compose_par(a, scalar(2.0));
    EXPECT_FALSE(isomorphic(a, s, ScalarMode::Strict));
    EXPECT_TRUE(isomorphic(a, s, ScalarMode::UpToScalar));
}

TEST(Generators, BellAndGhz) {
    // The GHZ state is sum_{ij} |iii><jjj| on doubled legs.
    Tensor t = evaluate(ghz_state(2, 3));
    for (std::size_t i = 0; i < t.size(); i++) {
        auto idx = t.multi_index(i);
        Complex expect = idx[0] == idx[1] && idx[1] == idx[2] ? 1.0 : 0.0;
        EXPECT_EQ(t[i], expect) << i;
    }
    Diagram half = compose_seq(bell_state(2), compose_par(discard(q2), identity(q2)));
    EXPECT_TRUE(numeric_equal(half, maximally_mixed(2)));
}

TEST(Generators, DiscardRejectsClassical) {
    EXPECT_THROW(discard(c2), WrongKind);
}

}  // namespace
}  // namespace cqd
