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

#include <filesystem>
#include <numbers>

#include "cqd/dsl.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/generators.hpp"
#include "cqd/protocols.hpp"
#include "support.hpp"

namespace cqd {
namespace {

using testing::Rng;

Diagnostic first_error(const std::string &text) {
    try {
        parse(text);
    } catch (const DslError &e) {
        return e.diagnostics().front();
    }
    ADD_FAILURE() << "no error for: " << text;
    return {};
}

std::size_t occurrences(const std::string &hay, const std::string &needle) {
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) n++;
    return n;
}

TEST(Parse, TeleportationSkeleton) {
    DiagramDoc doc = parse("q2 = quantum 2; tele = cup q2 | id q2 ; id q2 | cap q2");
    ASSERT_EQ(doc.declarations.size(), 2u);
    EXPECT_EQ(doc.declarations[1].expr->kind, ExprKind::Seq);
    Diagram d = elaborate(doc).get("tele");
    EXPECT_TRUE(isomorphic(d, identity(WireType::quantum(2)), ScalarMode::Strict));
}

TEST(Parse, SpiderCountForm) {
    DiagramDoc doc = parse("spider 2 -> 1 @ c2");
    Diagram d = elaborate(doc).last();
    ASSERT_EQ(d.nodes.size(), 1u);
    const auto &s = std::get<Spider>(d.nodes[0]);
    EXPECT_EQ(s.inputs, (std::vector<WireType>(2, WireType::classical(2))));
    EXPECT_EQ(s.outputs, (std::vector<WireType>{WireType::classical(2)}));
}

TEST(Parse, TruncatedSpiderIsSyntaxError) {
    Diagnostic d = first_error("spider 2 ->");
    EXPECT_EQ(d.kind, "SyntaxError");
    EXPECT_EQ(d.span.line, 1);
    EXPECT_EQ(d.span.column, 12);
}

TEST(Parse, ErrorSpansPointAtOffendingToken) {
    struct Case {
        std::string text;
        std::string token;
    };
    for (const Case &c : std::vector<Case>{{"x = @", "@"},
                                           {"x = spider 2 -> 1 @ c2 phase(0.5, )", ")"},
                                           {"c = classical 2\ny = spider 1 -> 1 @ c phase(1) ] ", "]"},
                                           {"z = box \"B\" (c2) -> (c2) = 3", "3"}}) {
        Diagnostic d = first_error(c.text);
        EXPECT_EQ(d.kind, "SyntaxError") << c.text;
        std::size_t line_start = 0;
        for (int l = 1; l < d.span.line; l++) line_start = c.text.find('\n', line_start) + 1;
        std::size_t at = line_start + static_cast<std::size_t>(d.span.column - 1);
        ASSERT_LT(at, c.text.size()) << c.text;
        EXPECT_EQ(c.text.substr(at, c.token.size()), c.token) << c.text;
    }
}

TEST(Parse, UnknownNameCarriesSpan) {
    Diagnostic d = first_error("a = spider 1 -> 1 @ c2\nb = a ; missing");
    EXPECT_EQ(d.kind, "UnknownName");
    EXPECT_EQ(d.span.line, 2);
    EXPECT_EQ(d.span.column, 9);
    EXPECT_EQ(first_error("x = id qubit").kind, "UnknownName");
}

TEST(Parse, BoundaryMismatchCarriesSpan) {
    Diagnostic d = first_error("x = copy 2 ; measure 2");
    EXPECT_EQ(d.kind, "BoundaryMismatch");
    EXPECT_EQ(d.span.column, 14);
    EXPECT_EQ(first_error("x = spider 1 -> 1 @ c3 phase(1)").kind, "BoundaryMismatch");
}

TEST(Parse, CollectsSeveralErrors) {
    try {
        parse("a = spider 2 ->\nb = cup\nc = id c2");
        FAIL();
    } catch (const DslError &e) {
        EXPECT_EQ(e.diagnostics().size(), 2u);
        EXPECT_EQ(e.diagnostics()[1].span.line, 2);
    }
}

TEST(Parse, TensorShapeAndDuplicates) {
    EXPECT_EQ(first_error("t = tensor [2, 2] (1, 2, 3)").kind, "ShapeMismatch");
    EXPECT_EQ(first_error("a = empty\na = empty").kind, "SyntaxError");
    EXPECT_EQ(first_error("t = tensor [2] (1, 0)\nb = box \"B\" (c3) -> () = t").kind, "ShapeMismatch");
}

TEST(Parse, AngleForms) {
    DiagramDoc doc = parse("p = spider 0 -> 1 @ c5 phase(pi, -pi/2, 3*pi/4, 0.25)");
    const auto &phase = *doc.declarations[0].expr->phase;
    EXPECT_EQ(phase[0], std::numbers::pi);
    EXPECT_EQ(phase[1], -std::numbers::pi / 2);
    EXPECT_EQ(phase[2], 3 * std::numbers::pi / 4);
    EXPECT_EQ(phase[3], 0.25);
}

TEST(RoundTrip, GhzDeclaration) {
    DiagramDoc doc = parse("ghz3 = ghz 2 3\nalt = spider 0 -> 3 @ q2 double");
    DiagramDoc back = parse(print(doc));
    EXPECT_TRUE(structurally_equal(doc, back));
    EXPECT_TRUE(numeric_equal(elaborate(back).get("ghz3"), elaborate(back).get("alt")));
}

TEST(RoundTrip, PhasesKeepFullPrecision) {
    DiagramDoc doc = parse("p = spider 0 -> 1 @ q3 phase(0, pi/2)");
    DiagramDoc back = parse(print(doc));
    ASSERT_TRUE(structurally_equal(doc, back));
    EXPECT_EQ((*back.declarations[0].expr->phase)[1], std::numbers::pi / 2);
}

TEST(RoundTrip, RandomTenNodeDiagrams) {
    Rng rng(31);
    for (int k = 0; k < 50; k++) {
        testing::SpiderDiagramOptions opt;
        opt.max_nodes = 10;
        Diagram d = testing::random_spider_diagram(rng, 2 + k % 2, opt);
        while (d.nodes.size() < 10) d = testing::insert_identity_spider(d, rng);
        d.nodes.push_back(Scalar{Complex(0.1 * k, -1.0 / 3.0)});
        DiagramDoc doc = document_from_diagram("g", d);
        std::string text = print(doc);
        DiagramDoc back = parse(text);
        EXPECT_TRUE(structurally_equal(doc, back)) << text;
        EXPECT_EQ(print(back), text);
        Diagram e = elaborate(back).get("g");
        EXPECT_TRUE(isomorphic(d, e, ScalarMode::Strict, 1e-12)) << text;
        EXPECT_TRUE(numeric_equal(d, e));
    }
}

TEST(RoundTrip, BoxesAndValues) {
    ControlledUnitary cu = shift_clock_corrections(2);
    Diagram d = compose_par(controlled_box(cu), compose_par(quantum_value(2, 1), classical_effect(3, 2)));
    DiagramDoc doc = document_from_diagram("boxes", d);
    EXPECT_EQ(doc.declarations.size(), 2u);
    Diagram e = elaborate(parse(print(doc))).get("boxes");
    EXPECT_TRUE(numeric_equal(d, e));
}

TEST(RoundTrip, FixtureCorpus) {
    std::size_t n = 0;
    for (const auto &entry : std::filesystem::directory_iterator(CQD_FIXTURE_DIR)) {
        if (entry.path().extension() != ".sdg") continue;
        n++;
        DiagramDoc doc = parse_file(entry.path().string());
        DiagramDoc back = parse(print(doc));
        EXPECT_TRUE(structurally_equal(doc, back)) << entry.path();
    }
    EXPECT_GE(n, 5u);
}

TEST(RoundTrip, RandomDocuments) {
    Rng rng(32);
    for (int k = 0; k < 100; k++) {
        DiagramDoc doc = testing::random_document(rng);
        std::string text = print(doc);
        DiagramDoc back = parse(text);
        EXPECT_TRUE(structurally_equal(doc, back)) << text;
    }
}

TEST(Dot, BellState) {
    std::string dot = export_dot(bell_state(2));
    EXPECT_EQ(occurrences(dot, "shape=circle"), 1u);
    EXPECT_EQ(occurrences(dot, "shape=point"), 2u);
    EXPECT_NE(dot.find("black:white:black"), std::string::npos);
}

TEST(Dot, Teleportation) {
    std::string dot = export_dot(build_teleportation(shift_clock_corrections(2)));
    EXPECT_NE(dot.find("label=\"U\""), std::string::npos);
    EXPECT_NE(dot.find("label=\"U^dag\""), std::string::npos);
    EXPECT_NE(dot.find("in0 -- "), std::string::npos);
    EXPECT_NE(dot.find("penwidth=1"), std::string::npos);
}

TEST(Dot, EmptyDiagram) {
    EXPECT_EQ(export_dot(empty_diagram()), "graph \"diagram\" {\n}\n");
}

}  // namespace
}  // namespace cqd
