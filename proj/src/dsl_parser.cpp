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

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "cqd/dsl.hpp"
#include "dsl_internal.hpp"

namespace cqd {
namespace {

using dsl::Tok;
using dsl::Token;

struct ParseFail {
    Diagnostic diag;
};

const std::set<std::string> &keywords() {
    static const std::set<std::string> k = {
        "quantum", "classical", "tensor", "spider", "phase", "box",   "cup",    "cap",   "swap",    "id",
        "measure", "encode",    "delete", "copy",   "discard", "mixed", "uniform", "bell", "ghz",     "value",
        "effect",  "scalar",    "double", "dagger", "transpose", "conj", "empty",  "graph", "pi",      "family",
        "node",    "edge",      "doubled"};
    return k;
}

const std::vector<std::pair<std::string, ExprKind>> &simple_dim_generators() {
    static const std::vector<std::pair<std::string, ExprKind>> g = {
        {"measure", ExprKind::Measure}, {"encode", ExprKind::Encode},   {"delete", ExprKind::Delete},
        {"copy", ExprKind::Copy},       {"mixed", ExprKind::Mixed},     {"uniform", ExprKind::Uniform},
        {"bell", ExprKind::Bell}};
    return g;
}

const std::vector<std::pair<std::string, ExprKind>> &wrapper_generators() {
    static const std::vector<std::pair<std::string, ExprKind>> g = {{"double", ExprKind::Double},
                                                                     {"dagger", ExprKind::Dagger},
                                                                     {"transpose", ExprKind::Transpose},
                                                                     {"conj", ExprKind::Conjugate}};
    return g;
}

class Parser {
   public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {
    }

    DiagramDoc document(std::vector<Diagnostic> &errors) {
        DiagramDoc doc;
        std::set<std::string> names;
        skip_newlines();
        while (!at_end()) {
            try {
                Declaration d = declaration();
                if (!d.name.empty() && names.count(d.name)) {
                    errors.push_back({"SyntaxError", "'" + d.name + "' is declared twice", d.span});
                }
                names.insert(d.name);
                doc.declarations.push_back(std::move(d));
                if (is_punct(";")) {
                    advance();
                } else if (peek().kind == Tok::Newline) {
                    skip_newlines();
                } else if (!at_end()) {
                    fail("expected end of line");
                }
            } catch (const ParseFail &f) {
                errors.push_back(f.diag);
                while (!at_end() && peek().kind != Tok::Newline) advance();
            }
            skip_newlines();
        }
        return doc;
    }

   private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token &peek(std::size_t k = 0) const {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }
    const Token &advance() {
        const Token &t = peek();
        if (pos_ + 1 < toks_.size()) pos_++;
        return t;
    }
    bool at_end() const {
        return peek().kind == Tok::End;
    }
    bool is_punct(const char *p, std::size_t k = 0) const {
        return peek(k).kind == Tok::Punct && peek(k).text == p;
    }
    bool is_word(const char *w, std::size_t k = 0) const {
        return peek(k).kind == Tok::Ident && peek(k).text == w;
    }
    void skip_newlines() {
        while (peek().kind == Tok::Newline) advance();
    }
    [[noreturn]] void fail(const std::string &what) const {
        const Token &t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : t.kind == Tok::Newline ? "end of line" : "'" + t.text + "'";
        throw ParseFail{{"SyntaxError", what + ", found " + found, t.span}};
    }
    void expect_punct(const char *p) {
        if (!is_punct(p)) fail(std::string("expected '") + p + "'");
        advance();
    }
    void expect_word(const char *w) {
        if (!is_word(w)) fail(std::string("expected '") + w + "'");
        advance();
    }
    std::string identifier(const char *what) {
        if (peek().kind != Tok::Ident || keywords().count(peek().text)) fail(std::string("expected ") + what);
        return advance().text;
    }
    long integer() {
        if (peek().kind != Tok::Int) fail("expected an integer");
        const Token &t = advance();
        try {
            return std::stol(t.text);
        } catch (const std::exception &) {
            throw ParseFail{{"SyntaxError", "integer out of range", t.span}};
        }
    }
    double number() {
        double sign = 1.0;
        if (is_punct("-") || is_punct("+")) sign = advance().text == "-" ? -1.0 : 1.0;
        if (peek().kind != Tok::Int && peek().kind != Tok::Float) fail("expected a number");
        return sign * std::strtod(advance().text.c_str(), nullptr);
    }
    bool at_number() const {
        std::size_t k = (is_punct("-") || is_punct("+")) ? 1 : 0;
        return peek(k).kind == Tok::Int || peek(k).kind == Tok::Float;
    }
    double unsigned_number() {
        if (peek().kind != Tok::Int && peek().kind != Tok::Float) fail("expected a number");
        return std::strtod(advance().text.c_str(), nullptr);
    }
    double angle() {
        double sign = 1.0;
        if (is_punct("-")) {
            advance();
            sign = -1.0;
        }
        double value;
        if (is_word("pi")) {
            advance();
            value = std::numbers::pi;
        } else {
            value = unsigned_number();
            if (is_punct("*")) {
                advance();
                expect_word("pi");
                value *= std::numbers::pi;
            }
        }
        if (is_punct("/")) {
            advance();
            value /= unsigned_number();
        }
        return sign * value;
    }
    TypeName type_name() {
        SourceSpan span = peek().span;
        return {identifier("a wire type"), span};
    }
    std::vector<TypeName> type_list() {
        std::vector<TypeName> out;
        expect_punct("(");
        if (!is_punct(")")) {
            out.push_back(type_name());
            while (is_punct(",")) {
                advance();
                out.push_back(type_name());
            }
        }
        expect_punct(")");
        return out;
    }
    std::vector<double> angle_list() {
        std::vector<double> out;
        expect_punct("(");
        if (!is_punct(")")) {
            out.push_back(angle());
            while (is_punct(",")) {
                advance();
                out.push_back(angle());
            }
        }
        expect_punct(")");
        return out;
    }

    Declaration declaration() {
        Declaration d;
        d.span = peek().span;
        if (!(peek().kind == Tok::Ident && is_punct("=", 1))) {
            d.kind = Declaration::Kind::Diagram;
            d.expr = expr();
            return d;
        }
        d.name = identifier("a declaration name");
        expect_punct("=");
        if (is_word("quantum") || is_word("classical")) {
            bool q = advance().text == "quantum";
            SourceSpan span = peek().span;
            long dim = integer();
            if (dim < 1) throw ParseFail{{"SyntaxError", "dimension must be positive", span}};
            d.kind = Declaration::Kind::Wire;
            d.wire = q ? WireType::quantum(static_cast<int>(dim)) : WireType::classical(static_cast<int>(dim));
        } else if (is_word("tensor")) {
            advance();
            d.kind = Declaration::Kind::Tensor;
            d.tensor = tensor_literal();
        } else {
            d.kind = Declaration::Kind::Diagram;
            d.expr = expr();
        }
        return d;
    }

    Tensor tensor_literal() {
        std::vector<std::size_t> shape;
        SourceSpan span = peek().span;
        expect_punct("[");
        if (!is_punct("]")) {
            shape.push_back(static_cast<std::size_t>(integer()));
            while (is_punct(",")) {
                advance();
                shape.push_back(static_cast<std::size_t>(integer()));
            }
        }
        expect_punct("]");
        std::vector<Complex> data;
        expect_punct("(");
        if (!is_punct(")")) {
            while (true) {
                double re = number();
                double im = at_number() ? number() : 0.0;
                data.emplace_back(re, im);
                if (!is_punct(",")) break;
                advance();
            }
        }
        expect_punct(")");
        if (shape_product(shape) != data.size()) {
            throw ParseFail{{"ShapeMismatch",
                             "tensor has " + std::to_string(data.size()) + " entries, shape needs " +
                                 std::to_string(shape_product(shape)),
                             span}};
        }
        return Tensor(shape, data);
    }

    // A ';' followed by `name =` separates declarations instead.
    bool at_statement_break() const {
        return is_punct(";") && peek(1).kind == Tok::Ident && is_punct("=", 2);
    }

    ExprPtr expr() {
        SourceSpan span = peek().span;
        std::vector<ExprPtr> parts{par()};
        while (is_punct(";") && !at_statement_break()) {
            advance();
            parts.push_back(par());
        }
        if (parts.size() == 1) return parts.front();
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::Seq;
        e->span = span;
        e->children = std::move(parts);
        return e;
    }

    ExprPtr par() {
        SourceSpan span = peek().span;
        std::vector<ExprPtr> parts{atom()};
        while (is_punct("|")) {
            advance();
            parts.push_back(atom());
        }
        if (parts.size() == 1) return parts.front();
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::Par;
        e->span = span;
        e->children = std::move(parts);
        return e;
    }

    ExprPtr atom() {
        if (is_punct("(")) {
            advance();
            ExprPtr inner = expr();
            expect_punct(")");
            return inner;
        }
        if (peek().kind != Tok::Ident) fail("expected an expression");
        auto e = std::make_shared<Expr>();
        e->span = peek().span;
        const std::string word = peek().text;
        if (!keywords().count(word)) {
            advance();
            e->kind = ExprKind::Ref;
            e->name = word;
            return e;
        }
        for (const auto &[kw, kind] : simple_dim_generators()) {
            if (word == kw) {
                advance();
                e->kind = kind;
                e->ints = {integer()};
                return e;
            }
        }
        for (const auto &[kw, kind] : wrapper_generators()) {
            if (word == kw) {
                advance();
                e->kind = kind;
                expect_punct("(");
                e->children = {expr()};
                expect_punct(")");
                return e;
            }
        }
        advance();
        if (word == "spider") {
            e->kind = ExprKind::Spider;
            if (peek().kind == Tok::Int) {
                long n = integer();
                expect_punct("->");
                long m = integer();
                expect_punct("@");
                e->ints = {n, m};
                e->inputs = {type_name()};
            } else {
                e->inputs = type_list();
                expect_punct("->");
                e->outputs = type_list();
            }
            while (true) {
                if (is_word("phase")) {
                    advance();
                    e->phase = angle_list();
                } else if (is_word("double")) {
                    advance();
                    e->flag = true;
                } else if (is_word("family")) {
                    advance();
                    e->family = static_cast<int>(integer());
                } else {
                    break;
                }
            }
        } else if (word == "phase") {
            e->kind = ExprKind::Phase;
            e->phase = angle_list();
            expect_punct("@");
            e->inputs = {type_name()};
        } else if (word == "box") {
            e->kind = ExprKind::Box;
            if (peek().kind == Tok::String) {
                e->name = advance().text;
            } else {
                e->name = identifier("a box name");
            }
            e->inputs = type_list();
            expect_punct("->");
            e->outputs = type_list();
            expect_punct("=");
            e->payload = identifier("a tensor name");
            if (is_word("doubled")) {
                advance();
                e->flag = true;
            }
        } else if (word == "cup" || word == "cap" || word == "id" || word == "discard") {
            e->kind = word == "cup" ? ExprKind::Cup : word == "cap" ? ExprKind::Cap : word == "id" ? ExprKind::Id
                                                                                                   : ExprKind::Discard;
            e->inputs = {type_name()};
        } else if (word == "swap") {
            e->kind = ExprKind::Swap;
            TypeName a = type_name();
            e->inputs = {a, type_name()};
        } else if (word == "ghz") {
            e->kind = ExprKind::Ghz;
            long d = integer();
            e->ints = {d, integer()};
        } else if (word == "value" || word == "effect") {
            e->kind = word == "value" ? ExprKind::Value : ExprKind::Effect;
            e->inputs = {type_name()};
            e->ints = {integer()};
        } else if (word == "scalar") {
            e->kind = ExprKind::Scalar;
            double re = number();
            double im = at_number() ? number() : 0.0;
            e->number = {re, im};
        } else if (word == "empty") {
            e->kind = ExprKind::Empty;
        } else if (word == "graph") {
            graph(*e);
        } else {
            throw ParseFail{{"SyntaxError", "'" + word + "' cannot start an expression", e->span}};
        }
        return e;
    }

    GraphEndpoint endpoint() {
        GraphEndpoint ep;
        if (peek().kind != Tok::Ident) fail("expected an endpoint such as in.0, out.1 or n2.0");
        const Token &t = advance();
        if (t.text == "in") {
            ep.kind = Endpoint::Kind::Input;
        } else if (t.text == "out") {
            ep.kind = Endpoint::Kind::Output;
        } else if (t.text.size() > 1 && t.text[0] == 'n' &&
                   t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
            ep.kind = Endpoint::Kind::Port;
            ep.node = std::stoul(t.text.substr(1));
        } else {
            throw ParseFail{{"SyntaxError", "bad endpoint '" + t.text + "'", t.span}};
        }
        expect_punct(".");
        ep.index = static_cast<std::size_t>(integer());
        return ep;
    }

    void graph(Expr &e) {
        e.kind = ExprKind::Graph;
        e.inputs = type_list();
        expect_punct("->");
        e.outputs = type_list();
        expect_punct("{");
        while (!is_punct("}")) {
            if (is_word("node")) {
                advance();
                e.children.push_back(atom());
            } else if (is_word("edge")) {
                advance();
                GraphEndpoint a = endpoint();
                e.edges.emplace_back(a, endpoint());
            } else {
                fail("expected 'node', 'edge' or '}'");
            }
        }
        expect_punct("}");
    }
};

bool same_types(const std::vector<TypeName> &a, const std::vector<TypeName> &b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i].name != b[i].name) return false;
    }
    return true;
}

}  // namespace

const Declaration *DiagramDoc::find(const std::string &name) const {
    for (const auto &d : declarations) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

bool structurally_equal(const Expr &a, const Expr &b) {
    if (a.kind != b.kind || a.name != b.name || a.payload != b.payload || !same_types(a.inputs, b.inputs) ||
        !same_types(a.outputs, b.outputs) || a.phase != b.phase || a.flag != b.flag || a.family != b.family ||
        a.ints != b.ints || a.number != b.number || a.edges != b.edges || a.children.size() != b.children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); i++) {
        if (!structurally_equal(*a.children[i], *b.children[i])) return false;
    }
    return true;
}

bool structurally_equal(const DiagramDoc &a, const DiagramDoc &b) {
    if (a.declarations.size() != b.declarations.size()) return false;
    for (std::size_t i = 0; i < a.declarations.size(); i++) {
        const auto &x = a.declarations[i];
        const auto &y = b.declarations[i];
        if (x.kind != y.kind || x.name != y.name) return false;
        switch (x.kind) {
            case Declaration::Kind::Wire:
                if (x.wire != y.wire) return false;
                break;
            case Declaration::Kind::Tensor:
                if (x.tensor != y.tensor) return false;
                break;
            case Declaration::Kind::Diagram:
                if (!structurally_equal(*x.expr, *y.expr)) return false;
                break;
        }
    }
    return true;
}

DiagramDoc parse_syntax(std::string_view text, const std::string &file) {
    std::vector<Diagnostic> errors;
    std::vector<Token> toks = dsl::lex(text, file, errors);
    DiagramDoc doc = Parser(std::move(toks)).document(errors);
    if (!errors.empty()) {
        std::stable_sort(errors.begin(), errors.end(), [](const Diagnostic &x, const Diagnostic &y) {
            return std::pair(x.span.line, x.span.column) < std::pair(y.span.line, y.span.column);
        });
        throw DslError(std::move(errors));
    }
    return doc;
}

DiagramDoc parse(std::string_view text, const std::string &file) {
    DiagramDoc doc = parse_syntax(text, file);
    elaborate(doc);
    return doc;
}

DiagramDoc parse_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DslError({{"IOError", "cannot read file", {path, 1, 1}}});
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

}  // namespace cqd
