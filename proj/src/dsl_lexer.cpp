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

#include <cctype>
#include <cstdio>

#include "dsl_internal.hpp"

namespace cqd {

std::string SourceSpan::str() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
}

std::string Diagnostic::str() const {
    return span.str() + ": " + kind + ": " + message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic> &ds) {
    std::string out;
    for (const auto &d : ds) {
        if (!out.empty()) out += "\n";
        out += d.str();
    }
    return out;
}

}  // namespace

DslError::DslError(std::vector<Diagnostic> diagnostics)
    : Error(diagnostics.empty() ? "SyntaxError" : diagnostics.front().kind, join_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {
}

namespace dsl {

std::string format_double(double x) {
    if (x == 0.0) return "0";  // also folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<Token> lex(std::string_view text, const std::string &file, std::vector<Diagnostic> &errors) {
    std::vector<Token> out;
    int line = 1, col = 1, depth = 0;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; k++) {
            if (text[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
            i++;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        SourceSpan span{file, line, col};
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (c == '\n') {
            if (depth == 0 && (out.empty() || out.back().kind != Tok::Newline)) out.push_back({Tok::Newline, "\\n", span});
            advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) j++;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), span});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            bool is_float = false;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
            if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                is_float = true;
                j++;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
            }
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < text.size() && (text[k] == '+' || text[k] == '-')) k++;
                if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                    is_float = true;
                    j = k;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
                }
            }
            out.push_back({is_float ? Tok::Float : Tok::Int, std::string(text.substr(i, j - i)), span});
            advance(j - i);
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"' && text[j] != '\n') j++;
            if (j >= text.size() || text[j] != '"') {
                errors.push_back({"SyntaxError", "unterminated string", span});
                advance(j - i);
                continue;
            }
            out.push_back({Tok::String, std::string(text.substr(i + 1, j - i - 1)), span});
            advance(j - i + 1);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::Punct, "->", span});
            advance(2);
            continue;
        }
        static const std::string_view punct = "()[]{},=@|;:.*/-+";
        if (punct.find(c) != std::string_view::npos) {
            if (c == '(' || c == '[' || c == '{') depth++;
            if ((c == ')' || c == ']' || c == '}') && depth > 0) depth--;
            out.push_back({Tok::Punct, std::string(1, c), span});
            advance(1);
            continue;
        }
        errors.push_back({"SyntaxError", std::string("unexpected character '") + c + "'", span});
        advance(1);
    }
    out.push_back({Tok::End, "end of input", {file, line, col}});
    return out;
}

}  // namespace dsl
}  // namespace cqd
