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

#ifndef CQD_DSL_INTERNAL_HPP
#define CQD_DSL_INTERNAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cqd/dsl.hpp"

namespace cqd::dsl {

enum class Tok { Ident, Int, Float, String, Punct, Newline, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceSpan span;
};

/// Newlines inside brackets are dropped. Lexical problems are appended to
/// `errors` and the offending character is skipped.
std::vector<Token> lex(std::string_view text, const std::string &file, std::vector<Diagnostic> &errors);

std::string format_double(double x);

}  // namespace cqd::dsl

#endif
