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

#include "ket.hpp"

#include <cctype>
#include <cstdlib>

#include "cqd/errors.hpp"

namespace cqd::tools {

std::vector<Complex> parse_ket_sum(const std::string &text, int &qubits) {
    std::vector<std::pair<double, std::string>> terms;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++;
    };
    auto bad = [&](const std::string &what) {
        return SyntaxError("column " + std::to_string(i + 1) + ": " + what);
    };
    skip();
    while (i < text.size()) {
        double sign = 1.0;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1.0 : 1.0;
            i++;
            skip();
        } else if (!terms.empty()) {
            throw bad("expected '+' or '-' between terms");
        }
        double coef = 1.0;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
            char *end = nullptr;
            coef = std::strtod(text.c_str() + i, &end);
            i = static_cast<std::size_t>(end - text.c_str());
            skip();
            if (i < text.size() && text[i] == '*') {
                i++;
                skip();
            }
        }
        if (i >= text.size() || text[i] != '|') throw bad("expected a ket '|...>'");
        i++;
        std::size_t start = i;
        while (i < text.size() && (text[i] == '0' || text[i] == '1')) i++;
        std::string bits = text.substr(start, i - start);
        if (bits.empty()) throw bad("expected basis digits 0 or 1");
        if (i >= text.size() || (text[i] != '>' && text[i] != '|')) throw bad("expected '>'");
        i++;
        terms.emplace_back(sign * coef, bits);
        skip();
    }
    if (terms.empty()) throw SyntaxError("empty state");
    qubits = static_cast<int>(terms.front().second.size());
    if (qubits > 20) throw SyntaxError("too many qubits");
    std::vector<Complex> amps(std::size_t{1} << qubits, 0.0);
    for (const auto &[c, bits] : terms) {
        if (static_cast<int>(bits.size()) != qubits) throw SyntaxError("kets have different lengths");
        amps[std::stoul(bits, nullptr, 2)] += c;
    }
    return amps;
}

}  // namespace cqd::tools
