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

#ifndef CQD_TOOLS_KET_HPP
#define CQD_TOOLS_KET_HPP

#include <string>
#include <vector>

#include "cqd/wire.hpp"

namespace cqd::tools {

/// Parses a sum of weighted qubit kets such as "0.5 |001> + |010> - 2|100>"
/// into 2^n amplitudes. A term may also close with '|'. Throws SyntaxError.
std::vector<Complex> parse_ket_sum(const std::string &text, int &qubits);

}  // namespace cqd::tools

#endif
