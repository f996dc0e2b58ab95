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

#ifndef CQD_REPORT_HPP
#define CQD_REPORT_HPP

#include <string>

#include "cqd/phases.hpp"
#include "cqd/protocols.hpp"
#include "cqd/rewrite.hpp"
#include "json.hpp"

namespace cqd {

nlohmann::json to_json(const Tensor &t);
nlohmann::json to_json(const RewriteTrace &trace);
nlohmann::json to_json(const ProtocolReport &report);
nlohmann::json to_json(const GhzPhaseReport &report);

std::string format_trace(const RewriteTrace &trace);
std::string format_report(const ProtocolReport &report);

}  // namespace cqd

#endif
