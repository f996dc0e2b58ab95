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

#include "cqd/report.hpp"

#include <cstdio>
#include <sstream>

namespace cqd {
namespace {

std::string hex64(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

nlohmann::json to_json(const Tensor &t) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (std::size_t i = 0; i < t.size(); i++) {
        re.push_back(t[i].real());
        im.push_back(t[i].imag());
    }
    return {{"shape", t.shape()}, {"re", re}, {"im", im}};
}

nlohmann::json to_json(const RewriteTrace &trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto &s : trace.steps) {
        steps.push_back({{"rule", s.rule},
                         {"nodes", s.match.nodes},
                         {"ports", s.match.ports},
                         {"result_hash", hex64(s.result_hash)}});
    }
    return steps;
}

nlohmann::json to_json(const ProtocolReport &report) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto &c : report.claims) claims.push_back({{"name", c.name}, {"pass", c.pass}, {"deviation", c.deviation}});
    nlohmann::json j = {{"protocol", report.protocol},
                        {"dim", report.dim},
                        {"pass", report.pass()},
                        {"max_deviation", report.max_deviation()},
                        {"claims", claims}};
    if (report.trace) j["trace"] = to_json(*report.trace);
    return j;
}

nlohmann::json to_json(const GhzPhaseReport &report) {
    return {{"total_angles", report.total.angles()},
            {"fused", report.fused},
            {"fused_by_rewriting", report.fused_by_rewriting},
            {"permutation_invariant", report.permutation_invariant},
            {"measurement_erases", report.measurement_erases},
            {"max_deviation", report.max_deviation},
            {"pass", report.pass()}};
}

std::string format_trace(const RewriteTrace &trace) {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.steps.size(); i++) {
        const auto &s = trace.steps[i];
        out << i + 1 << ". " << s.rule << " at nodes [";
        for (std::size_t k = 0; k < s.match.nodes.size(); k++) out << (k ? ", " : "") << s.match.nodes[k];
        out << "]";
        if (!s.match.ports.empty()) {
            out << " ports [";
            for (std::size_t k = 0; k < s.match.ports.size(); k++) out << (k ? ", " : "") << s.match.ports[k];
            out << "]";
        }
        out << " -> " << hex64(s.result_hash) << "\n";
    }
    return out.str();
}

std::string format_report(const ProtocolReport &report) {
    std::ostringstream out;
    out << report.protocol << " (D = " << report.dim << "): " << (report.pass() ? "pass" : "FAIL") << "\n";
    for (const auto &c : report.claims) {
        out << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name << "  deviation " << sci(c.deviation) << "\n";
    }
    return out.str();
}

}  // namespace cqd
