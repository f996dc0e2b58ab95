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

#include <sstream>

#include "cqd/dsl.hpp"
#include "dsl_internal.hpp"

namespace cqd {
namespace {

std::string node_id(const Endpoint &e) {
    switch (e.kind) {
        case Endpoint::Kind::Input: return "in" + std::to_string(e.index);
        case Endpoint::Kind::Output: return "out" + std::to_string(e.index);
        case Endpoint::Kind::Port: break;
    }
    return "n" + std::to_string(e.node);
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

const char *family_color(int family) {
    static const char *colors[] = {"#99dd99", "#ff8888", "#8888ff", "#dddd66"};
    return colors[static_cast<std::size_t>(family) % 4];
}

}  // namespace

std::string export_dot(const Diagram &d, const std::string &graph_name) {
    std::ostringstream out;
    out << "graph \"" << escape(graph_name) << "\" {\n";
    if (d.nodes.empty() && d.edges.empty()) {
        out << "}\n";
        return out.str();
    }
    out << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < d.inputs.size(); i++) out << "  in" << i << " [shape=point];\n";
    for (std::size_t i = 0; i < d.outputs.size(); i++) out << "  out" << i << " [shape=point];\n";
    for (std::size_t i = 0; i < d.nodes.size(); i++) {
        out << "  n" << i << " [";
        if (const auto *s = std::get_if<Spider>(&d.nodes[i])) {
            out << "shape=circle, style=filled, fillcolor=\"" << family_color(s->family) << "\", label=\"";
            if (s->phase && !s->phase->is_unit()) {
                const auto as = s->phase->angles();
                for (std::size_t k = 0; k < as.size(); k++) out << (k ? "," : "") << dsl::format_double(as[k]);
            }
            out << "\"";
            if (!s->single_headed()) out << ", penwidth=3";
        } else if (const auto *b = std::get_if<Box>(&d.nodes[i])) {
            out << "shape=box, label=\"" << escape(b->name) << "\"";
            if (b->flavor == BoxFlavor::Doubled) out << ", penwidth=3";
        } else if (const auto *v = std::get_if<Value>(&d.nodes[i])) {
            out << "shape=" << (v->effect ? "invtriangle" : "triangle") << ", label=\"" << v->index << "\"";
        } else {
            Complex z = std::get<Scalar>(d.nodes[i]).value;
            out << "shape=plaintext, label=\"" << dsl::format_double(z.real());
            if (z.imag() != 0.0) out << (z.imag() < 0 ? "" : "+") << dsl::format_double(z.imag()) << "i";
            out << "\"";
        }
        out << "];\n";
    }
    for (const auto &e : d.edges) {
        out << "  " << node_id(e.a) << " -- " << node_id(e.b) << " [";
        if (e.type.is_quantum()) {
            out << "color=\"black:white:black\", penwidth=2";
        } else {
            out << "penwidth=1";
        }
        out << ", tooltip=\"" << e.type.str() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace cqd
