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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cqd/cq.hpp"
#include "cqd/dsl.hpp"
#include "cqd/entanglement.hpp"
#include "cqd/evaluate.hpp"
#include "cqd/phases.hpp"
#include "cqd/protocols.hpp"
#include "cqd/report.hpp"
#include "cqd/rewrite.hpp"
#include "json.hpp"
#include "ket.hpp"

namespace {

using cqd::Diagram;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Options {
    double tol = 1e-9;
    std::string mode = "strict";
    std::uint64_t seed = 0;
    bool json = false;
    bool trace = false;
};

cqd::ScalarMode scalar_mode(const Options &o) {
    return o.mode == "up-to-scalar" ? cqd::ScalarMode::UpToScalar : cqd::ScalarMode::Strict;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// FILE or FILE:NAME; without a name the last diagram of the file is used.
Diagram load(const std::string &spec) {
    std::string path = spec, name;
    auto colon = spec.rfind(':');
    if (colon != std::string::npos && !std::filesystem::exists(spec)) {
        path = spec.substr(0, colon);
        name = spec.substr(colon + 1);
    }
    cqd::ElaboratedDoc doc = cqd::elaborate(cqd::parse_file(path));
    return name.empty() ? doc.last() : doc.get(name);
}

void emit(const Options &o, const json &j, const std::string &text) {
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int verdict(bool ok) {
    return ok ? kOk : kFalse;
}

int cmd_normalize(const Options &o, const std::string &file, bool randomized) {
    Diagram d = load(file);
    cqd::NormalizeResult nf;
    if (randomized) {
        std::mt19937_64 rng(o.seed);
        nf = cqd::normalize_randomized(d, rng);
    } else {
        nf = cqd::normalize(d);
    }
    std::string text = cqd::print(cqd::document_from_diagram("normal", nf.diagram));
    auto [a, b, c] = cqd::termination_measure(nf.diagram);
    json j = {{"diagram", text}, {"steps", nf.trace.steps.size()}, {"measure", {a, b, c}}};
    std::string out = text;
    if (o.trace) {
        j["trace"] = cqd::to_json(nf.trace);
        out += "# trace\n" + cqd::format_trace(nf.trace);
    }
    emit(o, j, out);
    return kOk;
}

int cmd_eval(const Options &o, const std::string &file) {
    Diagram d = load(file);
    cqd::Tensor t = cqd::evaluate(d);
    emit(o, cqd::to_json(t), cqd::to_columnar_text(t));
    return kOk;
}

int cmd_check_equal(const Options &o, const std::string &a, const std::string &b) {
    Diagram da = load(a), db = load(b);
    auto numeric = cqd::compare_numeric(da, db, {o.tol, scalar_mode(o)});
    auto rewriting = cqd::rewrite_equal(da, db, scalar_mode(o), o.tol);
    json j = {{"equal", numeric.equal},
              {"deviation", numeric.deviation},
              {"mode", o.mode},
              {"rewriting", {{"equal", rewriting.equal}, {"delegated", rewriting.delegated}}}};
    if (scalar_mode(o) == cqd::ScalarMode::UpToScalar) j["lambda"] = {numeric.lambda.real(), numeric.lambda.imag()};
    std::string text = std::string(numeric.equal ? "equal" : "not equal") + " (" + o.mode + ", deviation " +
                       sci(numeric.deviation) + ")\nrewriting: " + (rewriting.equal ? "equal" : "not equal") +
                       (rewriting.delegated ? " (decided numerically)" : " (normal forms)") + "\n";
    emit(o, j, text);
    return verdict(numeric.equal);
}

int cmd_flag(const Options &o, const std::string &what, bool ok) {
    emit(o, {{what, ok}}, what + ": " + (ok ? "yes" : "no") + "\n");
    return verdict(ok);
}

int cmd_naimark(const Options &o, const std::string &file) {
    Diagram povm = load(file);
    auto r = cqd::naimark_dilate(povm, o.tol);
    bool ok = r.isometry_defect <= o.tol && r.reconstruction_error <= o.tol;
    json j = {{"pass", ok},
              {"outcomes", povm.outputs.at(0).base_dim},
              {"isometry_defect", r.isometry_defect},
              {"reconstruction_error", r.reconstruction_error}};
    std::string text = std::string("naimark dilation: ") + (ok ? "pass" : "FAIL") + "\n  isometry defect " +
                       sci(r.isometry_defect) + "\n  reconstruction error " + sci(r.reconstruction_error) + "\n";
    emit(o, j, text);
    return verdict(ok);
}

int cmd_classify(const Options &o, std::string state, const std::string &file) {
    if (state.empty()) {
        if (file.empty()) throw CLI::ValidationError("classify-slocc", "give --state or a file");
        std::ifstream in(file);
        if (!in) throw cqd::SyntaxError("cannot read " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        state = ss.str();
    }
    int qubits = 0;
    auto amps = cqd::tools::parse_ket_sum(state, qubits);
    if (qubits != 3) throw cqd::WrongSignature("classify-slocc takes a three-qubit state");
    double norm = 0.0;
    for (auto a : amps) norm += std::norm(a);
    if (norm <= 0.0) throw cqd::NotNormalized("the zero vector has no class");
    for (auto &a : amps) a /= std::sqrt(norm);
    auto cls = cqd::slocc_classify_3q(amps);
    auto ranks = cqd::local_ranks(amps);
    json j = {{"class", cqd::slocc_label(cls)}, {"local_ranks", ranks}, {"three_tangle", cqd::three_tangle(amps)}};
    emit(o, j, cqd::slocc_label(cls) + "\n");
    return kOk;
}

int cmd_protocol(const Options &o, const std::string &name, int dim, const std::string &fixture) {
    if (dim < 2 || dim > 4) throw CLI::ValidationError("--dim", "supported dimensions are 2 to 4");
    cqd::ControlledUnitary cu = fixture == "identity"
                                    ? cqd::constant_corrections(dim, cqd::Matrix::Identity(dim, dim))
                                    : cqd::shift_clock_corrections(dim);
    cqd::ProtocolReport r;
    if (name == "teleport") {
        r = cqd::verify_teleportation(cu, std::nullopt, o.tol);
    } else if (name == "dense-coding") {
        r = cqd::verify_dense_coding(cu, o.tol);
    } else {
        r = cqd::verify_entanglement_swap(cu, o.tol);
    }
    std::string text = cqd::format_report(r);
    json j = cqd::to_json(r);
    if (!o.trace) {
        j.erase("trace");
    } else if (r.trace) {
        text += "trace:\n" + cqd::format_trace(*r.trace);
    }
    emit(o, j, text);
    return verdict(r.pass());
}

cqd::PhaseVector random_phase(int dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    std::vector<double> angles;
    for (int k = 1; k < dim; k++) angles.push_back(u(rng));
    return cqd::PhaseVector::from_angles(angles);
}

int cmd_phase_demo(const Options &o, int dim) {
    if (dim < 2 || dim > 4) throw CLI::ValidationError("--dim", "supported dimensions are 2 to 4");
    std::mt19937_64 rng(o.seed);
    cqd::PhaseVector a = random_phase(dim, rng), b = random_phase(dim, rng), c = random_phase(dim, rng);
    auto r = cqd::ghz_phase_fusion_demo(a, b, c, o.tol);
    json j = cqd::to_json(r);
    j["inputs"] = {a.angles(), b.angles(), c.angles()};
    std::ostringstream text;
    text << "GHZ phase fusion (d = " << dim << ", seed " << o.seed << "): " << (r.pass() ? "pass" : "FAIL") << "\n";
    text << "  fused numerically     " << (r.fused ? "yes" : "no") << "\n";
    text << "  fused by rewriting    " << (r.fused_by_rewriting ? "yes" : "no") << "\n";
    text << "  permutation invariant " << (r.permutation_invariant ? "yes" : "no") << "\n";
    text << "  measurement erases    " << (r.measurement_erases ? "yes" : "no") << "\n";
    text << "  max deviation         " << sci(r.max_deviation) << "\n";
    emit(o, j, text.str());
    return verdict(r.pass());
}

int cmd_render(const std::string &file, const std::string &out) {
    std::string dot = cqd::export_dot(load(file));
    if (out.empty() || out == "-") {
        std::cout << dot;
        return kOk;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw cqd::SyntaxError("cannot write " + out);
    f << dot;
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rewriting and numeric checks for classical-quantum string diagrams", "cqd"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--tol", o.tol, "Numeric tolerance")->capture_default_str();
    app.add_option("--mode", o.mode, "Scalar mode")->check(CLI::IsMember({"strict", "up-to-scalar"}))->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for randomized commands")->capture_default_str();
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_flag("--trace", o.trace, "Print the rewrite trace");

    std::string file, file2, state, name, fixture = "shift-clock", out;
    bool randomized = false;
    int dim = 2;
    std::function<int()> action;

    auto *normalize = app.add_subcommand("normalize", "Normalize a diagram with the rewrite rules")->fallthrough();
    normalize->add_option("file", file, "FILE[:NAME]")->required();
    normalize->add_flag("--randomized", randomized, "Pick matches at random (uses --seed)");
    normalize->callback([&] { action = [&] { return cmd_normalize(o, file, randomized); }; });

    auto *eval = app.add_subcommand("eval", "Evaluate a diagram to its tensor")->fallthrough();
    eval->add_option("file", file, "FILE[:NAME]")->required();
    eval->callback([&] { action = [&] { return cmd_eval(o, file); }; });

    auto *equal = app.add_subcommand("check-equal", "Compare two diagrams")->fallthrough();
    equal->add_option("a", file, "FILE[:NAME]")->required();
    equal->add_option("b", file2, "FILE[:NAME]")->required();
    equal->callback([&] { action = [&] { return cmd_check_equal(o, file, file2); }; });

    auto *causal = app.add_subcommand("check-causal", "Check causality")->fallthrough();
    causal->add_option("file", file, "FILE[:NAME]")->required();
    causal->callback([&] { action = [&] { return cmd_flag(o, "causal", cqd::is_causal(load(file), o.tol)); }; });

    auto *vn = app.add_subcommand("check-vn", "Check the projection postulate of a measurement q -> (c, q)")->fallthrough();
    vn->add_option("file", file, "FILE[:NAME]")->required();
    vn->callback([&] { action = [&] { return cmd_flag(o, "von-neumann", cqd::is_vn_measurement(load(file), o.tol)); }; });

    auto *naimark = app.add_subcommand("naimark", "Dilate a POVM q -> c")->fallthrough();
    naimark->add_option("file", file, "FILE[:NAME]")->required();
    naimark->callback([&] { action = [&] { return cmd_naimark(o, file); }; });

    auto *slocc = app.add_subcommand("classify-slocc", "SLOCC class of a three-qubit state")->fallthrough();
    slocc->add_option("--state", state, "Ket sum such as \"|001> + |010> + |100>\"");
    slocc->add_option("file", file, "File holding the ket sum");
    slocc->callback([&] { action = [&] { return cmd_classify(o, state, file); }; });

    auto *protocol = app.add_subcommand("verify-protocol", "Verify a protocol")->fallthrough();
    protocol->add_option("protocol", name, "teleport, dense-coding or swap")
        ->required()
        ->check(CLI::IsMember({"teleport", "dense-coding", "swap"}));
    protocol->add_option("--dim", dim, "Dimension D")->capture_default_str();
    protocol->add_option("--fixture", fixture, "Correction fixture")
        ->check(CLI::IsMember({"shift-clock", "identity"}))
        ->capture_default_str();
    protocol->callback([&] { action = [&] { return cmd_protocol(o, name, dim, fixture); }; });

    auto *phase = app.add_subcommand("phase-demo", "GHZ phase fusion on random phases")->fallthrough();
    phase->add_option("--dim", dim, "Dimension d")->capture_default_str();
    phase->callback([&] { action = [&] { return cmd_phase_demo(o, dim); }; });

    auto *render = app.add_subcommand("render", "Write a Graphviz description")->fallthrough();
    render->add_option("file", file, "FILE[:NAME]")->required();
    render->add_option("-o,--output", out, "Output file (default stdout)");
    render->callback([&] { action = [&] { return cmd_render(file, out); }; });

    auto *rules = app.add_subcommand("rules", "Print the rule catalog")->fallthrough();
    rules->callback([&] { action = [&] {
                            std::cout << cqd::rules_markdown();
                            return kOk;
                        }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }
    try {
        return action();
    } catch (const cqd::DslError &e) {
        for (const auto &d : e.diagnostics()) std::cerr << d.str() << "\n";
        return kError;
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
