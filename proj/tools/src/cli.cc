// Copyright 2026 The qdconcat Authors
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

#include "qdconcat_cli/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdconcat/analytic.h"
#include "qdconcat/concat.h"
#include "qdconcat/dfs.h"
#include "qdconcat/errors.h"
#include "qdconcat/mc.h"
#include "qdconcat_cli/json_io.h"
#include "qdconcat_cli/verify.h"

namespace qdc::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string out_path;

    std::string describe_name;

    std::string outer, inner, order = "qd", alphabet;

    std::string elements;
    uint64_t character = 0;

    std::string code = "qd6";
    std::string sweep_action = "sweep";
    double mu = 0;
    double pmin = 0, pmax = 0.5, step = 0.01;
    std::string variant;
    int depth = 1;

    double p = 0.1;
    uint64_t shots = 100000;
    uint64_t seed = 0;
    std::string layout = "innermost";
    unsigned threads = 0;

    std::string suite = "all";
    std::string verify_code;
};

std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

Variant resolve_variant(const std::string &name, ConcatCode code, bool table_default) {
    if (name.empty()) {
        return table_default ? table_variant(code) : Variant::kLiteral;
    }
    return parse_variant(name);
}

json threshold_json(double v) {
    return std::isnan(v) ? json("no-crossing") : json(v);
}

double threshold_or_nan(const std::function<double(double)> &f) {
    auto t = pseudothreshold(f);
    return t ? *t : std::nan("");
}

std::string e_type(const ConcatSpec &spec) {
    std::string out;
    for (char c : alphabet_letters(spec.alphabet)) {
        out += out.empty() ? "" : ",";
        out += c;
    }
    const StabilizerCode &dfs = spec.order == ConcatOrder::kQD ? spec.inner : spec.outer;
    for (const auto &g : dfs.generators()) {
        out += "," + g.unsigned_part().str();
    }
    return out;
}

int cmd_codes_list(std::ostream &out) {
    json doc;
    doc["codes"] = builtin_names();
    auto ids = json::array();
    for (ConcatCode id : all_code_ids()) {
        ids.push_back(code_id_name(id));
    }
    doc["concatenated"] = ids;
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_codes_describe(const Options &o, std::ostream &out) {
    for (ConcatCode id : all_code_ids()) {
        if (code_id_name(id) == o.describe_name) {
            out << concat_to_json(ConcatenatedCode::build(standard_spec(id))).dump(2) << "\n";
            return kExitOk;
        }
    }
    out << code_to_json(load_code(o.describe_name)).dump(2) << "\n";
    return kExitOk;
}

int cmd_concat(const Options &o, std::ostream &out) {
    std::optional<Alphabet> alphabet;
    if (!o.alphabet.empty()) {
        alphabet = parse_alphabet(o.alphabet);
    }
    ConcatSpec spec = make_concat_spec(load_code(o.outer), load_code(o.inner), parse_order(o.order), alphabet);
    out << concat_to_json(ConcatenatedCode::build(std::move(spec))).dump(2) << "\n";
    return kExitOk;
}

int cmd_dfs(const Options &o, std::ostream &out) {
    std::vector<PauliString> elements;
    std::stringstream ss(o.elements);
    std::string item;
    while (std::getline(ss, item, ',')) {
        elements.push_back(PauliString::parse(item));
    }
    if (elements.empty()) {
        throw ParseError("--elements needs a comma-separated list of Pauli strings");
    }
    auto group = AbelianErrorGroup::from_elements(std::move(elements));
    auto chars = characters(group);
    if (o.character >= chars.size()) {
        throw DomainError("--character must be below " + std::to_string(chars.size()));
    }
    const Character &chi = chars[o.character];
    json doc;
    doc["character"] = chi.values;
    auto basis = json::array();
    for (const auto &v : df_basis(group, chi)) {
        auto amps = json::array();
        for (const auto &a : v.amplitudes()) {
            amps.push_back({a.real(), a.imag()});
        }
        basis.push_back(amps);
    }
    doc["basis"] = basis;
    try {
        doc["code"] = code_to_json(as_stabilizer_code(group, chi));
    } catch (const StructureError &e) {
        doc["code"] = nullptr;
        doc["code_error"] = e.what();
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_fidelity(const Options &o, std::ostream &out) {
    if (o.sweep_action != "sweep") {
        throw ParseError("unknown fidelity action '" + o.sweep_action + "' (expected sweep)");
    }
    if (!(o.step > 0) || o.pmax < o.pmin) {
        throw DomainError("need step > 0 and pmin <= pmax");
    }
    ConcatCode id = parse_code_id(o.code);
    Variant v = resolve_variant(o.variant, id, false);
    auto rows = static_cast<long>(std::llround((o.pmax - o.pmin) / o.step)) + 1;
    out << "p,mu,pf,fe\n";
    for (long k = 0; k < rows; k++) {
        double p = std::min(o.pmin + static_cast<double>(k) * o.step, 1.0);
        double pf = concat_code_pf(id, o.mu, p, v);
        out << g6(p) << "," << g6(o.mu) << "," << g6(pf) << "," << g6(entanglement_fidelity(pf)) << "\n";
    }
    return kExitOk;
}

int cmd_threshold(const Options &o, std::ostream &out) {
    ConcatCode id = parse_code_id(o.code);
    Variant v = resolve_variant(o.variant, id, true);
    if (o.depth < 1) {
        throw DomainError("--depth must be at least 1");
    }
    auto base = [id, v, mu = o.mu](double p) { return concat_code_pf(id, mu, p, v); };
    json doc;
    doc["code"] = code_id_name(id);
    doc["mu"] = o.mu;
    doc["variant"] = variant_name(v);
    doc["depth"] = o.depth;
    if (o.depth > 1) {
        auto depths = json::array();
        for (int l = 1; l <= o.depth; l++) {
            depths.push_back({{"depth", l}, {"p_thres", threshold_json(threshold_or_nan(depth_recursion(base, l)))}});
        }
        doc["depths"] = depths;
        auto f = depth_recursion(base, o.depth);
        auto curve = json::array();
        for (int k = 0; k <= 50; k++) {
            double p = k / 100.0;
            curve.push_back({{"p", p}, {"pf", f(p)}});
        }
        doc["curve"] = curve;
    }
    doc["p_thres"] = threshold_json(threshold_or_nan(depth_recursion(base, o.depth)));
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_mc(const Options &o, std::ostream &out) {
    ConcatCode id = parse_code_id(o.code);
    ConcatenatedCode cc = ConcatenatedCode::build(standard_spec(id));
    CorrelationLayout layout;
    if (o.layout == "innermost") {
        layout = CorrelationLayout::kInnermostBlocks;
    } else if (o.layout == "register") {
        layout = CorrelationLayout::kFullRegister;
    } else {
        throw ParseError("unknown layout '" + o.layout + "' (expected innermost|register)");
    }
    SampleConfig cfg{NoiseModel::make(o.p, o.mu, cc.spec.alphabet), cc.spec, o.shots, o.seed, layout, o.threads};
    double analytic = concat_code_pf(id, o.mu, o.p);
    AgreementReport rep = compare(estimate_pf(cfg, cc), analytic);
    json doc;
    doc["code"] = code_id_name(id);
    doc["p"] = o.p;
    doc["mu"] = o.mu;
    doc["alphabet"] = alphabet_name(cc.spec.alphabet);
    doc["layout"] = o.layout;
    doc["pf_hat"] = rep.estimate.pf_hat;
    doc["stderr"] = rep.estimate.stderr_;
    doc["shots"] = rep.estimate.shots;
    doc["seed"] = o.seed;
    doc["analytic"] = analytic;
    doc["z"] = std::isfinite(rep.z) ? json(rep.z) : json("inf");
    doc["flagged"] = rep.flagged;
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    std::optional<ConcatCode> code;
    if (!o.verify_code.empty()) {
        code = parse_code_id(o.verify_code);
    }
    auto results = run_suite(o.suite, code, o.shots);
    auto failures = json::array();
    size_t notes = 0;
    for (const auto &r : results) {
        const char *tag = r.note ? "NOTE" : (r.ok ? "PASS" : "FAIL");
        out << tag << " [" << r.suite << "] " << r.name;
        if (!r.detail.empty()) {
            out << ": " << r.detail;
        }
        out << "\n";
        notes += r.note ? 1 : 0;
        if (!r.ok) {
            failures.push_back({{"suite", r.suite}, {"check", r.name}, {"detail", r.detail}});
        }
    }
    out << "verify: " << results.size() << " checks, " << failures.size() << " failed, " << notes << " notes\n";
    if (!failures.empty()) {
        err << json{{"status", "fail"}, {"failures", failures}}.dump() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_table1(std::ostream &out) {
    json doc;
    for (const char *key : {"codes", "variant", "e_type", "phi", "phi_exact", "phi_prime", "phi_prime_exact", "p_thres"}) {
        doc[key] = json::array();
    }
    for (ConcatCode id : all_code_ids()) {
        ConcatenatedCode cc = ConcatenatedCode::build(standard_spec(id));
        HammingEfficiency h = hamming_efficiency(cc.equivalence, cc.spec.n_cc, cc.spec.k_cc);
        Variant v = table_variant(id);
        doc["codes"].push_back(code_id_name(id));
        doc["variant"].push_back(variant_name(v));
        doc["e_type"].push_back(e_type(cc.spec));
        doc["phi"].push_back(h.phi);
        doc["phi_exact"].push_back(h.phi_exact ? json(h.phi_exact->str()) : json(nullptr));
        doc["phi_prime"].push_back(h.phi_prime);
        doc["phi_prime_exact"].push_back(h.phi_prime_exact ? json(h.phi_prime_exact->str()) : json(nullptr));
        doc["p_thres"].push_back(
            threshold_json(threshold_or_nan([id, v](double p) { return concat_code_pf(id, 0, p, v); })));
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Concatenated QECC/DFS code toolkit", "qdconcat"};
    app.require_subcommand(1);
    app.add_option("--out", o.out_path, "Write results to this file instead of stdout");

    auto *codes = app.add_subcommand("codes", "List or describe stabilizer codes")->fallthrough();
    codes->require_subcommand(1);
    auto *codes_list = codes->add_subcommand("list", "List builtin and concatenated codes")->fallthrough();
    auto *codes_describe = codes->add_subcommand("describe", "Describe a code as JSON")->fallthrough();
    codes_describe->add_option("name", o.describe_name, "Builtin name, concatenated id or JSON file")->required();

    auto *concat = app.add_subcommand("concat", "Build a QD or DQ concatenation")->fallthrough();
    concat->require_subcommand(1);
    auto *concat_build = concat->add_subcommand("build", "Build and describe a concatenated code")->fallthrough();
    concat_build->add_option("--outer", o.outer, "Outer code (builtin name or JSON file)")->required();
    concat_build->add_option("--inner", o.inner, "Inner code (builtin name or JSON file)")->required();
    concat_build->add_option("--order", o.order, "qd or dq")->check(CLI::IsMember({"qd", "dq"}));
    concat_build->add_option("--alphabet", o.alphabet, "bitflip or depolarizing3 (default: inferred)")
        ->check(CLI::IsMember({"bitflip", "depolarizing3"}));

    auto *dfs = app.add_subcommand("dfs", "Decoherence-free subspaces of an Abelian Pauli group")->fallthrough();
    dfs->require_subcommand(1);
    auto *dfs_build = dfs->add_subcommand("build", "Basis and stabilizer code for one character")->fallthrough();
    dfs_build->add_option("--elements", o.elements, "Comma-separated group elements, e.g. II,XX")->required();
    dfs_build->add_option("--character", o.character, "Character index (0 = trivial)");

    auto add_code = [&](CLI::App *sub) {
        sub->add_option("--code", o.code, "qd6, dq6, qd10 or dq10")->check(CLI::IsMember({"qd6", "dq6", "qd10", "dq10"}));
    };
    auto add_variant = [&](CLI::App *sub, const char *help) {
        sub->add_option("--variant", o.variant, help)->check(CLI::IsMember({"literal", "printed", "bitflip-inner"}));
    };

    auto *fidelity = app.add_subcommand("fidelity", "Failure probability and fidelity sweep as CSV")->fallthrough();
    fidelity->add_option("action", o.sweep_action, "sweep (default)");
    add_code(fidelity);
    fidelity->add_option("--mu", o.mu, "Correlation strength")->check(CLI::Range(0.0, 1.0));
    fidelity->add_option("--pmin", o.pmin, "First p")->check(CLI::Range(0.0, 1.0));
    fidelity->add_option("--pmax", o.pmax, "Last p")->check(CLI::Range(0.0, 1.0));
    fidelity->add_option("--step", o.step, "Grid step")->check(CLI::PositiveNumber);
    add_variant(fidelity, "literal (default), printed (dq10) or bitflip-inner (qd10)");

    auto *threshold = app.add_subcommand("threshold", "Pseudothreshold as JSON")->fallthrough();
    add_code(threshold);
    threshold->add_option("--mu", o.mu, "Correlation strength")->check(CLI::Range(0.0, 1.0));
    add_variant(threshold, "default: bitflip-inner for qd10, literal otherwise");
    threshold->add_option("--depth", o.depth, "Self-concatenation depth")->check(CLI::PositiveNumber);

    auto *mc = app.add_subcommand("mc", "Monte Carlo estimate of the failure probability")->fallthrough();
    mc->require_subcommand(1);
    auto *mc_run = mc->add_subcommand("run", "Sample, decode and compare with the analytic value")->fallthrough();
    add_code(mc_run);
    mc_run->add_option("--p", o.p, "Single-qubit error probability")->check(CLI::Range(0.0, 1.0));
    mc_run->add_option("--mu", o.mu, "Correlation strength")->check(CLI::Range(0.0, 1.0));
    mc_run->add_option("--shots", o.shots, "Number of shots")->check(CLI::PositiveNumber);
    mc_run->add_option("--seed", o.seed, "RNG seed");
    mc_run->add_option("--layout", o.layout, "innermost (default) or register")
        ->check(CLI::IsMember({"innermost", "register"}));
    mc_run->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    auto *verify = app.add_subcommand("verify", "Run the built-in check suites")->fallthrough();
    verify->add_option("--suite", o.suite, "all, pauli, stabilizer, concat, codewords, kl, dfs, analytic or mc");
    verify->add_option("--code", o.verify_code, "Restrict code-specific checks")
        ->check(CLI::IsMember({"qd6", "dq6", "qd10", "dq10"}));
    verify->add_option("--shots", o.shots, "Monte Carlo shots per point")->check(CLI::PositiveNumber);

    auto *table1 = app.add_subcommand("table1", "Error types, efficiencies and pseudothresholds")->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ostringstream buffer;
    int status;
    try {
        if (codes_list->parsed()) {
            status = cmd_codes_list(buffer);
        } else if (codes_describe->parsed()) {
            status = cmd_codes_describe(o, buffer);
        } else if (concat_build->parsed()) {
            status = cmd_concat(o, buffer);
        } else if (dfs_build->parsed()) {
            status = cmd_dfs(o, buffer);
        } else if (fidelity->parsed()) {
            status = cmd_fidelity(o, buffer);
        } else if (threshold->parsed()) {
            status = cmd_threshold(o, buffer);
        } else if (mc_run->parsed()) {
            status = cmd_mc(o, buffer);
        } else if (verify->parsed()) {
            status = cmd_verify(o, buffer, err);
        } else if (table1->parsed()) {
            status = cmd_table1(buffer);
        } else {
            err << "error: no command\n";
            return kExitUsage;
        }
    } catch (const ConsistencyError &e) {
        err << json{{"status", "fail"}, {"error", "consistency"}, {"detail", e.what()}}.dump() << "\n";
        return kExitCheckFailed;
    } catch (const std::logic_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path);
        if (!file) {
            err << "error: cannot write " << o.out_path << "\n";
            return kExitUsage;
        }
        file << buffer.str();
    }
    return status;
}

}  // namespace qdc::cli
