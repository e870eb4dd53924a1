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

#include "qdconcat_cli/verify.h"

#include <cmath>
#include <set>
#include <sstream>

#include "qdconcat/analytic.h"
#include "qdconcat/dfs.h"
#include "qdconcat/errors.h"
#include "qdconcat/mc.h"
#include "qdconcat/statevec.h"

namespace qdc::cli {

namespace {

using Kets = std::vector<std::pair<double, std::string>>;

class Recorder {
   public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void check(bool ok, std::string name, std::string detail = "") {
        results_.push_back({suite_, std::move(name), ok, ok ? "" : std::move(detail), false});
    }
    void note(std::string name, std::string detail) {
        results_.push_back({suite_, std::move(name), true, std::move(detail), true});
    }
    std::vector<CheckResult> take() { return std::move(results_); }

   private:
    std::string suite_;
    std::vector<CheckResult> results_;
};

std::vector<ConcatCode> selected(std::optional<ConcatCode> code) {
    return code ? std::vector<ConcatCode>{*code} : all_code_ids();
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(10);
    s << v;
    return s.str();
}

// Reference codeword expansions over logical D-qubits of the ten-qubit QD code.
const Kets kQd10Zero = {{1, "00000"},  {1, "10010"},  {1, "01001"},  {1, "10100"}, {1, "01010"},  {-1, "11011"},
                        {-1, "00110"}, {-1, "11000"}, {-1, "11101"}, {-1, "00011"}, {-1, "11110"}, {-1, "01111"},
                        {-1, "10001"}, {-1, "01100"}, {-1, "10111"}, {1, "00101"}};
const Kets kQd10One = {{1, "11111"},  {1, "01101"},  {1, "10110"},  {1, "01011"}, {1, "10101"},  {-1, "00100"},
                       {-1, "11001"}, {-1, "00111"}, {-1, "00010"}, {-1, "11100"}, {-1, "00001"}, {-1, "10000"},
                       {-1, "01110"}, {-1, "10011"}, {-1, "01000"}, {-1, "11010"}};

StateVector kets(size_t n, const Kets &k) {
    return StateVector::from_kets(n, k);
}

std::pair<StateVector, StateVector> dfs_pair() {
    return {kets(2, {{1, "00"}, {1, "11"}}), kets(2, {{1, "01"}, {1, "10"}})};
}

std::pair<StateVector, StateVector> reference_codewords(ConcatCode code) {
    auto [d0, d1] = dfs_pair();
    switch (code) {
        case ConcatCode::kQD6: {
            auto zero = substitute(kets(3, {{1, "000"}}), d0, d1);
            auto one = substitute(kets(3, {{1, "111"}}), d0, d1);
            return {zero, one};
        }
        case ConcatCode::kDQ6:
            return {kets(6, {{1, "000000"}, {1, "111111"}}), kets(6, {{1, "000111"}, {1, "111000"}})};
        case ConcatCode::kQD10:
            return {substitute(kets(5, kQd10Zero), d0, d1), substitute(kets(5, kQd10One), d0, d1)};
        case ConcatCode::kDQ10: {
            StateVector q0 = kets(5, kQd10Zero);
            StateVector q1 = apply_pauli(q0, PauliString::parse("XXXXX"));
            return {substitute(kets(2, {{1, "00"}, {1, "11"}}), q0, q1),
                    substitute(kets(2, {{1, "01"}, {1, "10"}}), q0, q1)};
        }
    }
    throw LookupError("unknown code");
}

void suite_pauli(Recorder &r) {
    for (const char *s : {"XIIXII", "IIIIII", "-YY", "iXZ", "-iY", "ZZIXY"}) {
        r.check(PauliString::parse(s).str() == s, std::string("round trip ") + s);
    }
    r.check(multiply(PauliString::parse("ZZ"), PauliString::parse("XX")).str() == "-YY", "ZZ*XX = -YY");
    r.check(multiply(PauliString::parse("X"), PauliString::parse("Z")).str() == "-iY", "X*Z = -iY");
    bool table_ok = true;
    for (const char *a : {"I", "X", "Y", "Z"}) {
        for (const char *b : {"I", "X", "Y", "Z"}) {
            PauliString pa = PauliString::parse(a);
            PauliString pb = PauliString::parse(b);
            Eigen::MatrixXcd want = pauli_matrix(pa) * pauli_matrix(pb);
            if ((pauli_matrix(multiply(pa, pb)) - want).norm() > 1e-12) {
                table_ok = false;
            }
            bool dense_commute = (pauli_matrix(pa) * pauli_matrix(pb) - pauli_matrix(pb) * pauli_matrix(pa)).norm() < 1e-12;
            if (dense_commute != commutes(pa, pb)) {
                table_ok = false;
            }
        }
    }
    r.check(table_ok, "single-qubit product table matches dense matrices");
    r.check(commutes(PauliString::parse("XZZXI"), PauliString::parse("IXZZX")), "XZZXI commutes with IXZZX");
    r.check(commutes(PauliString::parse("XXXXXX"), PauliString::parse("ZZIIII")), "XXXXXX commutes with ZZIIII");
}

void suite_stabilizer(Recorder &r, std::optional<ConcatCode> code) {
    for (const auto &name : builtin_names()) {
        auto report = validate(builtin(name));
        r.check(report.ok(), "validate " + name, report.str());
    }
    for (ConcatCode id : selected(code)) {
        auto report = validate(concatenated_code(standard_spec(id)));
        r.check(report.ok(), "validate " + std::string(code_id_name(id)), report.str());
    }
    StabilizerCode rep = builtin("repetition-3");
    r.check(syndrome(rep, PauliString::parse("XII")).str() == "11", "repetition-3 syndrome of XII is 11");
    r.check(classify(rep, PauliString::parse("XXX")).kind == ErrorKind::kLogical, "repetition-3 XXX is logical");
}

struct Expected {
    size_t sets, per_set;
    Rational phi_prime;
    size_t passive, active, active_reps;
};

Expected expected(ConcatCode id) {
    switch (id) {
        case ConcatCode::kQD6:
            return {4, 8, {2, 5}, 3, 2, 4};
        case ConcatCode::kDQ6:
            return {16, 2, {4, 5}, 1, 4, 1};
        case ConcatCode::kQD10:
            return {16, 32, {4, 9}, 5, 4, 16};
        case ConcatCode::kDQ10:
            return {256, 2, {8, 9}, 1, 8, 1};
    }
    return {};
}

void suite_concat(Recorder &r, std::optional<ConcatCode> code) {
    for (ConcatCode id : selected(code)) {
        std::string tag(code_id_name(id));
        ConcatenatedCode cc = ConcatenatedCode::build(standard_spec(id));
        Expected e = expected(id);
        bool sizes = cc.equivalence.set_count() == e.sets;
        for (const auto &s : cc.equivalence.sets) {
            sizes = sizes && s.size() == e.per_set;
        }
        r.check(sizes, tag + " equivalence class " + std::to_string(e.sets) + "x" + std::to_string(e.per_set),
                "got " + std::to_string(cc.equivalence.set_count()) + " sets, " +
                    std::to_string(cc.equivalence.total()) + " elements");
        HammingEfficiency h = hamming_efficiency(cc.equivalence, cc.spec.n_cc, cc.spec.k_cc);
        r.check(h.phi_exact == Rational{1, 1} && h.phi_prime_exact == e.phi_prime,
                tag + " phi = 1, phi' = " + e.phi_prime.str(), "phi=" + fmt(h.phi) + " phi'=" + fmt(h.phi_prime));
        size_t passive = 0;
        size_t active = 0;
        bool reps_ok = true;
        for (const auto &g : cc.generator_classes) {
            if (g.passive) {
                passive++;
                reps_ok = reps_ok && g.representatives.size() == 1;
            } else {
                active++;
                reps_ok = reps_ok && g.representatives.size() == e.active_reps;
            }
        }
        r.check(passive == e.passive && active == e.active && reps_ok, tag + " generator classes",
                std::to_string(passive) + " passive, " + std::to_string(active) + " active");
        bool degenerate = true;
        for (const auto &g : cc.generator_classes) {
            for (const auto &set : cc.equivalence.sets) {
                for (const auto &err : set) {
                    bool first = commutes(g.representatives.front(), err);
                    for (const auto &rep : g.representatives) {
                        degenerate = degenerate && commutes(rep, err) == first;
                    }
                }
            }
        }
        r.check(degenerate, tag + " generator representatives share syndromes on all correctable errors");
        bool theorem = true;
        size_t zero_sets = 0;
        for (const auto &set : cc.equivalence.sets) {
            if (syndrome(cc.code, set.front()).is_zero()) {
                zero_sets++;
                for (const auto &err : set) {
                    theorem = theorem && classify(cc.code, err).kind == ErrorKind::kStabilizer;
                }
            }
        }
        r.check(theorem && zero_sets == 1, tag + " passively corrected errors form one set");
        r.check(cc.decoder.size() == e.sets, tag + " decoder has one entry per set");
    }
}

void suite_codewords(Recorder &r, std::optional<ConcatCode> code) {
    for (ConcatCode id : selected(code)) {
        std::string tag(code_id_name(id));
        auto [zero, one] = encoded_codewords(id);
        auto [ref0, ref1] = reference_codewords(id);
        auto compare = [&](const StateVector &got, const StateVector &want, const std::string &label) {
            auto bad = first_mismatch(got, want);
            if (!bad && equal_up_to_global_phase(got, want)) {
                r.check(true, tag + " " + label + " matches reference expansion");
                return;
            }
            if (id == ConcatCode::kQD10 && label == "|1>") {
                Kets fixed = kQd10One;
                fixed.back().first = 1;
                auto [d0, d1] = dfs_pair();
                if (equal_up_to_global_phase(got, substitute(kets(5, fixed), d0, d1))) {
                    r.note(tag + " |1> reference expansion",
                           "reference term |11010>_D carries '-' but the codeword has '+'; all other 15 terms agree");
                    return;
                }
            }
            r.check(false, tag + " " + label + " matches reference expansion",
                    "first mismatching amplitude index " + (bad ? std::to_string(*bad) : std::string("?")));
        };
        compare(zero, ref0, "|0>");
        compare(one, ref1, "|1>");
        ConcatenatedCode cc = ConcatenatedCode::build(standard_spec(id));
        bool stabilized = true;
        for (const auto &g : cc.generator_classes) {
            for (const auto &rep : g.representatives) {
                for (const StateVector *w : {&zero, &one}) {
                    stabilized = stabilized && std::abs(expectation(*w, rep) - Amplitude(1)) < 1e-10;
                }
            }
        }
        r.check(stabilized, tag + " every generator representative has expectation +1");
    }
}

void suite_kl(Recorder &r, std::optional<ConcatCode> code) {
    {
        auto [z, o] = codewords_from_stabilizers(builtin("knill-laflamme-5"));
        std::vector<PauliString> errors{PauliString(5)};
        for (char l : {'X', 'Y', 'Z'}) {
            for (size_t q = 0; q < 5; q++) {
                errors.push_back(PauliString::single(5, q, l));
            }
        }
        r.check(kl_check(z, o, errors).ok, "knill-laflamme-5 corrects all 16 single-qubit errors");
    }
    {
        auto [z, o] = codewords_from_stabilizers(builtin("repetition-3"));
        std::vector<PauliString> errors{PauliString(3)};
        for (size_t q = 0; q < 3; q++) {
            errors.push_back(PauliString::single(3, q, 'X'));
        }
        r.check(kl_check(z, o, errors).ok, "repetition-3 corrects {I, X_i}");
        errors.push_back(PauliString::parse("ZII"));
        auto res = kl_check(z, o, errors);
        r.check(!res.ok && res.witness.has_value(), "repetition-3 with ZII fails with a witness");
    }
    for (ConcatCode id : selected(code)) {
        if (id != ConcatCode::kQD6 && id != ConcatCode::kDQ6) {
            continue;
        }
        auto [z, o] = encoded_codewords(id);
        std::vector<PauliString> errors;
        for (const auto &set : equivalence_classes(standard_spec(id)).sets) {
            errors.insert(errors.end(), set.begin(), set.end());
        }
        r.check(kl_check(z, o, errors).ok, std::string(code_id_name(id)) + " corrects its 32 equivalence-class errors");
    }
}

void suite_dfs(Recorder &r) {
    auto group = AbelianErrorGroup::from_elements({PauliString::parse("II"), PauliString::parse("XX")});
    auto chars = characters(group);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(4, 4);
    bool idempotent = true;
    for (const auto &chi : chars) {
        Eigen::MatrixXcd p = projector(group, chi);
        idempotent = idempotent && (p * p - p).norm() < 1e-12;
        sum += p;
    }
    r.check(idempotent, "{II,XX} projectors are idempotent");
    r.check((sum - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12, "{II,XX} projectors sum to identity");
    auto spans = [&](const Character &chi, const std::vector<StateVector> &want) {
        Eigen::MatrixXcd p = projector(group, chi);
        bool ok = df_basis(group, chi).size() == want.size();
        for (const auto &w : want) {
            Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(w.amplitudes().data(), 4);
            ok = ok && (p * v - v).norm() < 1e-10;
        }
        return ok;
    };
    r.check(spans(chars[0], {kets(2, {{1, "00"}, {1, "11"}}), kets(2, {{1, "01"}, {1, "10"}})}),
            "trivial-character basis spans |00>+|11>, |01>+|10>");
    r.check(spans(chars[1], {kets(2, {{1, "00"}, {-1, "11"}}), kets(2, {{1, "01"}, {-1, "10"}})}),
            "sign-character basis spans |00>-|11>, |01>-|10>");
    auto mixed = kets(2, {{0.6, "00"}, {0.6, "11"}, {0.8, "01"}, {0.8, "10"}});
    r.check(dfs_invariance(mixed, group, chars[0]), "superposition inside one irrep is invariant");
    r.check(!dfs_invariance(kets(2, {{1, "00"}}), group, chars[0]), "cross-irrep superposition is not invariant");
}

void suite_analytic(Recorder &r, std::optional<ConcatCode> code) {
    bool rep3 = true;
    for (int k = 0; k <= 100; k++) {
        double p = k / 100.0;
        rep3 = rep3 && standalone_pf(CodeFormula::kRep3, 0, p) == 3 * p * p - 2 * p * p * p;
        rep3 = rep3 && standalone_pf(CodeFormula::kRep3, 1, p) == p;
    }
    r.check(rep3, "rep3 limits: mu=0 gives 3p^2-2p^3, mu=1 gives p");
    struct Want {
        ConcatCode id;
        double value, tol;
    };
    for (Want w : {Want{ConcatCode::kQD6, 0.1293, 5e-4}, Want{ConcatCode::kDQ6, 0.2252, 5e-4},
                   Want{ConcatCode::kQD10, 0.0298, 1e-3}, Want{ConcatCode::kDQ10, 0.0579, 1e-3}}) {
        if (code && *code != w.id) {
            continue;
        }
        Variant v = table_variant(w.id);
        auto t = pseudothreshold([&](double p) { return concat_code_pf(w.id, 0, p, v); });
        r.check(t && std::abs(*t - w.value) <= w.tol,
                std::string(code_id_name(w.id)) + " pseudothreshold " + fmt(w.value) + " (" +
                    std::string(variant_name(v)) + ")",
                t ? "got " + fmt(*t) : "no crossing");
    }
    if (!code || *code == ConcatCode::kDQ10) {
        auto t = pseudothreshold([](double p) { return concat_code_pf(ConcatCode::kDQ10, 0, p, Variant::kPrinted); });
        r.check(!t, "dq10 printed form has no crossing", t ? "got " + fmt(*t) : "");
    }
    for (auto [qd, dq] : {std::pair{ConcatCode::kQD6, ConcatCode::kDQ6}, std::pair{ConcatCode::kQD10, ConcatCode::kDQ10}}) {
        bool ok = true;
        for (int k = 1; k <= 99; k++) {
            double p = 0.005 * k;
            ok = ok && entanglement_fidelity(concat_code_pf(dq, 0, p)) >= entanglement_fidelity(concat_code_pf(qd, 0, p));
            ok = ok &&
                 entanglement_fidelity(concat_code_pf(qd, 0.75, p)) >= entanglement_fidelity(concat_code_pf(dq, 0.75, p));
        }
        r.check(ok, std::string(code_id_name(qd)) + "/" + std::string(code_id_name(dq)) +
                        " fidelity ordering flips between mu=0 and mu=0.75");
    }
    {
        auto base = [](double p) { return concat_code_pf(ConcatCode::kDQ6, 0, p); };
        auto t1 = pseudothreshold(base);
        bool ok = t1.has_value() && std::abs(*t1 - 0.2252) <= 1e-3;
        for (int depth = 2; depth <= 4 && ok; depth++) {
            auto t = pseudothreshold(depth_recursion(base, depth));
            ok = t.has_value() && std::abs(*t - *t1) <= 1e-6;
        }
        r.check(ok, "dq6 crossing is invariant under depth 1..4");
    }
    {
        double worst = 0;
        for (int i = 0; i <= 20; i++) {
            for (int j = 0; j <= 20; j++) {
                double p = i / 20.0;
                double mu = j / 20.0;
                worst = std::max(worst, std::abs(cross_block_correlation(p, mu) -
                                                 cross_block_correlation_closed_form(p, mu)));
            }
        }
        r.check(worst <= 1e-12, "cross-block closed form matches 16-outcome enumeration", "max deviation " + fmt(worst));
    }
}

void suite_mc(Recorder &r, std::optional<ConcatCode> code, uint64_t shots) {
    for (ConcatCode id : {ConcatCode::kQD6, ConcatCode::kDQ6}) {
        if (code && *code != id) {
            continue;
        }
        ConcatenatedCode cc = ConcatenatedCode::build(standard_spec(id));
        for (double p : {0.05, 0.1, 0.2}) {
            for (double mu : {0.0, 0.5, 0.75}) {
                SampleConfig cfg{NoiseModel::make(p, mu, cc.spec.alphabet), cc.spec, shots, 20260101};
                AgreementReport rep = compare(estimate_pf(cfg, cc), concat_code_pf(id, mu, p));
                r.check(rep.z <= 4, std::string(code_id_name(id)) + " Monte Carlo p=" + fmt(p) + " mu=" + fmt(mu),
                        "pf_hat=" + fmt(rep.estimate.pf_hat) + " analytic=" + fmt(rep.analytic) + " z=" + fmt(rep.z));
            }
        }
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"pauli", "stabilizer", "concat", "codewords", "kl", "dfs", "analytic", "mc"};
}

std::vector<CheckResult> run_suite(std::string_view suite, std::optional<ConcatCode> code, uint64_t mc_shots) {
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto &name : suite_names()) {
            auto part = run_suite(name, code, mc_shots);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    Recorder r{std::string(suite)};
    if (suite == "pauli") {
        suite_pauli(r);
    } else if (suite == "stabilizer") {
        suite_stabilizer(r, code);
    } else if (suite == "concat") {
        suite_concat(r, code);
    } else if (suite == "codewords") {
        suite_codewords(r, code);
    } else if (suite == "kl") {
        suite_kl(r, code);
    } else if (suite == "dfs") {
        suite_dfs(r);
    } else if (suite == "analytic") {
        suite_analytic(r, code);
    } else if (suite == "mc") {
        suite_mc(r, code, mc_shots);
    } else {
        throw LookupError("unknown suite '" + std::string(suite) +
                          "'; valid: all, pauli, stabilizer, concat, codewords, kl, dfs, analytic, mc");
    }
    return r.take();
}

}  // namespace qdc::cli
