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

#include "qdconcat/analytic.h"

#include <cmath>

#include "qdconcat/errors.h"

namespace qdc {

namespace {

void check_unit(double v, const char *what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1]; got " + std::to_string(v));
    }
}

double rep3(double mu, double p) {
    double m = 1 - mu;
    return (3 * p * p - 2 * p * p * p) * m * m + p * mu * (2 - mu);
}

double dfs2_bitflip(double mu, double p) {
    return 2 * p * (1 - p) * (1 - mu);
}

double dfs2_depolarizing3(double mu, double p) {
    double a = (1 - p) * (1 - mu) + mu;
    return 1 - (1 - p) * a - (p / 3) * ((p / 3) * (1 - mu) + mu);
}

double kl5(double mu, double p) {
    double a = (1 - p) * (1 - mu) + mu;
    double m = 1 - mu;
    return 1 - 3 * (1 - p) * (1 - p) * p * m * m * a * a - 2 * (1 - p) * p * m * a * a * a - (1 - p) * a * a * a * a;
}

}  // namespace

NoiseModel NoiseModel::make(double p, double mu, Alphabet alphabet) {
    check_unit(p, "p");
    check_unit(mu, "mu");
    return NoiseModel{p, mu, alphabet};
}

size_t NoiseModel::letter_count() const {
    return alphabet == Alphabet::kBitflip ? 2 : 4;
}

char NoiseModel::letter(size_t index) const {
    if (index >= letter_count()) {
        throw DomainError("letter index " + std::to_string(index) + " out of range");
    }
    return "IXYZ"[index];
}

double NoiseModel::marginal(size_t index) const {
    if (index >= letter_count()) {
        throw DomainError("letter index " + std::to_string(index) + " out of range");
    }
    if (index == 0) {
        return 1 - p;
    }
    return alphabet == Alphabet::kBitflip ? p : p / 3;
}

double conditional_prob(const NoiseModel &model, size_t i, size_t j) {
    if (j >= model.letter_count()) {
        throw DomainError("letter index " + std::to_string(j) + " out of range");
    }
    return (1 - model.mu) * model.marginal(i) + (i == j ? model.mu : 0.0);
}

double chain_probability(const NoiseModel &model, std::span<const size_t> letters) {
    if (letters.empty()) {
        return 1.0;
    }
    double prob = model.marginal(letters[0]);
    for (size_t k = 1; k < letters.size(); k++) {
        prob *= conditional_prob(model, letters[k], letters[k - 1]);
    }
    return prob;
}

std::string_view formula_name(CodeFormula id) {
    switch (id) {
        case CodeFormula::kRep3:
            return "rep3";
        case CodeFormula::kDfs2Bitflip:
            return "dfs2-bitflip";
        case CodeFormula::kDfs2Depolarizing3:
            return "dfs2-depolarizing3";
        case CodeFormula::kKl5:
            return "kl5";
    }
    return "?";
}

CodeFormula parse_formula(std::string_view name) {
    for (CodeFormula id : {CodeFormula::kRep3, CodeFormula::kDfs2Bitflip, CodeFormula::kDfs2Depolarizing3,
                           CodeFormula::kKl5}) {
        if (formula_name(id) == name) {
            return id;
        }
    }
    throw LookupError("unknown failure formula '" + std::string(name) + "'");
}

FailureFormula failure_formula(CodeFormula id) {
    switch (id) {
        case CodeFormula::kRep3:
            return {"rep3", rep3};
        case CodeFormula::kDfs2Bitflip:
            return {"dfs2-bitflip", dfs2_bitflip};
        case CodeFormula::kDfs2Depolarizing3:
            return {"dfs2-depolarizing3", dfs2_depolarizing3};
        case CodeFormula::kKl5:
            return {"kl5", kl5};
    }
    throw LookupError("unknown failure formula");
}

FailureFormula dq10_printed_outer() {
    return {"dfs2-depolarizing3-printed", [](double mu, double p) {
                if (mu != 0.0) {
                    throw DomainError("the printed outer DFS form is only defined at mu = 0");
                }
                return 2.0 / 3.0 * p * (1 - p);
            }};
}

double standalone_pf(CodeFormula id, double mu, double p) {
    check_unit(mu, "mu");
    check_unit(p, "p");
    return failure_formula(id)(mu, p);
}

double concat_pf(std::span<const FailureFormula> layers, double mu, double p) {
    if (layers.empty()) {
        throw DomainError("concat_pf needs at least one layer");
    }
    check_unit(mu, "mu");
    check_unit(p, "p");
    double value = layers.back()(mu, p);
    for (size_t k = layers.size() - 1; k-- > 0;) {
        value = layers[k](0.0, value);
    }
    return value;
}

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::kLiteral:
            return "literal";
        case Variant::kPrinted:
            return "printed";
        case Variant::kBitflipInner:
            return "bitflip-inner";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    for (Variant v : {Variant::kLiteral, Variant::kPrinted, Variant::kBitflipInner}) {
        if (variant_name(v) == name) {
            return v;
        }
    }
    throw ParseError("unknown variant '" + std::string(name) + "' (expected literal|printed|bitflip-inner)");
}

std::vector<FailureFormula> code_layers(ConcatCode code, Variant variant) {
    bool ok = variant == Variant::kLiteral || (variant == Variant::kPrinted && code == ConcatCode::kDQ10) ||
              (variant == Variant::kBitflipInner && code == ConcatCode::kQD10);
    if (!ok) {
        throw DomainError("variant '" + std::string(variant_name(variant)) + "' does not apply to " +
                          std::string(code_id_name(code)));
    }
    switch (code) {
        case ConcatCode::kQD6:
            return {failure_formula(CodeFormula::kRep3), failure_formula(CodeFormula::kDfs2Bitflip)};
        case ConcatCode::kDQ6:
            return {failure_formula(CodeFormula::kDfs2Bitflip), failure_formula(CodeFormula::kRep3)};
        case ConcatCode::kQD10:
            return {failure_formula(CodeFormula::kKl5),
                    failure_formula(variant == Variant::kBitflipInner ? CodeFormula::kDfs2Bitflip
                                                                      : CodeFormula::kDfs2Depolarizing3)};
        case ConcatCode::kDQ10:
            return {variant == Variant::kPrinted ? dq10_printed_outer()
                                                 : failure_formula(CodeFormula::kDfs2Depolarizing3),
                    failure_formula(CodeFormula::kKl5)};
    }
    throw LookupError("unknown concatenated code");
}

double concat_code_pf(ConcatCode code, double mu, double p, Variant variant) {
    auto layers = code_layers(code, variant);
    return concat_pf(layers, mu, p);
}

Variant table_variant(ConcatCode code) {
    return code == ConcatCode::kQD10 ? Variant::kBitflipInner : Variant::kLiteral;
}

double entanglement_fidelity(double pf) {
    check_unit(pf, "failure probability");
    return 1 - pf;
}

double cross_block_correlation(double p, double mu) {
    NoiseModel model = NoiseModel::make(p, mu, Alphabet::kBitflip);
    double joint = 0;
    double given = 0;
    for (unsigned bits = 0; bits < 16; bits++) {
        size_t letters[4] = {(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
        double prob = chain_probability(model, letters);
        bool block1 = letters[0] == letters[1];
        bool block2 = letters[2] == letters[3];
        if (block2) {
            given += prob;
            if (block1) {
                joint += prob;
            }
        }
    }
    return joint / given;
}

double cross_block_correlation_closed_form(double p, double mu) {
    double num = 1 - (1 - p) * p * (1 - mu) *
                         (4 - 4 * p * (mu - 1) * (mu - 1) + 4 * p * p * (mu - 1) * (mu - 1) + (mu - 1) * mu);
    double den = ((1 - mu) * (1 - p) + mu) * (1 - p) + ((1 - mu) * p + mu) * p;
    return num / den;
}

std::optional<double> pseudothreshold(const std::function<double(double)> &pf_curve) {
    constexpr int kFirst = 1;
    constexpr int kLast = 499;
    constexpr double kStep = 1e-3;
    auto g = [&](double p) { return pf_curve(p) - p; };
    for (int k = kLast; k > kFirst; k--) {
        double hi = k * kStep;
        double lo = (k - 1) * kStep;
        double g_hi = g(hi);
        double g_lo = g(lo);
        if (g_hi == 0.0) {
            return hi;
        }
        if (g_lo == 0.0) {
            return lo;
        }
        if ((g_lo < 0) == (g_hi < 0)) {
            continue;
        }
        while (hi - lo > 1e-9) {
            double mid = 0.5 * (lo + hi);
            double g_mid = g(mid);
            if ((g_mid < 0) == (g_lo < 0)) {
                lo = mid;
                g_lo = g_mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }
    return std::nullopt;
}

std::function<double(double)> depth_recursion(std::function<double(double)> code_pf, int depth) {
    if (depth < 1) {
        throw DomainError("concatenation depth must be at least 1; got " + std::to_string(depth));
    }
    return [f = std::move(code_pf), depth](double p) {
        double v = p;
        for (int l = 0; l < depth; l++) {
            v = f(v);
        }
        return v;
    };
}

}  // namespace qdc
