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

#ifndef QDCONCAT_ANALYTIC_H
#define QDCONCAT_ANALYTIC_H

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdconcat/concat.h"
#include "qdconcat/pauli.h"

namespace qdc {

/// Hybrid independent-correlated single-qubit noise. Letter 0 is "no error";
/// bitflip has letters {I, X} with p_1 = p, depolarizing3 has {I, X, Y, Z}
/// with p_1 = p_2 = p_3 = p / 3.
struct NoiseModel {
    double p = 0;
    double mu = 0;
    Alphabet alphabet = Alphabet::kBitflip;

    /// Throws DomainError unless p, mu are in [0, 1].
    static NoiseModel make(double p, double mu, Alphabet alphabet);

    size_t letter_count() const;
    /// Pauli letter for an index ('I' for 0).
    char letter(size_t index) const;
    /// Marginal probability p_i.
    double marginal(size_t index) const;
};

/// p_(i|j) = (1 - mu) p_i + mu delta_ij.
double conditional_prob(const NoiseModel &model, size_t i, size_t j);

/// Probability of a letter sequence along a within-block chain: the first
/// letter from the marginal, each later one conditioned on its predecessor.
double chain_probability(const NoiseModel &model, std::span<const size_t> letters);

enum class CodeFormula { kRep3, kDfs2Bitflip, kDfs2Depolarizing3, kKl5 };

std::string_view formula_name(CodeFormula id);
CodeFormula parse_formula(std::string_view name);

/// Stand-alone failure probability of one code layer as a function of (mu, p).
struct FailureFormula {
    std::string name;
    std::function<double(double mu, double p)> evaluate;

    double operator()(double mu, double p) const { return evaluate(mu, p); }
};

FailureFormula failure_formula(CodeFormula id);

/// (2/3) r (1 - r): the simplified outer DFS layer of the ten-qubit DQ code.
/// Only defined at mu = 0 (outer level).
FailureFormula dq10_printed_outer();

/// Throws DomainError when mu or p is outside [0, 1].
double standalone_pf(CodeFormula id, double mu, double p);

/// Innermost layer (listed last) at (mu, p); every outer layer at
/// (0, previous result).
double concat_pf(std::span<const FailureFormula> layers, double mu, double p);

/// Formula choices for the concatenated codes.
///   literal:      the layer formulas of the code's own alphabet (default)
///   printed:      dq10 only, outer layer (2/3) r (1 - r)
///   bitflip-inner: qd10 only, inner DFS layer 2p(1 - p)(1 - mu)
enum class Variant { kLiteral, kPrinted, kBitflipInner };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name);

/// Layers (outermost first) for a concatenated code. Throws DomainError for
/// a variant that does not apply to the code.
std::vector<FailureFormula> code_layers(ConcatCode code, Variant variant = Variant::kLiteral);

double concat_code_pf(ConcatCode code, double mu, double p, Variant variant = Variant::kLiteral);

/// The variant whose pseudothreshold is tabulated for each code.
Variant table_variant(ConcatCode code);

/// 1 - pf. Throws DomainError outside [0, 1].
double entanglement_fidelity(double pf);

/// P(block 1 in {II, XX} | block 2 in {II, XX}) for two bit-flip pairs whose
/// four qubits form one within-row chain, by enumeration of all 16 outcomes.
double cross_block_correlation(double p, double mu);

/// Closed form of the same quantity.
double cross_block_correlation_closed_form(double p, double mu);

/// Largest root of pf(p) = p in (0, 0.5): sign changes of pf(p) - p on the
/// grid 0.001, 0.002, ..., 0.499, then bisection to 1e-9. Empty when there is
/// no sign change.
std::optional<double> pseudothreshold(const std::function<double(double)> &pf_curve);

/// L-fold self-composition of a failure curve. Throws DomainError for L < 1.
std::function<double(double)> depth_recursion(std::function<double(double)> code_pf, int depth);

}  // namespace qdc

#endif
