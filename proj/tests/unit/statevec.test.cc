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

#include "qdconcat/statevec.h"

#include <cmath>

#include "common/fixtures.h"
#include "gtest/gtest.h"
#include "qdconcat/dfs.h"
#include "qdconcat/errors.h"

using namespace qdc;
using namespace qdc::testing;

namespace {

PauliString P(const char *s) {
    return PauliString::parse(s);
}

StateVector kets(size_t n, const Kets &k) {
    return StateVector::from_kets(n, k);
}

Kets flip_sign(Kets k, const std::string &term) {
    for (auto &[amp, bits] : k) {
        if (bits == term) {
            amp = -amp;
        }
    }
    return k;
}

}  // namespace

TEST(statevec, basis_and_gates) {
    auto plus = Circuit(1).h(0).apply(StateVector::basis(1));
    ASSERT_NEAR(plus[0].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(plus[1].real(), 1 / std::sqrt(2.0), 1e-15);
    auto bell = Circuit(2).h(0).cnot(0, 1).apply(StateVector::basis(2));
    ASSERT_TRUE(equal_up_to_global_phase(bell, kets(2, {{1, "00"}, {1, "11"}})));
    ASSERT_EQ(StateVector::basis(3, qubit_mask(3, 0))[0b100], Amplitude(1));
    ASSERT_THROW(StateVector::basis(13), CapacityError);
    ASSERT_THROW(StateVector::from_amplitudes(1, {0, 0}), DomainError);
}

TEST(statevec, apply_pauli) {
    auto s = apply_pauli(StateVector::basis(2), P("XI"));
    ASSERT_EQ(s[0b10], Amplitude(1));
    auto y = apply_pauli(StateVector::basis(1), P("Y"));
    ASSERT_NEAR(std::abs(y[1] - Amplitude(0, 1)), 0, 1e-15);
    auto mz = apply_pauli(StateVector::basis(1, 1), P("-Z"));
    ASSERT_NEAR(std::abs(mz[1] - Amplitude(1)), 0, 1e-15);
}

TEST(statevec, six_qubit_encoders) {
    auto qd0 = qd6_encoder().apply(StateVector::basis(6));
    auto qd1 = qd6_encoder().apply(StateVector::basis(6, qubit_mask(6, 0)));
    ASSERT_FALSE(first_mismatch(qd0, expand_kets({{1, "000"}}, kDfsZero, kDfsOne)).has_value());
    ASSERT_FALSE(first_mismatch(qd1, expand_kets({{1, "111"}}, kDfsZero, kDfsOne)).has_value());
    auto dq0 = dq6_encoder().apply(StateVector::basis(6));
    auto dq1 = dq6_encoder().apply(StateVector::basis(6, qubit_mask(6, 0)));
    ASSERT_FALSE(first_mismatch(dq0, kets(6, {{1, "000000"}, {1, "111111"}})).has_value());
    ASSERT_FALSE(first_mismatch(dq1, kets(6, {{1, "000111"}, {1, "111000"}})).has_value());
}

TEST(statevec, expectation) {
    auto [zero, one] = encoded_codewords(ConcatCode::kQD6);
    ASSERT_NEAR(expectation(zero, P("XXIIII")).real(), 1.0, 1e-12);
    ASSERT_NEAR(std::abs(expectation(zero, P("XIIIII"))), 0.0, 1e-12);
    ASSERT_NEAR(expectation(StateVector::basis(1), P("Z")).real(), 1.0, 1e-15);
    ASSERT_NEAR(expectation(StateVector::basis(1, 1), P("Z")).real(), -1.0, 1e-15);
    ASSERT_NEAR(std::abs(inner_product(zero, one)), 0.0, 1e-12);
}

TEST(statevec, encoded_codewords_are_stabilized) {
    for (ConcatCode code : all_code_ids()) {
        auto [zero, one] = encoded_codewords(code);
        auto cc = ConcatenatedCode::build(standard_spec(code));
        for (const auto &gc : cc.generator_classes) {
            for (const auto &r : gc.representatives) {
                ASSERT_NEAR(expectation(zero, r).real(), 1.0, 1e-10) << code_id_name(code) << " " << r.str();
                ASSERT_NEAR(expectation(one, r).real(), 1.0, 1e-10) << code_id_name(code) << " " << r.str();
            }
        }
        const PauliString &lz = cc.code.logical_z()[0];
        ASSERT_NEAR(expectation(zero, lz).real(), 1.0, 1e-10);
        ASSERT_NEAR(expectation(one, lz).real(), -1.0, 1e-10);
        ASSERT_TRUE(equal_up_to_global_phase(apply_pauli(zero, cc.code.logical_x()[0]), one));
    }
}

TEST(statevec, six_qubit_routes_agree) {
    auto dfs = codewords_from_stabilizers(builtin("dfs-2"));
    auto rep = codewords_from_stabilizers(builtin("repetition-3"));
    auto [qd0, qd1] = encoded_codewords(ConcatCode::kQD6);
    ASSERT_TRUE(equal_up_to_global_phase(qd0, substitute(rep.first, dfs.first, dfs.second)));
    ASSERT_TRUE(equal_up_to_global_phase(qd1, substitute(rep.second, dfs.first, dfs.second)));
    auto [dq0, dq1] = encoded_codewords(ConcatCode::kDQ6);
    ASSERT_TRUE(equal_up_to_global_phase(dq0, substitute(dfs.first, rep.first, rep.second)));
    ASSERT_TRUE(equal_up_to_global_phase(dq1, substitute(dfs.second, rep.first, rep.second)));
}

TEST(statevec, qd10_zero_matches_reference) {
    auto [zero, one] = encoded_codewords(ConcatCode::kQD10);
    ASSERT_FALSE(first_mismatch(zero, expand_kets(kQd10ZeroD, kDfsZero, kDfsOne)).has_value());
}

TEST(statevec, qd10_one_differs_from_reference_in_one_term) {
    auto [zero, one] = encoded_codewords(ConcatCode::kQD10);
    auto reference = expand_kets(kQd10OneD, kDfsZero, kDfsOne);
    auto mismatch = first_mismatch(one, reference);
    ASSERT_TRUE(mismatch.has_value());
    // |11010>_D expands first to |01 01 00 01 00>.
    ASSERT_EQ(*mismatch, 0b0101000100u);
    ASSERT_FALSE(first_mismatch(one, expand_kets(flip_sign(kQd10OneD, "11010"), kDfsZero, kDfsOne)).has_value());
    auto kl5 = builtin("knill-laflamme-5");
    auto logical = StateVector::from_kets(5, kQd10OneD);
    for (const auto &g : kl5.generators()) {
        ASSERT_NEAR(expectation(logical, g).real(), 0.75, 1e-12);
    }
}

TEST(statevec, dq10_is_substitution) {
    auto kl5 = codewords_from_stabilizers(builtin("knill-laflamme-5"));
    auto [zero, one] = encoded_codewords(ConcatCode::kDQ10);
    ASSERT_TRUE(equal_up_to_global_phase(zero, substitute(kets(2, kDfsZero), kl5.first, kl5.second)));
    ASSERT_TRUE(equal_up_to_global_phase(one, substitute(kets(2, kDfsOne), kl5.first, kl5.second)));
}

TEST(statevec, knill_laflamme) {
    auto kl5 = builtin("knill-laflamme-5");
    auto [z5, o5] = codewords_from_stabilizers(kl5);
    auto errors = correctable_errors(kl5, Alphabet::kDepolarizing3);
    ASSERT_EQ(errors.size(), 16u);
    ASSERT_TRUE(kl_check(z5, o5, errors).ok);

    auto rep = builtin("repetition-3");
    auto [z3, o3] = codewords_from_stabilizers(rep);
    std::vector<PauliString> bitflips{P("III"), P("XII"), P("IXI"), P("IIX")};
    ASSERT_TRUE(kl_check(z3, o3, bitflips).ok);
    bitflips.push_back(P("ZII"));
    auto bad = kl_check(z3, o3, bitflips);
    ASSERT_FALSE(bad.ok);
    ASSERT_TRUE(bad.witness.has_value());
    ASSERT_FALSE(bad.witness->reason.empty());
    ASSERT_THROW(kl_check(z3, z3, bitflips), DomainError);
}

TEST(statevec, degenerate_errors_act_identically) {
    for (ConcatCode code : {ConcatCode::kQD6, ConcatCode::kDQ6}) {
        auto [zero, one] = encoded_codewords(code);
        auto cls = equivalence_classes(standard_spec(code));
        for (const auto &set : cls.sets) {
            for (const auto &w : {zero, one}) {
                auto ref = apply_pauli(w, set.front());
                for (const auto &e : set) {
                    ASSERT_TRUE(equal_up_to_global_phase(apply_pauli(w, e), ref)) << e.str();
                }
            }
        }
    }
}

TEST(statevec, dfs_invariance_examples) {
    auto g = AbelianErrorGroup::from_elements({P("II"), P("XX")});
    auto chars = characters(g);
    ASSERT_TRUE(dfs_invariance(kets(2, {{0.6, "00"}, {0.6, "11"}, {0.8, "01"}, {0.8, "10"}}), g, chars[0]));
    ASSERT_FALSE(dfs_invariance(kets(2, {{1, "00"}}), g, chars[0]));
    ASSERT_TRUE(dfs_invariance(kets(2, {{1, "01"}, {-1, "10"}}), g, chars[1]));
}
