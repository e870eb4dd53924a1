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

#include "qdconcat/pauli.h"

#include <random>

#include "gtest/gtest.h"
#include "qdconcat/dfs.h"
#include "qdconcat/errors.h"

using namespace qdc;

namespace {

PauliString P(const char *s) {
    return PauliString::parse(s);
}

PauliString random_pauli(std::mt19937_64 &rng, size_t n) {
    uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    return PauliString(n, rng() & mask, rng() & mask, rng() & 3);
}

}  // namespace

TEST(pauli_string, parse_bits) {
    auto p = P("XIIXII");
    ASSERT_EQ(p.num_qubits(), 6);
    ASSERT_EQ(p.x_bits(), 0b001001u);
    ASSERT_EQ(p.z_bits(), 0u);
    ASSERT_EQ(p.phase(), 0);

    auto id = P("IIIIII");
    ASSERT_EQ(id.x_bits(), 0u);
    ASSERT_EQ(id.z_bits(), 0u);
    ASSERT_TRUE(id.is_identity_up_to_phase());

    auto yy = P("-YY");
    ASSERT_EQ(yy.x_bits(), 0b11u);
    ASSERT_EQ(yy.z_bits(), 0b11u);
    ASSERT_EQ(yy.phase(), 2);
}

TEST(pauli_string, parse_prefixes) {
    ASSERT_EQ(P("+X").phase(), 0);
    ASSERT_EQ(P("iX").phase(), 1);
    ASSERT_EQ(P("+iX").phase(), 1);
    ASSERT_EQ(P("-X").phase(), 2);
    ASSERT_EQ(P("-iX").phase(), 3);
    ASSERT_EQ(P("+iX").str(), "iX");
    ASSERT_EQ(P("+X").str(), "X");
}

TEST(pauli_string, parse_errors) {
    ASSERT_THROW(P(""), ParseError);
    ASSERT_THROW(P("-"), ParseError);
    ASSERT_THROW(P("XQZ"), ParseError);
    ASSERT_THROW(P("x"), ParseError);
    try {
        P("IXAZ");
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_NE(std::string(e.what()).find('2'), std::string::npos);
    }
    ASSERT_THROW(PauliString::parse(std::string(65, 'X')), CapacityError);
}

TEST(pauli_string, round_trip) {
    for (const char *s : {"XIIXII", "IIIIII", "-YY", "I", "-iXYZI", "iZZ", "ZXIXZ"}) {
        ASSERT_EQ(P(s).str(), s);
    }
    std::mt19937_64 rng(5);
    for (int k = 0; k < 500; k++) {
        auto p = random_pauli(rng, 1 + rng() % 64);
        ASSERT_EQ(PauliString::parse(p.str()), p);
    }
}

TEST(pauli_string, multiply_examples) {
    ASSERT_EQ(multiply(P("ZZ"), P("XX")).str(), "-YY");
    ASSERT_EQ(multiply(P("X"), P("Z")).str(), "-iY");
    ASSERT_EQ(multiply(P("Z"), P("X")).str(), "iY");
    ASSERT_EQ(multiply(P("X"), P("Y")).str(), "iZ");
    ASSERT_EQ(multiply(P("-iXYZ"), P("III")), P("-iXYZ"));
    ASSERT_EQ(multiply(P("IIIIII"), P("XZYIIX")), P("XZYIIX"));
    ASSERT_THROW(multiply(P("XX"), P("X")), DimensionError);
}

TEST(pauli_string, multiply_matches_dense_matrices) {
    // Every pair of two-qubit Paulis with every phase, against 4x4 matrices.
    for (uint64_t a = 0; a < 64; a++) {
        for (uint64_t b = 0; b < 64; b++) {
            PauliString pa(2, a & 3, (a >> 2) & 3, static_cast<uint8_t>((a >> 4) & 3));
            PauliString pb(2, b & 3, (b >> 2) & 3, static_cast<uint8_t>((b >> 4) & 3));
            Eigen::MatrixXcd want = pauli_matrix(pa) * pauli_matrix(pb);
            ASSERT_LT((pauli_matrix(pa * pb) - want).norm(), 1e-12) << pa << " * " << pb;
        }
    }
}

TEST(pauli_string, multiply_associative) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 2000; k++) {
        size_t n = 1 + rng() % 64;
        auto a = random_pauli(rng, n);
        auto b = random_pauli(rng, n);
        auto c = random_pauli(rng, n);
        ASSERT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(pauli_string, commutes) {
    ASSERT_TRUE(commutes(P("XZZXI"), P("IXZZX")));
    ASSERT_FALSE(commutes(P("X"), P("Z")));
    ASSERT_TRUE(commutes(P("XXXXXX"), P("ZZIIII")));
    ASSERT_TRUE(commutes(P("-iX"), P("X")));
    ASSERT_THROW(commutes(P("X"), P("XX")), DimensionError);
}

TEST(pauli_string, commutes_matches_products) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 2000; k++) {
        size_t n = 1 + rng() % 20;
        auto a = random_pauli(rng, n);
        auto b = random_pauli(rng, n);
        ASSERT_EQ(commutes(a, b), a * b == b * a);
    }
}

TEST(pauli_string, weight) {
    ASSERT_EQ(weight(P("IIIIII")), 0u);
    ASSERT_EQ(weight(P("XXXXXX")), 6u);
    ASSERT_EQ(weight(P("-YY")), 2u);
    ASSERT_EQ(weight(P("IZIYX")), 3u);
}

TEST(pauli_string, tensor) {
    ASSERT_EQ(tensor(P("XX"), P("II")).str(), "XXII");
    ASSERT_EQ(tensor(P("I"), P("X")).str(), "IX");
    ASSERT_EQ(tensor(P("-Y"), P("Y")).str(), "-YY");
    ASSERT_EQ(tensor(P("iX"), P("iZ")).str(), "-XZ");
    ASSERT_EQ(embed(P("ZY"), 5, 2).str(), "IIZYI");
    ASSERT_THROW(embed(P("ZY"), 3, 2), DimensionError);
}

TEST(pauli_string, single_and_letters) {
    ASSERT_EQ(PauliString::single(4, 2, 'Y').str(), "IIYI");
    ASSERT_EQ(P("-iXYZ").letters(), "XYZ");
    ASSERT_EQ(P("-iXYZ").letter(1), 'Y');
    ASSERT_TRUE(P("-XZ").is_hermitian());
    ASSERT_FALSE(P("iXZ").is_hermitian());
}

TEST(pauli_string, canonical_less) {
    ASSERT_TRUE(canonical_less(P("II"), P("IX")));
    ASSERT_TRUE(canonical_less(P("IZ"), P("XI")));
    ASSERT_TRUE(canonical_less(P("XY"), P("XZ")));
    ASSERT_TRUE(canonical_less(P("ZZ"), P("-ZZ")));
    ASSERT_FALSE(canonical_less(P("-ZZ"), P("ZZ")));
    ASSERT_FALSE(canonical_less(P("XX"), P("XX")));
}

TEST(pauli_string, alphabet) {
    ASSERT_EQ(alphabet_letters(Alphabet::kBitflip), std::vector<char>{'X'});
    ASSERT_EQ(alphabet_letters(Alphabet::kDepolarizing3), (std::vector<char>{'X', 'Y', 'Z'}));
    ASSERT_EQ(parse_alphabet("depolarizing3"), Alphabet::kDepolarizing3);
    ASSERT_EQ(alphabet_name(Alphabet::kBitflip), "bitflip");
    ASSERT_THROW(parse_alphabet("amplitude"), ParseError);
}
