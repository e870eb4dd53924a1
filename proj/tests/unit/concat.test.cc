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

#include "qdconcat/concat.h"

#include <random>
#include <set>

#include "common/fixtures.h"
#include "gtest/gtest.h"
#include "qdconcat/errors.h"

using namespace qdc;
using qdc::testing::expand_labels;
using qdc::testing::kDfsMultiplicity;
using qdc::testing::letter_set;

namespace {

using LetterSets = std::set<std::set<std::string>>;

LetterSets letters_of(const EquivalenceClass &cls) {
    LetterSets out;
    for (const auto &s : cls.sets) {
        out.insert(letter_set(s));
    }
    return out;
}

LetterSets parse_sets(const std::vector<std::vector<std::string>> &sets) {
    LetterSets out;
    for (const auto &s : sets) {
        out.insert(std::set<std::string>(s.begin(), s.end()));
    }
    return out;
}

std::set<std::string> strs(const std::vector<PauliString> &ops) {
    std::set<std::string> out;
    for (const auto &p : ops) {
        out.insert(p.str());
    }
    return out;
}

/// Identity positions stay unexpanded inside a lifted generator.
const std::vector<std::pair<char, std::vector<std::string>>> kLiftedGenerator = {
    {'I', {"II"}}, {'X', {"XI", "IX"}}, {'Y', {"YZ", "ZY"}}, {'Z', {"ZZ", "-YY"}}};

}  // namespace

TEST(concat, sizes) {
    ASSERT_EQ(concat_size(3, 1, 2, 1), std::make_pair(size_t{6}, size_t{1}));
    ASSERT_EQ(concat_size(5, 1, 2, 1), std::make_pair(size_t{10}, size_t{1}));
    ASSERT_EQ(concat_size(3, 1, 4, 2), std::make_pair(size_t{12}, size_t{2}));
    ASSERT_EQ(concat_size(4, 2, 4, 2), std::make_pair(size_t{8}, size_t{2}));
    ASSERT_THROW(concat_size(0, 1, 2, 1), DomainError);
    ASSERT_THROW(concat_size(3, 0, 2, 1), DomainError);
    ASSERT_THROW(concat_size(3, 4, 2, 1), DomainError);
}

TEST(concat, names) {
    for (ConcatCode c : all_code_ids()) {
        ASSERT_EQ(parse_code_id(code_id_name(c)), c);
    }
    ASSERT_EQ(parse_order("qd"), ConcatOrder::kQD);
    ASSERT_EQ(parse_order("dq"), ConcatOrder::kDQ);
    ASSERT_THROW(parse_order("qq"), ParseError);
    ASSERT_THROW(parse_code_id("qd8"), LookupError);
}

TEST(concat, lift_logical) {
    auto dfs = builtin("dfs-2");
    ASSERT_EQ(strs(lift_logical(dfs, 'I')), (std::set<std::string>{"II", "XX"}));
    ASSERT_EQ(strs(lift_logical(dfs, 'X')), (std::set<std::string>{"XI", "IX"}));
    ASSERT_EQ(strs(lift_logical(dfs, 'Y')), (std::set<std::string>{"YZ", "ZY"}));
    ASSERT_EQ(strs(lift_logical(dfs, 'Z')), (std::set<std::string>{"ZZ", "-YY"}));
    auto rep = builtin("repetition-3");
    ASSERT_EQ(strs(lift_logical(rep, 'X')), (std::set<std::string>{"XXX", "-YYX", "-YXY", "-XYY"}));
    ASSERT_EQ(lift_logical_passive(rep, 'X').size(), 1u);
    ASSERT_EQ(lift_logical_passive(dfs, 'Z').size(), 2u);
    auto kl5 = builtin("knill-laflamme-5");
    ASSERT_EQ(lift_logical(kl5, 'Z').size(), 16u);
    StabilizerCode two("two", 2, 2, {}, {PauliString::parse("XI"), PauliString::parse("IX")},
                       {PauliString::parse("ZI"), PauliString::parse("IZ")});
    ASSERT_THROW(lift_logical(two, 'X'), UnsupportedError);
}

TEST(concat, lift_logical_realizes_the_operator) {
    // Each realization is the canonical operator times a stabilizer element.
    for (const char *name : {"repetition-3", "knill-laflamme-5", "dfs-2"}) {
        auto code = builtin(name);
        for (char label : {'I', 'X', 'Y', 'Z'}) {
            PauliString canon = logical_operator(code, label);
            for (const auto &r : lift_logical(code, label)) {
                auto cls = classify(code, multiply(r, canon));
                ASSERT_EQ(cls.kind, ErrorKind::kStabilizer) << name << " " << label << " " << r.str();
                ASSERT_EQ(cls.stabilizer_phase, 0) << name << " " << label << " " << r.str();
            }
        }
    }
}

TEST(concat, spec_validation) {
    auto rep = builtin("repetition-3");
    auto dfs = builtin("dfs-2");
    auto kl5 = builtin("knill-laflamme-5");
    ASSERT_THROW(make_concat_spec(rep, kl5, ConcatOrder::kQD), StructureError);
    ASSERT_THROW(make_concat_spec(rep, kl5, ConcatOrder::kDQ), StructureError);
    StabilizerCode two("two", 2, 2, {}, {PauliString::parse("XI"), PauliString::parse("IX")},
                       {PauliString::parse("ZI"), PauliString::parse("IZ")});
    ASSERT_THROW(make_concat_spec(rep, two, ConcatOrder::kQD), UnsupportedError);

    auto qd6 = make_concat_spec(rep, dfs, ConcatOrder::kQD);
    ASSERT_EQ(qd6.n_cc, 6u);
    ASSERT_EQ(qd6.k_cc, 1u);
    ASSERT_EQ(qd6.alphabet, Alphabet::kBitflip);
    ASSERT_EQ(qd6.blocks.size(), 3u);
    for (size_t b = 0; b < 3; b++) {
        ASSERT_EQ(qd6.blocks[b].begin, 2 * b);
        ASSERT_EQ(qd6.blocks[b].size, 2u);
    }
    ASSERT_EQ(standard_spec(ConcatCode::kQD10).alphabet, Alphabet::kDepolarizing3);
    ASSERT_EQ(standard_spec(ConcatCode::kDQ10).alphabet, Alphabet::kDepolarizing3);
    ASSERT_EQ(standard_spec(ConcatCode::kDQ6).alphabet, Alphabet::kBitflip);
    ASSERT_EQ(standard_spec(ConcatCode::kDQ10).blocks[1].begin, 5u);
}

TEST(concat, correctable_errors) {
    auto rep = builtin("repetition-3");
    ASSERT_EQ(strs(correctable_errors(rep, Alphabet::kBitflip)),
              (std::set<std::string>{"III", "XII", "IXI", "IIX"}));
    ASSERT_EQ(correctable_errors(builtin("knill-laflamme-5"), Alphabet::kDepolarizing3).size(), 16u);
    ASSERT_EQ(strs(correctable_errors(builtin("dfs-2"), Alphabet::kBitflip)), (std::set<std::string>{"II", "XX"}));
}

TEST(concat, qd6_generators) {
    auto spec = standard_spec(ConcatCode::kQD6);
    auto classes = build_generators(spec);
    ASSERT_EQ(classes.size(), 5u);
    const char *blockwise[] = {"XXIIII", "IIXXII", "IIIIXX"};
    for (size_t i = 0; i < 3; i++) {
        ASSERT_TRUE(classes[i].passive);
        ASSERT_EQ(strs(classes[i].representatives), std::set<std::string>{blockwise[i]});
    }
    ASSERT_FALSE(classes[3].passive);
    ASSERT_FALSE(classes[4].passive);
    ASSERT_EQ(strs(classes[3].representatives), strs(expand_labels("ZZI", kLiftedGenerator)));
    ASSERT_EQ(strs(classes[4].representatives), strs(expand_labels("ZIZ", kLiftedGenerator)));
    ASSERT_TRUE(validate(concatenated_code(spec)).ok());
}

TEST(concat, dq6_generators) {
    auto classes = build_generators(standard_spec(ConcatCode::kDQ6));
    ASSERT_EQ(classes.size(), 5u);
    const char *want[] = {"ZZIIII", "ZIZIII", "IIIZZI", "IIIZIZ", "XXXXXX"};
    for (size_t i = 0; i < 5; i++) {
        ASSERT_EQ(strs(classes[i].representatives), std::set<std::string>{want[i]});
        ASSERT_EQ(classes[i].passive, i == 4);
    }
}

TEST(concat, qd10_generators) {
    auto spec = standard_spec(ConcatCode::kQD10);
    auto classes = build_generators(spec);
    ASSERT_EQ(classes.size(), 9u);
    for (size_t i = 0; i < 5; i++) {
        ASSERT_TRUE(classes[i].passive);
        ASSERT_EQ(classes[i].representatives.size(), 1u);
        ASSERT_EQ(classes[i].canonical(), embed(PauliString::parse("XX"), 10, 2 * i));
    }
    const char *outer[] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    for (size_t i = 0; i < 4; i++) {
        ASSERT_FALSE(classes[5 + i].passive);
        ASSERT_EQ(classes[5 + i].representatives.size(), 16u);
        ASSERT_EQ(strs(classes[5 + i].representatives), strs(expand_labels(outer[i], kLiftedGenerator)));
    }
    ASSERT_TRUE(validate(concatenated_code(spec)).ok());
}

TEST(concat, dq10_generators) {
    auto spec = standard_spec(ConcatCode::kDQ10);
    auto classes = build_generators(spec);
    ASSERT_EQ(classes.size(), 9u);
    const char *inner[] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    for (size_t b = 0; b < 2; b++) {
        for (size_t i = 0; i < 4; i++) {
            std::string want = b == 0 ? std::string(inner[i]) + "IIIII" : "IIIII" + std::string(inner[i]);
            ASSERT_EQ(strs(classes[4 * b + i].representatives), std::set<std::string>{want});
            ASSERT_FALSE(classes[4 * b + i].passive);
        }
    }
    ASSERT_TRUE(classes[8].passive);
    ASSERT_EQ(strs(classes[8].representatives), std::set<std::string>{"XXXXXXXXXX"});
    ASSERT_TRUE(validate(concatenated_code(spec)).ok());
}

TEST(concat, generator_classes_are_degenerate) {
    for (ConcatCode c : all_code_ids()) {
        auto cc = ConcatenatedCode::build(standard_spec(c));
        for (const auto &gc : cc.generator_classes) {
            for (const auto &set : cc.equivalence.sets) {
                for (const auto &e : set) {
                    bool first = commutes(gc.representatives.front(), e);
                    for (const auto &r : gc.representatives) {
                        ASSERT_EQ(commutes(r, e), first) << code_id_name(c) << " " << r.str() << " " << e.str();
                    }
                }
            }
            if (gc.passive) {
                for (const auto &r : gc.representatives) {
                    ASSERT_EQ(classify(cc.code, r).kind, ErrorKind::kStabilizer);
                }
            }
        }
    }
}

TEST(concat, qd6_equivalence_sets) {
    auto cls = equivalence_classes(standard_spec(ConcatCode::kQD6));
    ASSERT_EQ(cls.set_count(), 4u);
    ASSERT_EQ(cls.total(), 32u);
    auto reference = parse_sets({
        {"IIIIII", "IIIIXX", "IIXXII", "IIXXXX", "XXXXXX", "XXIIII", "XXIIXX", "XXXXII"},
        {"XIIIII", "XIIIXX", "XIXXII", "XIXXXX", "IXIIII", "IXIIXX", "IXXXII", "IXXXXX"},
        {"IIXIII", "IIXIXX", "IIIXII", "IIIXXX", "XXXIII", "XXXIXX", "XXIXII", "XXIXXX"},
        {"IIIIXI", "IIIIIX", "IIXXXI", "IIXXIX", "XXIIXI", "XXIIIX", "XXXXXI", "XXXXIX"},
    });
    ASSERT_EQ(letters_of(cls), reference);
}

TEST(concat, dq6_equivalence_sets) {
    auto cls = equivalence_classes(standard_spec(ConcatCode::kDQ6));
    ASSERT_EQ(cls.set_count(), 16u);
    ASSERT_EQ(cls.total(), 32u);
    auto reference = parse_sets({
        {"XIIXII", "IXXIXX"}, {"XIIIXI", "IXXXIX"}, {"XIIIIX", "IXXXXI"}, {"XIIIII", "IXXXXX"},
        {"IIXXII", "XXIIXX"}, {"IIXIXI", "XXIXIX"}, {"IIXIIX", "XXIXXI"}, {"IIXIII", "XXIXXX"},
        {"IXIXII", "XIXIXX"}, {"IXIIXI", "XIXXIX"}, {"IXIIIX", "XIXXXI"}, {"IXIIII", "XIXXXX"},
        {"IIIXII", "XXXIXX"}, {"IIIIXI", "XXXXIX"}, {"IIIIIX", "XXXXXI"}, {"IIIIII", "XXXXXX"},
    });
    ASSERT_EQ(letters_of(cls), reference);
}

TEST(concat, ten_qubit_equivalence_counts) {
    auto qd = equivalence_classes(standard_spec(ConcatCode::kQD10));
    ASSERT_EQ(qd.set_count(), 16u);
    for (const auto &s : qd.sets) {
        ASSERT_EQ(s.size(), 32u);
    }
    auto dq = equivalence_classes(standard_spec(ConcatCode::kDQ10));
    ASSERT_EQ(dq.set_count(), 256u);
    ASSERT_EQ(dq.total(), 512u);
    std::set<std::string> seen;
    for (const auto &s : dq.sets) {
        ASSERT_EQ(s.size(), 2u);
        ASSERT_EQ(multiply(s[0], s[1]).letters(), "XXXXXXXXXX");
        for (const auto &e : s) {
            ASSERT_TRUE(seen.insert(e.letters()).second);
        }
    }
    // The identity-on-outer sets of the ten-qubit QD code are exactly the passive group.
    std::set<std::string> passive_group;
    for (uint32_t m = 0; m < 32; m++) {
        std::string s;
        for (size_t b = 0; b < 5; b++) {
            s += (m >> b) & 1 ? "XX" : "II";
        }
        passive_group.insert(s);
    }
    ASSERT_EQ(letter_set(passive_set(standard_spec(ConcatCode::kQD10))), passive_group);
}

TEST(concat, equivalence_sets_use_dfs_multiplicity) {
    // Every QD set is the blockwise expansion of one outer error.
    auto spec = standard_spec(ConcatCode::kQD6);
    auto cls = equivalence_classes(spec);
    LetterSets want;
    for (const char *outer : {"III", "XII", "IXI", "IIX"}) {
        want.insert(letter_set(expand_labels(outer, kDfsMultiplicity)));
    }
    ASSERT_EQ(letters_of(cls), want);
}

TEST(concat, within_set_degenerate_across_sets_not) {
    for (ConcatCode c : {ConcatCode::kQD6, ConcatCode::kDQ6}) {
        auto cc = ConcatenatedCode::build(standard_spec(c));
        const auto &sets = cc.equivalence.sets;
        for (size_t a = 0; a < sets.size(); a++) {
            for (size_t b = 0; b < sets.size(); b++) {
                for (const auto &x : sets[a]) {
                    for (const auto &y : sets[b]) {
                        ASSERT_EQ(are_degenerate(cc.code, x, y), a == b) << x.str() << " " << y.str();
                    }
                }
            }
        }
    }
}

TEST(concat, sampled_cross_set_non_degeneracy) {
    std::mt19937_64 rng(7);
    for (ConcatCode c : {ConcatCode::kQD10, ConcatCode::kDQ10}) {
        auto cc = ConcatenatedCode::build(standard_spec(c));
        const auto &sets = cc.equivalence.sets;
        std::uniform_int_distribution<size_t> pick_set(0, sets.size() - 1);
        for (int t = 0; t < 1000; t++) {
            size_t a = pick_set(rng);
            size_t b = pick_set(rng);
            const auto &x = sets[a][rng() % sets[a].size()];
            const auto &y = sets[b][rng() % sets[b].size()];
            ASSERT_EQ(are_degenerate(cc.code, x, y), a == b) << x.str() << " " << y.str();
        }
    }
}

TEST(concat, passive_sets) {
    auto qd6 = letter_set(passive_set(standard_spec(ConcatCode::kQD6)));
    ASSERT_EQ(qd6, (std::set<std::string>{"IIIIII", "IIIIXX", "IIXXII", "IIXXXX", "XXXXXX", "XXIIII", "XXIIXX",
                                          "XXXXII"}));
    ASSERT_EQ(letter_set(passive_set(standard_spec(ConcatCode::kDQ6))),
              (std::set<std::string>{"IIIIII", "XXXXXX"}));
    ASSERT_EQ(letter_set(passive_set(standard_spec(ConcatCode::kDQ10))),
              (std::set<std::string>{"IIIIIIIIII", "XXXXXXXXXX"}));
    for (ConcatCode c : all_code_ids()) {
        auto cc = ConcatenatedCode::build(standard_spec(c));
        for (const auto &e : passive_set(cc.code, cc.equivalence)) {
            ASSERT_EQ(classify(cc.code, e).kind, ErrorKind::kStabilizer) << e.str();
        }
    }
}

TEST(concat, decoder_tables) {
    size_t want[] = {4, 16, 16, 256};
    auto ids = all_code_ids();
    for (size_t i = 0; i < ids.size(); i++) {
        auto cc = ConcatenatedCode::build(standard_spec(ids[i]));
        ASSERT_EQ(cc.decoder.size(), want[i]);
        const PauliString *zero = cc.decoder.lookup(Syndrome{0, cc.code.generators().size()});
        ASSERT_NE(zero, nullptr);
        ASSERT_TRUE(zero->is_identity_up_to_phase());
        for (const auto &set : cc.equivalence.sets) {
            const PauliString *fix = cc.decoder.lookup(syndrome(cc.code, set.front()));
            ASSERT_NE(fix, nullptr);
            for (const auto &e : set) {
                ASSERT_EQ(classify(cc.code, multiply(*fix, e)).kind, ErrorKind::kStabilizer);
            }
        }
    }
    DecoderTable t;
    t.insert(Syndrome{1, 2}, PauliString::parse("XI"));
    ASSERT_THROW(t.insert(Syndrome{1, 2}, PauliString::parse("IX")), ConsistencyError);
}

TEST(concat, hamming_efficiency) {
    struct Row {
        ConcatCode code;
        Rational phi_prime;
    };
    for (const Row &row : {Row{ConcatCode::kQD6, {2, 5}}, Row{ConcatCode::kDQ6, {4, 5}},
                           Row{ConcatCode::kQD10, {4, 9}}, Row{ConcatCode::kDQ10, {8, 9}}}) {
        auto spec = standard_spec(row.code);
        auto h = hamming_efficiency(equivalence_classes(spec), spec.n_cc, spec.k_cc);
        ASSERT_EQ(h.phi_exact, (Rational{1, 1}));
        ASSERT_EQ(h.phi_prime_exact, row.phi_prime);
        ASSERT_DOUBLE_EQ(h.phi, 1.0);
        ASSERT_DOUBLE_EQ(h.phi_prime, row.phi_prime.value());
    }
    EquivalenceClass trivial{{{PauliString(1)}}};
    auto h = hamming_efficiency(trivial, 1, 0);
    ASSERT_EQ(h.phi, 0.0);
    ASSERT_EQ(h.phi_prime, 0.0);
    ASSERT_EQ(h.phi_exact->num, 0);
    EquivalenceClass three{{{PauliString(2)}, {PauliString::parse("XI")}, {PauliString::parse("IX")}}};
    auto h3 = hamming_efficiency(three, 2, 0);
    ASSERT_FALSE(h3.phi_exact.has_value());
    ASSERT_NEAR(h3.phi, std::log2(3.0) / 2, 1e-15);
    ASSERT_THROW(hamming_efficiency(EquivalenceClass{}, 2, 0), DomainError);
    ASSERT_THROW(hamming_efficiency(trivial, 1, 1), DomainError);
    ASSERT_EQ((Rational{2, 5}).str(), "2/5");
}
