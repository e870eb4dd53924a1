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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "qdconcat/errors.h"

namespace qdc {

namespace {

/// Tensor products of one choice per block, block 0 varying slowest.
std::vector<PauliString> expand_blocks(const std::vector<std::vector<PauliString>> &options) {
    std::vector<PauliString> acc{PauliString(0)};
    for (const auto &choices : options) {
        std::vector<PauliString> next;
        next.reserve(acc.size() * choices.size());
        for (const auto &prefix : acc) {
            for (const auto &c : choices) {
                next.push_back(tensor(prefix, c));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

PauliString add_phase(const PauliString &p, uint8_t phase) {
    return p.with_phase(static_cast<uint8_t>((p.phase() + phase) & 3));
}

/// Replaces each letter of an outer-level operator with the inner code's
/// canonical logical operator.
PauliString lift_canonical(const StabilizerCode &inner, const PauliString &outer_op) {
    PauliString out(0);
    for (size_t j = 0; j < outer_op.num_qubits(); j++) {
        out = tensor(out, logical_operator(inner, outer_op.letter(j)));
    }
    return add_phase(out, outer_op.phase());
}

std::vector<PauliString> passive_subgroup(const StabilizerCode &code) {
    std::vector<PauliString> gens;
    for (size_t i = 0; i < code.generators().size(); i++) {
        if (code.passive_mask()[i]) {
            gens.push_back(code.generators()[i]);
        }
    }
    std::vector<PauliString> out;
    for (uint64_t m = 0; m < (uint64_t{1} << gens.size()); m++) {
        PauliString p(code.n());
        for (size_t i = 0; i < gens.size(); i++) {
            if ((m >> i) & 1) {
                p = multiply(p, gens[i]);
            }
        }
        out.push_back(p);
    }
    return out;
}

bool distinguishes_weight_one(const StabilizerCode &code, Alphabet alphabet) {
    std::set<uint64_t> seen;
    for (char letter : alphabet_letters(alphabet)) {
        for (size_t q = 0; q < code.n(); q++) {
            Syndrome s = syndrome(code, PauliString::single(code.n(), q, letter));
            if (s.is_zero() || !seen.insert(s.bits).second) {
                return false;
            }
        }
    }
    return true;
}

void sort_canonical(std::vector<PauliString> &ops) {
    std::sort(ops.begin(), ops.end(), canonical_less);
}

}  // namespace

std::string_view order_name(ConcatOrder order) {
    return order == ConcatOrder::kQD ? "qd" : "dq";
}

ConcatOrder parse_order(std::string_view name) {
    if (name == "qd" || name == "QD") {
        return ConcatOrder::kQD;
    }
    if (name == "dq" || name == "DQ") {
        return ConcatOrder::kDQ;
    }
    throw ParseError("unknown concatenation order '" + std::string(name) + "' (expected qd|dq)");
}

std::string_view code_id_name(ConcatCode code) {
    switch (code) {
        case ConcatCode::kQD6:
            return "qd6";
        case ConcatCode::kDQ6:
            return "dq6";
        case ConcatCode::kQD10:
            return "qd10";
        case ConcatCode::kDQ10:
            return "dq10";
    }
    return "?";
}

ConcatCode parse_code_id(std::string_view name) {
    for (ConcatCode c : all_code_ids()) {
        if (code_id_name(c) == name) {
            return c;
        }
    }
    throw LookupError("unknown concatenated code '" + std::string(name) + "'; valid: qd6, dq6, qd10, dq10");
}

std::vector<ConcatCode> all_code_ids() {
    return {ConcatCode::kQD6, ConcatCode::kDQ6, ConcatCode::kQD10, ConcatCode::kDQ10};
}

std::pair<size_t, size_t> concat_size(size_t n_o, size_t k_o, size_t n_i, size_t k_i) {
    if (n_o == 0 || k_o == 0 || n_i == 0 || k_i == 0) {
        throw DomainError("code sizes must be positive");
    }
    if (k_o > n_o || k_i > n_i) {
        throw DomainError("a code cannot encode more logical than physical qubits");
    }
    if (n_o % k_i == 0) {
        return {n_o * n_i / k_i, k_o};
    }
    return {n_o * n_i, k_o * k_i};
}

ConcatSpec make_concat_spec(
    StabilizerCode outer, StabilizerCode inner, ConcatOrder order, std::optional<Alphabet> alphabet) {
    if (inner.k() != 1) {
        throw UnsupportedError("structural concatenation requires an inner code with k = 1");
    }
    if (order == ConcatOrder::kQD && (inner.generators().empty() || !inner.all_passive())) {
        throw StructureError("QD concatenation needs a DFS (fully passive) inner code; got '" + inner.name() + "'");
    }
    if (order == ConcatOrder::kDQ && (outer.generators().empty() || !outer.all_passive())) {
        throw StructureError("DQ concatenation needs a DFS (fully passive) outer code; got '" + outer.name() + "'");
    }
    auto [n_cc, k_cc] = concat_size(outer.n(), outer.k(), inner.n(), inner.k());
    if (n_cc > PauliString::kMaxQubits) {
        throw CapacityError("concatenated code exceeds 64 qubits");
    }
    const StabilizerCode &active = order == ConcatOrder::kQD ? outer : inner;
    Alphabet chosen = Alphabet::kBitflip;
    if (alphabet) {
        chosen = *alphabet;
    } else if (distinguishes_weight_one(active, Alphabet::kDepolarizing3)) {
        chosen = Alphabet::kDepolarizing3;
    }
    std::vector<Block> blocks;
    for (size_t b = 0; b < outer.n(); b++) {
        blocks.push_back({b * inner.n(), inner.n()});
    }
    return ConcatSpec{std::move(outer), std::move(inner), order, chosen, std::move(blocks), n_cc, k_cc};
}

ConcatSpec standard_spec(ConcatCode code) {
    switch (code) {
        case ConcatCode::kQD6:
            return make_concat_spec(builtin("repetition-3"), builtin("dfs-2"), ConcatOrder::kQD);
        case ConcatCode::kDQ6:
            return make_concat_spec(builtin("dfs-2"), builtin("repetition-3"), ConcatOrder::kDQ);
        case ConcatCode::kQD10:
            return make_concat_spec(builtin("knill-laflamme-5"), builtin("dfs-2"), ConcatOrder::kQD);
        case ConcatCode::kDQ10:
            return make_concat_spec(builtin("dfs-2"), builtin("knill-laflamme-5"), ConcatOrder::kDQ);
    }
    throw LookupError("unknown concatenated code");
}

std::vector<PauliString> lift_logical(const StabilizerCode &inner, char label) {
    PauliString rep = logical_operator(inner, label);
    std::vector<PauliString> out;
    for (const PauliString &s : stabilizer_group(inner)) {
        out.push_back(multiply(rep, s));
    }
    return out;
}

std::vector<PauliString> lift_logical_passive(const StabilizerCode &inner, char label) {
    PauliString rep = logical_operator(inner, label);
    std::vector<PauliString> out;
    for (const PauliString &s : passive_subgroup(inner)) {
        out.push_back(multiply(rep, s));
    }
    return out;
}

std::vector<PauliString> correctable_errors(const StabilizerCode &code, Alphabet alphabet) {
    if (!code.generators().empty() && code.all_passive()) {
        return stabilizer_group(code);
    }
    std::vector<PauliString> out{PauliString(code.n())};
    for (char letter : alphabet_letters(alphabet)) {
        for (size_t q = 0; q < code.n(); q++) {
            out.push_back(PauliString::single(code.n(), q, letter));
        }
    }
    return out;
}

std::vector<GeneratorClass> build_generators(const ConcatSpec &spec) {
    const StabilizerCode &inner = spec.inner;
    const StabilizerCode &outer = spec.outer;
    if (inner.k() != 1) {
        throw UnsupportedError("structural concatenation requires an inner code with k = 1");
    }
    std::vector<GeneratorClass> classes;
    for (const Block &block : spec.blocks) {
        for (size_t i = 0; i < inner.generators().size(); i++) {
            classes.push_back({{embed(inner.generators()[i], spec.n_cc, block.begin)}, inner.passive_mask()[i]});
        }
    }
    PauliString inner_identity(inner.n());
    for (size_t i = 0; i < outer.generators().size(); i++) {
        const PauliString &g = outer.generators()[i];
        std::vector<std::vector<PauliString>> options;
        for (size_t j = 0; j < g.num_qubits(); j++) {
            char letter = g.letter(j);
            if (letter == 'I') {
                options.push_back({inner_identity});
            } else {
                options.push_back(lift_logical_passive(inner, letter));
            }
        }
        std::vector<PauliString> reps = expand_blocks(options);
        for (auto &r : reps) {
            r = add_phase(r, g.phase());
        }
        sort_canonical(reps);
        classes.push_back({std::move(reps), outer.passive_mask()[i]});
    }
    if (classes.size() != spec.n_cc - spec.k_cc) {
        throw ConsistencyError("generator class count " + std::to_string(classes.size()) + " != n-k");
    }
    return classes;
}

namespace {

StabilizerCode code_from_classes(const ConcatSpec &spec, const std::vector<GeneratorClass> &classes) {
    std::vector<PauliString> gens;
    std::vector<bool> passive;
    for (const auto &c : classes) {
        gens.push_back(c.exact());
        passive.push_back(c.passive);
    }
    std::vector<PauliString> lx;
    std::vector<PauliString> lz;
    for (const auto &x : spec.outer.logical_x()) {
        lx.push_back(lift_canonical(spec.inner, x));
    }
    for (const auto &z : spec.outer.logical_z()) {
        lz.push_back(lift_canonical(spec.inner, z));
    }
    std::string name = std::string(order_name(spec.order)) + "(" + spec.outer.name() + "," + spec.inner.name() + ")";
    return StabilizerCode(std::move(name), spec.n_cc, spec.k_cc, std::move(gens), std::move(lx), std::move(lz),
                          std::move(passive));
}

}  // namespace

StabilizerCode concatenated_code(const ConcatSpec &spec) {
    return code_from_classes(spec, build_generators(spec));
}

size_t EquivalenceClass::total() const {
    size_t t = 0;
    for (const auto &s : sets) {
        t += s.size();
    }
    return t;
}

EquivalenceClass equivalence_classes(const ConcatSpec &spec) {
    const StabilizerCode &inner = spec.inner;
    const StabilizerCode &outer = spec.outer;
    EquivalenceClass result;
    if (spec.order == ConcatOrder::kQD) {
        for (const PauliString &e : correctable_errors(outer, spec.alphabet)) {
            std::vector<std::vector<PauliString>> options;
            for (size_t j = 0; j < e.num_qubits(); j++) {
                options.push_back(lift_logical(inner, e.letter(j)));
            }
            std::vector<PauliString> set = expand_blocks(options);
            for (auto &p : set) {
                p = add_phase(p, e.phase());
            }
            sort_canonical(set);
            result.sets.push_back(std::move(set));
        }
        return result;
    }

    std::vector<PauliString> partners;
    for (const PauliString &l : stabilizer_group(outer)) {
        if (!l.is_identity_up_to_phase()) {
            partners.push_back(lift_canonical(inner, l));
        }
    }
    std::vector<PauliString> block_errors = correctable_errors(inner, spec.alphabet);
    std::vector<std::vector<PauliString>> options(outer.n(), block_errors);
    for (const PauliString &e : expand_blocks(options)) {
        std::vector<PauliString> set{e};
        for (const PauliString &l : partners) {
            set.push_back(multiply(l, e));
        }
        sort_canonical(set);
        result.sets.push_back(std::move(set));
    }
    return result;
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

HammingEfficiency hamming_efficiency(const EquivalenceClass &cls, size_t n, size_t k) {
    if (cls.sets.empty()) {
        throw DomainError("Hamming efficiency of an empty equivalence class");
    }
    if (n <= k) {
        throw DomainError("Hamming efficiency requires n > k");
    }
    auto nk = static_cast<int64_t>(n - k);
    auto exact = [&](size_t count) -> std::optional<Rational> {
        if (!std::has_single_bit(count)) {
            return std::nullopt;
        }
        auto bits = static_cast<int64_t>(std::countr_zero(count));
        int64_t g = std::gcd(bits, nk);
        if (g == 0) {
            return Rational{0, 1};
        }
        return Rational{bits / g, nk / g};
    };
    HammingEfficiency h;
    size_t total = cls.total();
    size_t sets = cls.set_count();
    h.phi = std::log2(static_cast<double>(total)) / static_cast<double>(nk);
    h.phi_prime = std::log2(static_cast<double>(sets)) / static_cast<double>(nk);
    h.phi_exact = exact(total);
    h.phi_prime_exact = exact(sets);
    return h;
}

const PauliString *DecoderTable::lookup(const Syndrome &s) const {
    auto it = entries_.find(s.bits);
    return it == entries_.end() ? nullptr : &it->second;
}

void DecoderTable::insert(const Syndrome &s, PauliString correction) {
    if (!entries_.emplace(s.bits, std::move(correction)).second) {
        throw ConsistencyError("decoder syndrome collision at " + s.str());
    }
}

DecoderTable decoder_table(const StabilizerCode &code, const EquivalenceClass &cls) {
    DecoderTable table;
    for (const auto &set : cls.sets) {
        if (set.empty()) {
            throw ConsistencyError("empty equivalence set");
        }
        Syndrome s = syndrome(code, set.front());
        for (const auto &e : set) {
            if (syndrome(code, e) != s) {
                throw ConsistencyError("equivalence set " + set.front().str() + " has mixed syndromes");
            }
        }
        PauliString correction = s.is_zero() ? PauliString(code.n())
                                             : *std::min_element(set.begin(), set.end(), canonical_less);
        table.insert(s, std::move(correction));
    }
    return table;
}

DecoderTable decoder_table(const ConcatSpec &spec) {
    return decoder_table(concatenated_code(spec), equivalence_classes(spec));
}

std::vector<PauliString> passive_set(const StabilizerCode &code, const EquivalenceClass &cls) {
    const std::vector<PauliString> *found = nullptr;
    for (const auto &set : cls.sets) {
        if (!set.empty() && syndrome(code, set.front()).is_zero()) {
            if (found != nullptr) {
                throw ConsistencyError("more than one equivalence set has zero syndrome");
            }
            found = &set;
        }
    }
    if (found == nullptr) {
        throw ConsistencyError("no equivalence set has zero syndrome");
    }
    return *found;
}

std::vector<PauliString> passive_set(const ConcatSpec &spec) {
    return passive_set(concatenated_code(spec), equivalence_classes(spec));
}

ConcatenatedCode ConcatenatedCode::build(ConcatSpec spec) {
    ConcatenatedCode c{std::move(spec), {}, {}, {}, {}};
    c.generator_classes = build_generators(c.spec);
    c.code = code_from_classes(c.spec, c.generator_classes);
    c.equivalence = equivalence_classes(c.spec);
    c.decoder = decoder_table(c.code, c.equivalence);
    return c;
}

}  // namespace qdc
