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

#ifndef QDCONCAT_CONCAT_H
#define QDCONCAT_CONCAT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qdconcat/pauli.h"
#include "qdconcat/stabilizer.h"

namespace qdc {

/// QD: QECC outer, DFS inner. DQ: DFS outer, QECC inner.
enum class ConcatOrder { kQD, kDQ };

std::string_view order_name(ConcatOrder order);
ConcatOrder parse_order(std::string_view name);

/// The four concatenations studied here.
enum class ConcatCode { kQD6, kDQ6, kQD10, kDQ10 };

std::string_view code_id_name(ConcatCode code);
ConcatCode parse_code_id(std::string_view name);
std::vector<ConcatCode> all_code_ids();

struct Block {
    size_t begin;
    size_t size;
};

/// Two-layer concatenation layout. Inner block b holds qubits
/// [b * inner.n(), (b + 1) * inner.n()), matching labels (1a,1b),(2a,2b),...
struct ConcatSpec {
    StabilizerCode outer;
    StabilizerCode inner;
    ConcatOrder order;
    /// Single-qubit error letters the active layer corrects.
    Alphabet alphabet;
    std::vector<Block> blocks;
    size_t n_cc;
    size_t k_cc;
};

/// Validates the layout (inner.k == 1, the DFS side fully passive) and fills in
/// blocks and sizes. Without an explicit alphabet the largest of
/// {depolarizing3, bitflip} whose weight-1 errors the active code tells apart
/// is used.
ConcatSpec make_concat_spec(
    StabilizerCode outer, StabilizerCode inner, ConcatOrder order, std::optional<Alphabet> alphabet = std::nullopt);

/// One of the four named concatenations.
ConcatSpec standard_spec(ConcatCode code);

/// [[n_o n_i / k_i, k_o]] when k_i divides n_o, else [[n_o n_i, k_o k_i]].
std::pair<size_t, size_t> concat_size(size_t n_o, size_t k_o, size_t n_i, size_t k_i);

/// All physical realizations of a logical label on a k=1 code: the canonical
/// operator times every stabilizer element, exact phases kept.
std::vector<PauliString> lift_logical(const StabilizerCode &inner, char label);

/// Same as lift_logical but multiplied only by the passive stabilizer subgroup.
std::vector<PauliString> lift_logical_passive(const StabilizerCode &inner, char label);

/// Errors a code corrects on its own: the stabilizer group for a fully passive
/// code, otherwise identity plus every weight-1 error over `alphabet`
/// (letter-major: all X_q, then Y_q, then Z_q).
std::vector<PauliString> correctable_errors(const StabilizerCode &code, Alphabet alphabet);

/// A generator together with the degenerate alternatives that give the same
/// syndrome on every correctable error.
struct GeneratorClass {
    /// Exact-phase representatives sorted by canonical_less on their letters.
    std::vector<PauliString> representatives;
    bool passive = false;

    /// Letter-smallest representative with its phase normalized to +1.
    PauliString canonical() const { return representatives.front().unsigned_part(); }
    /// Exact phase of that representative as a stabilizer element.
    uint8_t raw_phase() const { return representatives.front().phase(); }
    /// The canonical representative with its exact phase.
    const PauliString &exact() const { return representatives.front(); }
};

/// n_cc - k_cc classes: blockwise inner generators (block-major) followed by
/// one lifted class per outer generator.
std::vector<GeneratorClass> build_generators(const ConcatSpec &spec);

/// The concatenated code with one exact representative per class and lifted
/// logical operators.
StabilizerCode concatenated_code(const ConcatSpec &spec);

/// Partition of correctable errors into mutually degenerate sets.
struct EquivalenceClass {
    std::vector<std::vector<PauliString>> sets;

    size_t set_count() const { return sets.size(); }
    size_t total() const;
};

EquivalenceClass equivalence_classes(const ConcatSpec &spec);

struct Rational {
    int64_t num;
    int64_t den;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    bool operator==(const Rational &) const = default;
};

struct HammingEfficiency {
    double phi;
    double phi_prime;
    /// Present when the corresponding count is a power of two.
    std::optional<Rational> phi_exact;
    std::optional<Rational> phi_prime_exact;
};

HammingEfficiency hamming_efficiency(const EquivalenceClass &cls, size_t n, size_t k);

/// Syndrome -> correction lookup; one entry per equivalence set.
class DecoderTable {
   public:
    DecoderTable() = default;

    const PauliString *lookup(const Syndrome &s) const;
    size_t size() const { return entries_.size(); }
    const std::unordered_map<uint64_t, PauliString> &entries() const { return entries_; }

    void insert(const Syndrome &s, PauliString correction);

   private:
    std::unordered_map<uint64_t, PauliString> entries_;
};

/// Keys are syndromes against `code`'s generators; values are the
/// canonical_less-first element of each set. Throws ConsistencyError on a
/// syndrome collision between sets or a set with mixed syndromes.
DecoderTable decoder_table(const StabilizerCode &code, const EquivalenceClass &cls);
DecoderTable decoder_table(const ConcatSpec &spec);

/// The unique set with zero syndrome.
std::vector<PauliString> passive_set(const StabilizerCode &code, const EquivalenceClass &cls);
std::vector<PauliString> passive_set(const ConcatSpec &spec);

/// Everything derived from a spec, built once.
struct ConcatenatedCode {
    ConcatSpec spec;
    std::vector<GeneratorClass> generator_classes;
    StabilizerCode code;
    EquivalenceClass equivalence;
    DecoderTable decoder;

    static ConcatenatedCode build(ConcatSpec spec);
};

}  // namespace qdc

#endif
