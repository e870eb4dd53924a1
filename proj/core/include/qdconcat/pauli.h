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

#ifndef QDCONCAT_PAULI_H
#define QDCONCAT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qdc {

/// A Pauli operator i^phase * (P_0 (x) P_1 (x) ... (x) P_{n-1}) over at most 64 qubits.
///
/// Qubit q lives in bit q of the packed x and z words. Letters map to bits as
/// I=(0,0), X=(1,0), Y=(1,1), Z=(0,1), and the phase multiplies the tensor
/// product of *letters*, so Y is a letter in its own right (Y = i*X*Z) and
/// "-YY" is stored as phase 2 with both qubits set to Y.
class PauliString {
   public:
    static constexpr size_t kMaxQubits = 64;

    PauliString() = default;
    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);
    PauliString(size_t num_qubits, uint64_t x_bits, uint64_t z_bits, uint8_t phase = 0);

    /// Parses an optional sign prefix ("+", "-", "i", "+i", "-i") followed by
    /// one or more letters from {I, X, Y, Z}.
    static PauliString parse(std::string_view text);
    /// Single-qubit `letter` at qubit `q`, identity elsewhere.
    static PauliString single(size_t num_qubits, size_t q, char letter);

    /// Canonical text: "", "-", "i" or "-i" followed by the letters.
    std::string str() const;
    /// Letters only, phase dropped.
    std::string letters() const;

    size_t num_qubits() const { return n_; }
    uint64_t x_bits() const { return x_; }
    uint64_t z_bits() const { return z_; }
    bool x_bit(size_t q) const { return (x_ >> q) & 1; }
    bool z_bit(size_t q) const { return (z_ >> q) & 1; }
    char letter(size_t q) const;
    /// Exponent of i, in {0, 1, 2, 3}.
    uint8_t phase() const { return phase_; }

    PauliString with_phase(uint8_t phase) const { return PauliString(n_, x_, z_, phase); }
    PauliString unsigned_part() const { return with_phase(0); }
    bool is_identity_up_to_phase() const { return (x_ | z_) == 0; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    size_t weight() const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t n_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
    uint8_t phase_ = 0;
};

/// Exact operator product a*b including the accumulated power of i.
PauliString multiply(const PauliString &a, const PauliString &b);
inline PauliString operator*(const PauliString &a, const PauliString &b) { return multiply(a, b); }

/// True iff the symplectic inner product vanishes.
bool commutes(const PauliString &a, const PauliString &b);

inline size_t weight(const PauliString &a) { return a.weight(); }

/// a (x) b with a on the low qubits; phases add.
PauliString tensor(const PauliString &a, const PauliString &b);

/// Places `op` on qubits [offset, offset + op.num_qubits()) of an n-qubit identity.
PauliString embed(const PauliString &op, size_t num_qubits, size_t offset);

/// Orders by the unsigned letter string (I < X < Y < Z), then by phase exponent.
bool canonical_less(const PauliString &a, const PauliString &b);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

/// Single-qubit error letters considered by a noise model.
enum class Alphabet {
    kBitflip,        ///< {X}
    kDepolarizing3,  ///< {X, Y, Z}
};

/// Error letters (excluding I) in model order.
std::vector<char> alphabet_letters(Alphabet alphabet);
std::string_view alphabet_name(Alphabet alphabet);
Alphabet parse_alphabet(std::string_view name);

}  // namespace qdc

#endif
