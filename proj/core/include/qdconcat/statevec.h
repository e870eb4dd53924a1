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

#ifndef QDCONCAT_STATEVEC_H
#define QDCONCAT_STATEVEC_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdconcat/concat.h"
#include "qdconcat/pauli.h"
#include "qdconcat/stabilizer.h"

namespace qdc {

class AbelianErrorGroup;
struct Character;

using Amplitude = std::complex<double>;

/// Dense n-qubit state, n <= 12. Qubit 0 is the leftmost ket symbol, i.e. the
/// most significant bit of the amplitude index: |q0 q1 ... q_{n-1}>.
class StateVector {
   public:
    static constexpr size_t kMaxQubits = 12;

    /// Computational basis state |index>.
    static StateVector basis(size_t num_qubits, uint64_t index = 0);
    /// Normalizes `amplitudes`; throws DomainError for the zero vector.
    static StateVector from_amplitudes(size_t num_qubits, std::vector<Amplitude> amplitudes);
    /// Sum of signed kets, e.g. {{+1, "00"}, {+1, "11"}}, normalized.
    static StateVector from_kets(size_t num_qubits, std::span<const std::pair<double, std::string>> kets);

    size_t num_qubits() const { return n_; }
    size_t dim() const { return amps_.size(); }
    const std::vector<Amplitude> &amplitudes() const { return amps_; }
    Amplitude operator[](uint64_t index) const { return amps_[index]; }
    double norm() const;

   private:
    StateVector(size_t n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {}
    friend StateVector apply_pauli(const StateVector &, const PauliString &);
    friend class Circuit;
    size_t n_ = 0;
    std::vector<Amplitude> amps_;
};

/// Bit of the amplitude index that holds qubit q.
inline uint64_t qubit_mask(size_t num_qubits, size_t q) { return uint64_t{1} << (num_qubits - 1 - q); }

struct Gate {
    enum class Kind { kH, kCnot };
    Kind kind;
    size_t target;
    size_t control = 0;
};

/// A gate list over {H, CNOT}.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits) : n_(num_qubits) {}

    Circuit &h(size_t target);
    Circuit &cnot(size_t control, size_t target);

    size_t num_qubits() const { return n_; }
    const std::vector<Gate> &gates() const { return gates_; }

    StateVector apply(StateVector state) const;

   private:
    size_t n_;
    std::vector<Gate> gates_;
};

inline StateVector apply(const StateVector &state, const Circuit &circuit) { return circuit.apply(state); }

StateVector apply_pauli(const StateVector &state, const PauliString &op);

/// <a|b>.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// <psi|P|psi>.
Amplitude expectation(const StateVector &state, const PauliString &op);

/// |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol = 1e-10);

/// Index of the first amplitude where a and b differ after removing the global
/// phase, or nullopt when they agree within `tol`.
std::optional<uint64_t> first_mismatch(const StateVector &a, const StateVector &b, double tol = 1e-10);

struct KnillLaflammeWitness {
    size_t m;  ///< index of E_m (the daggered error)
    size_t n;
    size_t i;  ///< codeword indices
    size_t j;
    Amplitude value;
    std::string reason;
};

struct KnillLaflammeResult {
    bool ok;
    std::optional<KnillLaflammeWitness> witness;
};

/// Checks <w_i|E_m^dag E_n|w_j> = 0 for i != j and equal diagonals, |.| < 1e-9.
/// Throws DomainError if the codewords are not orthonormal.
KnillLaflammeResult kl_check(
    const StateVector &zero, const StateVector &one, std::span<const PauliString> errors, double tol = 1e-9);

/// True iff g|psi> = chi(g)|psi> for every element g of the group.
bool dfs_invariance(
    const StateVector &state, const AbelianErrorGroup &group, const Character &chi, double tol = 1e-10);

/// Encoder for the six-qubit QD code (qubit 0 carries the input).
Circuit qd6_encoder();
/// Encoder for the six-qubit DQ code (qubit 0 carries the input).
Circuit dq6_encoder();

/// Logical |0> and |1> of a k=1 code: |0> is the normalized projection of the
/// first computational basis state onto the +1 eigenspace of every generator and
/// of Zbar; |1> = Xbar|0>.
std::pair<StateVector, StateVector> codewords_from_stabilizers(const StabilizerCode &code);

/// Replaces each qubit of `outer` by an inner logical state: |x_1..x_m> becomes
/// |x_1>_in (x) ... (x) |x_m>_in.
StateVector substitute(const StateVector &outer, const StateVector &inner_zero, const StateVector &inner_one);

/// Logical |0> and |1> of one of the four concatenated codes. Six-qubit codes
/// run their encoders on |0>|0^5> and |1>|0^5>; ten-qubit codes substitute
/// the inner codewords into the outer ones.
std::pair<StateVector, StateVector> encoded_codewords(ConcatCode code);

}  // namespace qdc

#endif
