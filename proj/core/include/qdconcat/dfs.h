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

#ifndef QDCONCAT_DFS_H
#define QDCONCAT_DFS_H

#include <vector>

#include <Eigen/Dense>

#include "qdconcat/pauli.h"
#include "qdconcat/stabilizer.h"
#include "qdconcat/statevec.h"

namespace qdc {

/// Elementary Abelian 2-group of phase-free, mutually commuting Pauli operators.
///
/// Elements are kept in the caller's order; signs live in characters.
class AbelianErrorGroup {
   public:
    /// Validates identity membership, +1 phases, commutation, exact closure and
    /// power-of-two order. Throws StructureError otherwise.
    static AbelianErrorGroup from_elements(std::vector<PauliString> elements);
    /// The group generated by `generators` (each must be phase-free).
    static AbelianErrorGroup generated_by(size_t num_qubits, std::vector<PauliString> generators);
    /// {I^n}.
    static AbelianErrorGroup trivial(size_t num_qubits);

    size_t num_qubits() const { return n_; }
    size_t order() const { return elements_.size(); }
    const std::vector<PauliString> &elements() const { return elements_; }
    /// Independent generating set chosen greedily in element order.
    const std::vector<PauliString> &generators() const { return generators_; }
    /// For each element, the subset of generators whose product it is.
    const std::vector<uint64_t> &generator_masks() const { return masks_; }

   private:
    size_t n_ = 0;
    std::vector<PauliString> elements_;
    std::vector<PauliString> generators_;
    std::vector<uint64_t> masks_;
};

/// One-dimensional irrep of an AbelianErrorGroup; values align with elements().
struct Character {
    std::vector<int> values;
    /// Sign assigned to each generator (bit set = -1); characters are indexed by it.
    uint64_t generator_signs = 0;

    int operator[](size_t element_index) const { return values[element_index]; }
    bool operator==(const Character &) const = default;
};

/// All |G| sign characters, trivial character first, ordered by generator_signs.
std::vector<Character> characters(const AbelianErrorGroup &group);

/// Dense 2^n x 2^n matrix of a Pauli operator (same qubit ordering as StateVector).
Eigen::MatrixXcd pauli_matrix(const PauliString &op);

/// (1/|G|) sum_g chi(g) g. Throws CapacityError for n > 12.
Eigen::MatrixXcd projector(const AbelianErrorGroup &group, const Character &chi);

/// Orthonormal basis of the projector's range. Columns of the projector are
/// taken in ascending computational index and Gram-Schmidt'ed; vectors with
/// residual norm below 1e-10 are dropped.
std::vector<StateVector> df_basis(const AbelianErrorGroup &group, const Character &chi);

/// The DFS as a stabilizer code: generators chi(g) g for the group generators,
/// all passive. Throws StructureError if the subspace hosts no qubit.
StabilizerCode as_stabilizer_code(const AbelianErrorGroup &group, const Character &chi);

}  // namespace qdc

#endif
