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

#ifndef QDCONCAT_STABILIZER_H
#define QDCONCAT_STABILIZER_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdconcat/pauli.h"

namespace qdc {

/// Syndrome bits; bit i is the outcome against generator i.
struct Syndrome {
    uint64_t bits = 0;
    size_t length = 0;

    bool is_zero() const { return bits == 0; }
    bool bit(size_t i) const { return (bits >> i) & 1; }
    /// '0'/'1' characters, generator 0 first.
    std::string str() const;
    bool operator==(const Syndrome &) const = default;
};

/// Incremental GF(2) row reduction over symplectic Pauli rows that also tracks
/// the exact operator products, so membership tests report the residual phase.
class RowReducer {
   public:
    explicit RowReducer(size_t num_qubits) : n_(num_qubits) {}

    /// Adds a row. Returns false (and leaves the basis unchanged) if the row is
    /// already in the span; `residual` then receives the zero-bit remainder.
    bool add(const PauliString &row, PauliString *residual = nullptr);
    /// Multiplies `p` by basis rows until no pivot bit remains set.
    PauliString reduce(PauliString p) const;
    bool contains(const PauliString &p) const { return reduce(p).is_identity_up_to_phase(); }
    size_t rank() const { return rows_.size(); }
    size_t num_qubits() const { return n_; }

   private:
    struct Pivot {
        PauliString row;
        bool is_z;
        uint64_t mask;
    };
    size_t n_;
    std::vector<Pivot> rows_;
};

enum class ErrorKind {
    kStabilizer,
    kCorrectableInTable,
    kDetectable,
    kLogical,
};

std::string_view error_kind_name(ErrorKind kind);

struct ErrorClassification {
    ErrorKind kind;
    Syndrome syndrome;
    /// For kStabilizer: exponent of i with error == i^phase * (group element).
    uint8_t stabilizer_phase = 0;
};

/// A stabilizer code. Generators may carry a passive flag: passive generators
/// coincide with passively corrected errors and need no measurement.
class StabilizerCode {
   public:
    StabilizerCode() : reducer_(0) {}
    StabilizerCode(
        std::string name,
        size_t n,
        size_t k,
        std::vector<PauliString> generators,
        std::vector<PauliString> logical_x,
        std::vector<PauliString> logical_z,
        std::vector<bool> passive = {});

    const std::string &name() const { return name_; }
    size_t n() const { return n_; }
    size_t k() const { return k_; }
    const std::vector<PauliString> &generators() const { return generators_; }
    const std::vector<PauliString> &logical_x() const { return logical_x_; }
    const std::vector<PauliString> &logical_z() const { return logical_z_; }
    const std::vector<bool> &passive_mask() const { return passive_; }
    bool all_passive() const;
    bool any_passive() const;
    /// Reduced basis of the generator row space (built once at construction).
    const RowReducer &reducer() const { return reducer_; }

   private:
    std::string name_;
    size_t n_ = 0;
    size_t k_ = 0;
    std::vector<PauliString> generators_;
    std::vector<PauliString> logical_x_;
    std::vector<PauliString> logical_z_;
    std::vector<bool> passive_;
    RowReducer reducer_;
};

struct Violation {
    std::string invariant;
    std::vector<size_t> indices;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Checks generator commutation, independence (rank n-k), -I exclusion and the
/// logical operator algebra. Never throws on invalid codes.
ValidationReport validate(const StabilizerCode &code);

Syndrome syndrome(const StabilizerCode &code, const PauliString &error);

/// Stabilizer membership is decided modulo phase; the exact phase is reported
/// in ErrorClassification::stabilizer_phase.
ErrorClassification classify(const StabilizerCode &code, const PauliString &error);

bool are_degenerate(const StabilizerCode &code, const PauliString &a, const PauliString &b);

/// Every element of the stabilizer group with its exact phase, in subset order
/// (element m is the ordered product of generators whose bit is set in m).
std::vector<PauliString> stabilizer_group(const StabilizerCode &code);

/// Logical operator for label I/X/Y/Z (Y = i * Xbar * Zbar). Requires k == 1.
PauliString logical_operator(const StabilizerCode &code, char label);

/// "repetition-3", "knill-laflamme-5" or "dfs-2".
StabilizerCode builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace qdc

#endif
