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

#ifndef QDCONCAT_ERRORS_H
#define QDCONCAT_ERRORS_H

#include <stdexcept>
#include <string>

namespace qdc {

/// Malformed textual input (Pauli labels, code names on the wire).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands whose qubit counts disagree.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric argument outside its mathematical domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input that violates an algebraic structure requirement (non-Abelian group,
/// invalid concatenation layout, ...).
struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LookupError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Request exceeds a dense-construction budget.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

struct UnsupportedError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An internal invariant failed; indicates a construction bug rather than bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qdc

#endif
