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

#ifndef QDCONCAT_TESTS_COMMON_FIXTURES_H
#define QDCONCAT_TESTS_COMMON_FIXTURES_H

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qdconcat/pauli.h"
#include "qdconcat/statevec.h"

namespace qdc::testing {

using Kets = std::vector<std::pair<double, std::string>>;

/// Reference codewords of the ten-qubit QD code over logical DFS qubits.
inline const Kets kQd10ZeroD = {
    {1, "00000"},  {1, "10010"},  {1, "01001"},  {1, "10100"},  {1, "01010"},  {-1, "11011"},
    {-1, "00110"}, {-1, "11000"}, {-1, "11101"}, {-1, "00011"}, {-1, "11110"}, {-1, "01111"},
    {-1, "10001"}, {-1, "01100"}, {-1, "10111"}, {1, "00101"}};
inline const Kets kQd10OneD = {
    {1, "11111"},  {1, "01101"},  {1, "10110"},  {1, "01011"},  {1, "10101"},  {-1, "00100"},
    {-1, "11001"}, {-1, "00111"}, {-1, "00010"}, {-1, "11100"}, {-1, "00001"}, {-1, "10000"},
    {-1, "01110"}, {-1, "10011"}, {-1, "01000"}, {-1, "11010"}};

/// Expands a ket list over logical qubits into physical qubits, replacing
/// logical 0 by `zero` and 1 by `one` (each given as physical kets).
inline StateVector expand_kets(const Kets &logical, const Kets &zero, const Kets &one) {
    Kets out;
    for (const auto &[amp, bits] : logical) {
        Kets acc{{amp, ""}};
        for (char b : bits) {
            const Kets &block = b == '0' ? zero : one;
            Kets next;
            for (const auto &[a1, s1] : acc) {
                for (const auto &[a2, s2] : block) {
                    next.push_back({a1 * a2, s1 + s2});
                }
            }
            acc = std::move(next);
        }
        out.insert(out.end(), acc.begin(), acc.end());
    }
    size_t n = out.front().second.size();
    return StateVector::from_kets(n, out);
}

inline const Kets kDfsZero = {{1, "00"}, {1, "11"}};
inline const Kets kDfsOne = {{1, "01"}, {1, "10"}};

/// Letters of each operator, phase dropped.
inline std::set<std::string> letter_set(const std::vector<PauliString> &ops) {
    std::set<std::string> out;
    for (const auto &p : ops) {
        out.insert(p.letters());
    }
    return out;
}

/// Replaces each bracketed label by all of its listed realizations.
/// `realizations` maps 'I','X','Y','Z' to signed two-qubit strings.
inline std::vector<PauliString> expand_labels(
    const std::string &labels, const std::vector<std::pair<char, std::vector<std::string>>> &realizations) {
    std::vector<PauliString> acc{PauliString(0)};
    for (char label : labels) {
        std::vector<std::string> options;
        for (const auto &[l, opts] : realizations) {
            if (l == label) {
                options = opts;
            }
        }
        std::vector<PauliString> next;
        for (const auto &prefix : acc) {
            for (const auto &o : options) {
                next.push_back(tensor(prefix, PauliString::parse(o)));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

/// I_D -> II, XX; X_D -> XI, IX; Y_D -> YZ, ZY; Z_D -> ZZ, -YY.
inline const std::vector<std::pair<char, std::vector<std::string>>> kDfsMultiplicity = {
    {'I', {"II", "XX"}}, {'X', {"XI", "IX"}}, {'Y', {"YZ", "ZY"}}, {'Z', {"ZZ", "-YY"}}};

}  // namespace qdc::testing

#endif
