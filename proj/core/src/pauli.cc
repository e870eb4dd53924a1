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

#include <bit>
#include <ostream>

#include "qdconcat/errors.h"

namespace qdc {

namespace {

uint64_t low_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

void check_size(size_t n) {
    if (n > PauliString::kMaxQubits) {
        throw CapacityError("PauliString supports at most 64 qubits, got " + std::to_string(n));
    }
}

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli length mismatch: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits) : n_(num_qubits) {
    check_size(num_qubits);
}

PauliString::PauliString(size_t num_qubits, uint64_t x_bits, uint64_t z_bits, uint8_t phase)
    : n_(num_qubits), x_(x_bits), z_(z_bits), phase_(phase & 3) {
    check_size(num_qubits);
    if (((x_bits | z_bits) & ~low_mask(num_qubits)) != 0) {
        throw DimensionError("Pauli bits set beyond qubit count " + std::to_string(num_qubits));
    }
}

PauliString PauliString::parse(std::string_view text) {
    uint8_t phase = 0;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        pos++;
    }
    if (pos == text.size()) {
        throw ParseError("Pauli label '" + std::string(text) + "' has no qubit letters");
    }
    size_t n = text.size() - pos;
    check_size(n);
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t q = 0; q < n; q++) {
        char c = text[pos + q];
        uint64_t bit = uint64_t{1} << q;
        switch (c) {
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw ParseError(
                    "Pauli label '" + std::string(text) + "' has invalid character '" + c +
                    "' at position " + std::to_string(pos + q));
        }
    }
    return PauliString(n, x, z, phase);
}

PauliString PauliString::single(size_t num_qubits, size_t q, char letter) {
    if (q >= num_qubits) {
        throw DimensionError("qubit index " + std::to_string(q) + " out of range");
    }
    uint64_t bit = uint64_t{1} << q;
    switch (letter) {
        case 'I':
            return PauliString(num_qubits);
        case 'X':
            return PauliString(num_qubits, bit, 0);
        case 'Y':
            return PauliString(num_qubits, bit, bit);
        case 'Z':
            return PauliString(num_qubits, 0, bit);
        default:
            throw ParseError(std::string("invalid Pauli letter '") + letter + "'");
    }
}

char PauliString::letter(size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x_bit(q) ? 1 : 0) | (z_bit(q) ? 2 : 0)];
}

std::string PauliString::letters() const {
    std::string out(n_, 'I');
    for (size_t q = 0; q < n_; q++) {
        out[q] = letter(q);
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr const char *kSigns[4] = {"", "i", "-", "-i"};
    return kSigns[phase_] + letters();
}

size_t PauliString::weight() const {
    return static_cast<size_t>(std::popcount(x_ | z_));
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    uint64_t ax = a.x_bits(), az = a.z_bits();
    uint64_t bx = b.x_bits(), bz = b.z_bits();
    uint64_t a_x = ax & ~az, a_y = ax & az, a_z = az & ~ax;
    uint64_t b_x = bx & ~bz, b_y = bx & bz, b_z = bz & ~bx;
    // XY = iZ, YZ = iX, ZX = iY; the reversed products pick up -i.
    uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
    uint64_t minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
    int phase = a.phase() + b.phase() + std::popcount(plus) - std::popcount(minus);
    return PauliString(a.num_qubits(), ax ^ bx, az ^ bz, static_cast<uint8_t>(phase & 3));
}

bool commutes(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    uint64_t anti = (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
    return (std::popcount(anti) & 1) == 0;
}

PauliString tensor(const PauliString &a, const PauliString &b) {
    size_t n = a.num_qubits() + b.num_qubits();
    check_size(n);
    size_t s = a.num_qubits();
    uint64_t bx = s >= 64 ? 0 : b.x_bits() << s;
    uint64_t bz = s >= 64 ? 0 : b.z_bits() << s;
    return PauliString(
        n, a.x_bits() | bx, a.z_bits() | bz, static_cast<uint8_t>((a.phase() + b.phase()) & 3));
}

PauliString embed(const PauliString &op, size_t num_qubits, size_t offset) {
    if (offset + op.num_qubits() > num_qubits) {
        throw DimensionError("embedding of a " + std::to_string(op.num_qubits()) +
                             "-qubit operator at offset " + std::to_string(offset) +
                             " exceeds " + std::to_string(num_qubits) + " qubits");
    }
    if (op.num_qubits() == 0) {
        return PauliString(num_qubits, 0, 0, op.phase());
    }
    return PauliString(num_qubits, op.x_bits() << offset, op.z_bits() << offset, op.phase());
}

bool canonical_less(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        return a.num_qubits() < b.num_qubits();
    }
    // I < X < Y < Z per qubit, qubit 0 most significant.
    static constexpr int kRank[4] = {0, 1, 3, 2};
    for (size_t q = 0; q < a.num_qubits(); q++) {
        int ra = kRank[(a.x_bit(q) ? 1 : 0) | (a.z_bit(q) ? 2 : 0)];
        int rb = kRank[(b.x_bit(q) ? 1 : 0) | (b.z_bit(q) ? 2 : 0)];
        if (ra != rb) {
            return ra < rb;
        }
    }
    return a.phase() < b.phase();
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

std::vector<char> alphabet_letters(Alphabet alphabet) {
    switch (alphabet) {
        case Alphabet::kBitflip:
            return {'X'};
        case Alphabet::kDepolarizing3:
            return {'X', 'Y', 'Z'};
    }
    throw DomainError("unknown alphabet");
}

std::string_view alphabet_name(Alphabet alphabet) {
    return alphabet == Alphabet::kBitflip ? "bitflip" : "depolarizing3";
}

Alphabet parse_alphabet(std::string_view name) {
    if (name == "bitflip") {
        return Alphabet::kBitflip;
    }
    if (name == "depolarizing3") {
        return Alphabet::kDepolarizing3;
    }
    throw ParseError("unknown alphabet '" + std::string(name) + "' (expected bitflip|depolarizing3)");
}

}  // namespace qdc
