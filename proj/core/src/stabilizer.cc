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

#include "qdconcat/stabilizer.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qdconcat/errors.h"

namespace qdc {

std::string Syndrome::str() const {
    std::string out(length, '0');
    for (size_t i = 0; i < length; i++) {
        if (bit(i)) {
            out[i] = '1';
        }
    }
    return out;
}

bool RowReducer::add(const PauliString &row, PauliString *residual) {
    if (row.num_qubits() != n_) {
        throw DimensionError("row has " + std::to_string(row.num_qubits()) + " qubits, expected " +
                             std::to_string(n_));
    }
    PauliString r = reduce(row);
    if (r.is_identity_up_to_phase()) {
        if (residual != nullptr) {
            *residual = r;
        }
        return false;
    }
    // Lowest set bit becomes the pivot; x bits before z bits.
    Pivot pivot{r, false, 0};
    if (r.x_bits() != 0) {
        pivot.mask = r.x_bits() & (~r.x_bits() + 1);
    } else {
        pivot.is_z = true;
        pivot.mask = r.z_bits() & (~r.z_bits() + 1);
    }
    rows_.push_back(pivot);
    return true;
}

PauliString RowReducer::reduce(PauliString p) const {
    for (const Pivot &pivot : rows_) {
        uint64_t word = pivot.is_z ? p.z_bits() : p.x_bits();
        if (word & pivot.mask) {
            p = multiply(p, pivot.row);
        }
    }
    return p;
}

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kStabilizer:
            return "stabilizer";
        case ErrorKind::kCorrectableInTable:
            return "correctable-in-table";
        case ErrorKind::kDetectable:
            return "detectable";
        case ErrorKind::kLogical:
            return "logical";
    }
    return "?";
}

StabilizerCode::StabilizerCode(
    std::string name,
    size_t n,
    size_t k,
    std::vector<PauliString> generators,
    std::vector<PauliString> logical_x,
    std::vector<PauliString> logical_z,
    std::vector<bool> passive)
    : name_(std::move(name)),
      n_(n),
      k_(k),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)),
      passive_(std::move(passive)),
      reducer_(n) {
    if (k_ > n_) {
        throw DomainError("code '" + name_ + "' has k > n");
    }
    if (generators_.size() > 64) {
        throw CapacityError("at most 64 generators are supported");
    }
    auto check = [&](const std::vector<PauliString> &ops, const char *what) {
        for (size_t i = 0; i < ops.size(); i++) {
            if (ops[i].num_qubits() != n_) {
                throw DimensionError("code '" + name_ + "': " + what + "[" + std::to_string(i) +
                                     "] has " + std::to_string(ops[i].num_qubits()) +
                                     " qubits, expected " + std::to_string(n_));
            }
        }
    };
    check(generators_, "generator");
    check(logical_x_, "logical_x");
    check(logical_z_, "logical_z");
    if (passive_.empty()) {
        passive_.assign(generators_.size(), false);
    } else if (passive_.size() != generators_.size()) {
        throw DimensionError("code '" + name_ + "': passive mask length does not match generator count");
    }
    for (const PauliString &g : generators_) {
        reducer_.add(g);
    }
}

bool StabilizerCode::all_passive() const {
    return std::all_of(passive_.begin(), passive_.end(), [](bool b) { return b; });
}

bool StabilizerCode::any_passive() const {
    return std::any_of(passive_.begin(), passive_.end(), [](bool b) { return b; });
}

std::string ValidationReport::str() const {
    if (ok()) {
        return "valid";
    }
    std::ostringstream out;
    for (const Violation &v : violations) {
        out << v.invariant << " [";
        for (size_t i = 0; i < v.indices.size(); i++) {
            out << (i ? "," : "") << v.indices[i];
        }
        out << "]";
        if (!v.detail.empty()) {
            out << ": " << v.detail;
        }
        out << "\n";
    }
    return out.str();
}

ValidationReport validate(const StabilizerCode &code) {
    ValidationReport report;
    const auto &gens = code.generators();
    auto add = [&](std::string invariant, std::vector<size_t> indices, std::string detail) {
        report.violations.push_back({std::move(invariant), std::move(indices), std::move(detail)});
    };

    for (size_t i = 0; i < gens.size(); i++) {
        if (!gens[i].is_hermitian()) {
            add("generator-not-hermitian", {i}, gens[i].str() + " squares to -I");
        }
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (!commutes(gens[i], gens[j])) {
                add("generators-anticommute", {i, j}, gens[i].str() + " vs " + gens[j].str());
            }
        }
    }

    RowReducer reducer(code.n());
    for (size_t i = 0; i < gens.size(); i++) {
        PauliString residual;
        if (!reducer.add(gens[i], &residual)) {
            add("generators-dependent", {i}, gens[i].str() + " lies in the span of earlier generators");
            if (residual.phase() != 0) {
                add("minus-identity-in-group", {i},
                    "product of generators equals " + residual.str());
            }
        }
    }
    if (reducer.rank() + code.k() != code.n()) {
        add("rank", {},
            "generator rank " + std::to_string(reducer.rank()) + " != n-k = " +
                std::to_string(code.n() - code.k()));
    }

    const auto &lx = code.logical_x();
    const auto &lz = code.logical_z();
    if (lx.size() != code.k() || lz.size() != code.k()) {
        add("logical-count", {},
            "expected " + std::to_string(code.k()) + " logical X and Z operators, got " +
                std::to_string(lx.size()) + " and " + std::to_string(lz.size()));
        return report;
    }
    for (size_t i = 0; i < code.k(); i++) {
        for (size_t g = 0; g < gens.size(); g++) {
            if (!commutes(lx[i], gens[g])) {
                add("logical-x-anticommutes-with-generator", {i, g}, lx[i].str() + " vs " + gens[g].str());
            }
            if (!commutes(lz[i], gens[g])) {
                add("logical-z-anticommutes-with-generator", {i, g}, lz[i].str() + " vs " + gens[g].str());
            }
        }
        if (reducer.contains(lx[i])) {
            add("logical-x-in-stabilizer", {i}, lx[i].str());
        }
        if (reducer.contains(lz[i])) {
            add("logical-z-in-stabilizer", {i}, lz[i].str());
        }
        for (size_t j = 0; j < code.k(); j++) {
            bool should_commute = i != j;
            if (commutes(lx[i], lz[j]) != should_commute) {
                add(should_commute ? "logical-pair-anticommutes" : "logical-pair-commutes", {i, j},
                    lx[i].str() + " vs " + lz[j].str());
            }
            if (j > i && !commutes(lx[i], lx[j])) {
                add("logical-x-pair-anticommutes", {i, j}, lx[i].str() + " vs " + lx[j].str());
            }
            if (j > i && !commutes(lz[i], lz[j])) {
                add("logical-z-pair-anticommutes", {i, j}, lz[i].str() + " vs " + lz[j].str());
            }
        }
    }
    return report;
}

Syndrome syndrome(const StabilizerCode &code, const PauliString &error) {
    if (error.num_qubits() != code.n()) {
        throw DimensionError("error has " + std::to_string(error.num_qubits()) +
                             " qubits but code '" + code.name() + "' has " + std::to_string(code.n()));
    }
    Syndrome s{0, code.generators().size()};
    const auto &gens = code.generators();
    for (size_t i = 0; i < gens.size(); i++) {
        uint64_t anti = (error.x_bits() & gens[i].z_bits()) ^ (error.z_bits() & gens[i].x_bits());
        s.bits |= static_cast<uint64_t>(std::popcount(anti) & 1) << i;
    }
    return s;
}

ErrorClassification classify(const StabilizerCode &code, const PauliString &error) {
    ErrorClassification result{ErrorKind::kDetectable, syndrome(code, error)};
    PauliString residual = code.reducer().reduce(error);
    if (residual.is_identity_up_to_phase()) {
        result.kind = ErrorKind::kStabilizer;
        // error * (product of basis rows) = i^phase * I.
        result.stabilizer_phase = residual.phase();
    } else if (result.syndrome.is_zero()) {
        result.kind = ErrorKind::kLogical;
    }
    return result;
}

bool are_degenerate(const StabilizerCode &code, const PauliString &a, const PauliString &b) {
    return classify(code, multiply(a, b)).kind == ErrorKind::kStabilizer;
}

std::vector<PauliString> stabilizer_group(const StabilizerCode &code) {
    const auto &gens = code.generators();
    if (gens.size() > 20) {
        throw CapacityError("stabilizer group enumeration limited to 20 generators");
    }
    size_t count = size_t{1} << gens.size();
    std::vector<PauliString> out;
    out.reserve(count);
    for (size_t m = 0; m < count; m++) {
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

PauliString logical_operator(const StabilizerCode &code, char label) {
    if (code.k() != 1 || code.logical_x().size() != 1 || code.logical_z().size() != 1) {
        throw UnsupportedError("logical labels require a code with exactly one logical qubit");
    }
    switch (label) {
        case 'I':
            return PauliString(code.n());
        case 'X':
            return code.logical_x()[0];
        case 'Z':
            return code.logical_z()[0];
        case 'Y': {
            PauliString xz = multiply(code.logical_x()[0], code.logical_z()[0]);
            return xz.with_phase(static_cast<uint8_t>(xz.phase() + 1));
        }
        default:
            throw ParseError(std::string("invalid logical label '") + label + "'");
    }
}

namespace {

std::vector<PauliString> parse_all(std::initializer_list<std::string_view> labels) {
    std::vector<PauliString> out;
    for (auto label : labels) {
        out.push_back(PauliString::parse(label));
    }
    return out;
}

}  // namespace

StabilizerCode builtin(std::string_view name) {
    if (name == "repetition-3") {
        return StabilizerCode(
            "repetition-3", 3, 1, parse_all({"ZZI", "ZIZ"}), parse_all({"XXX"}), parse_all({"ZII"}));
    }
    if (name == "knill-laflamme-5") {
        return StabilizerCode(
            "knill-laflamme-5", 5, 1, parse_all({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
            parse_all({"XXXXX"}), parse_all({"ZZZZZ"}));
    }
    if (name == "dfs-2") {
        return StabilizerCode(
            "dfs-2", 2, 1, parse_all({"XX"}), parse_all({"XI"}), parse_all({"ZZ"}), {true});
    }
    std::string valid;
    for (const auto &n : builtin_names()) {
        valid += (valid.empty() ? "" : ", ") + n;
    }
    throw LookupError("unknown code '" + std::string(name) + "'; valid names: " + valid);
}

std::vector<std::string> builtin_names() {
    return {"repetition-3", "knill-laflamme-5", "dfs-2"};
}

}  // namespace qdc
