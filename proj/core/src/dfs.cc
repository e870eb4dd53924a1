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

#include "qdconcat/dfs.h"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

#include "qdconcat/errors.h"

namespace qdc {

namespace {

constexpr double kZeroTol = 1e-10;

void fill_masks(
    size_t n,
    const std::vector<PauliString> &generators,
    const std::vector<PauliString> &elements,
    std::vector<uint64_t> &masks) {
    // bits -> subset of generators producing them
    std::map<std::pair<uint64_t, uint64_t>, uint64_t> lookup;
    size_t count = size_t{1} << generators.size();
    for (uint64_t m = 0; m < count; m++) {
        PauliString p(n);
        for (size_t i = 0; i < generators.size(); i++) {
            if ((m >> i) & 1) {
                p = multiply(p, generators[i]);
            }
        }
        lookup[{p.x_bits(), p.z_bits()}] = m;
    }
    masks.clear();
    for (const PauliString &e : elements) {
        masks.push_back(lookup.at({e.x_bits(), e.z_bits()}));
    }
}

/// Visits Paulis in order of weight, then qubit positions (lexicographic), then
/// letters in `preference` order. Stops when `visit` returns true.
bool visit_by_weight(size_t n, const std::array<char, 3> &preference,
                     const std::function<bool(const PauliString &)> &visit) {
    for (size_t w = 1; w <= n; w++) {
        std::vector<size_t> pos(w);
        for (size_t i = 0; i < w; i++) {
            pos[i] = i;
        }
        while (true) {
            size_t combos = 1;
            for (size_t i = 0; i < w; i++) {
                combos *= 3;
            }
            for (size_t c = 0; c < combos; c++) {
                PauliString p(n);
                size_t rest = c;
                // Last position varies fastest so the first qubit keeps the preferred letter longest.
                std::vector<char> letters(w);
                for (size_t i = w; i-- > 0;) {
                    letters[i] = preference[rest % 3];
                    rest /= 3;
                }
                for (size_t i = 0; i < w; i++) {
                    p = multiply(p, PauliString::single(n, pos[i], letters[i]));
                }
                if (visit(p.unsigned_part())) {
                    return true;
                }
            }
            size_t i = w;
            while (i > 0 && pos[i - 1] == n - w + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            pos[i - 1]++;
            for (size_t j = i; j < w; j++) {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
    return false;
}

void find_logicals(
    size_t n,
    size_t k,
    const std::vector<PauliString> &generators,
    std::vector<PauliString> &logical_x,
    std::vector<PauliString> &logical_z) {
    RowReducer span(n);
    for (const auto &g : generators) {
        span.add(g);
    }
    auto in_normalizer = [&](const PauliString &p) {
        return std::all_of(generators.begin(), generators.end(), [&](const PauliString &g) { return commutes(p, g); });
    };
    auto commutes_with_chosen = [&](const PauliString &p) {
        for (size_t i = 0; i < logical_x.size(); i++) {
            if (!commutes(p, logical_x[i]) || !commutes(p, logical_z[i])) {
                return false;
            }
        }
        return true;
    };
    for (size_t j = 0; j < k; j++) {
        PauliString xbar;
        bool found = visit_by_weight(n, {'X', 'Y', 'Z'}, [&](const PauliString &p) {
            if (in_normalizer(p) && commutes_with_chosen(p) && !span.contains(p)) {
                xbar = p;
                return true;
            }
            return false;
        });
        PauliString zbar;
        found = found && visit_by_weight(n, {'Z', 'Y', 'X'}, [&](const PauliString &p) {
            if (in_normalizer(p) && commutes_with_chosen(p) && !commutes(p, xbar)) {
                zbar = p;
                return true;
            }
            return false;
        });
        if (!found) {
            throw ConsistencyError("failed to find logical operator pair " + std::to_string(j));
        }
        logical_x.push_back(xbar);
        logical_z.push_back(zbar);
        span.add(xbar);
        span.add(zbar);
    }
}

}  // namespace

AbelianErrorGroup AbelianErrorGroup::from_elements(std::vector<PauliString> elements) {
    if (elements.empty()) {
        throw StructureError("error group must contain at least the identity");
    }
    AbelianErrorGroup g;
    g.n_ = elements[0].num_qubits();
    bool has_identity = false;
    for (size_t i = 0; i < elements.size(); i++) {
        const PauliString &e = elements[i];
        if (e.num_qubits() != g.n_) {
            throw DimensionError("error group elements have differing qubit counts");
        }
        if (e.phase() != 0) {
            throw StructureError("error group element " + e.str() + " must be phase-free");
        }
        has_identity |= e.is_identity_up_to_phase();
        for (size_t j = 0; j < i; j++) {
            if (elements[j] == e) {
                throw StructureError("duplicate error group element " + e.str());
            }
        }
    }
    if (!has_identity) {
        throw StructureError("error group is missing the identity");
    }
    for (const auto &a : elements) {
        for (const auto &b : elements) {
            if (!commutes(a, b)) {
                throw StructureError("error group is not Abelian: " + a.str() + " and " + b.str() + " anticommute");
            }
            PauliString ab = multiply(a, b);
            if (std::find(elements.begin(), elements.end(), ab) == elements.end()) {
                throw StructureError("error group is not closed: " + a.str() + " * " + b.str() + " = " + ab.str());
            }
        }
    }
    if (!std::has_single_bit(elements.size())) {
        throw StructureError("error group order must be a power of two");
    }
    RowReducer reducer(g.n_);
    for (const auto &e : elements) {
        if (reducer.add(e)) {
            g.generators_.push_back(e);
        }
    }
    g.elements_ = std::move(elements);
    fill_masks(g.n_, g.generators_, g.elements_, g.masks_);
    return g;
}

AbelianErrorGroup AbelianErrorGroup::generated_by(size_t num_qubits, std::vector<PauliString> generators) {
    RowReducer reducer(num_qubits);
    std::vector<PauliString> independent;
    for (const auto &gen : generators) {
        if (gen.num_qubits() != num_qubits) {
            throw DimensionError("generator qubit count mismatch");
        }
        if (reducer.add(gen)) {
            independent.push_back(gen);
        }
    }
    if (independent.size() > 20) {
        throw CapacityError("error group too large to enumerate");
    }
    std::vector<PauliString> elements;
    for (uint64_t m = 0; m < (uint64_t{1} << independent.size()); m++) {
        PauliString p(num_qubits);
        for (size_t i = 0; i < independent.size(); i++) {
            if ((m >> i) & 1) {
                p = multiply(p, independent[i]);
            }
        }
        elements.push_back(p);
    }
    return from_elements(std::move(elements));
}

AbelianErrorGroup AbelianErrorGroup::trivial(size_t num_qubits) {
    return from_elements({PauliString(num_qubits)});
}

std::vector<Character> characters(const AbelianErrorGroup &group) {
    size_t r = group.generators().size();
    std::vector<Character> out;
    for (uint64_t signs = 0; signs < (uint64_t{1} << r); signs++) {
        Character chi;
        chi.generator_signs = signs;
        for (uint64_t mask : group.generator_masks()) {
            chi.values.push_back((std::popcount(mask & signs) & 1) ? -1 : 1);
        }
        out.push_back(std::move(chi));
    }
    return out;
}

Eigen::MatrixXcd pauli_matrix(const PauliString &op) {
    size_t n = op.num_qubits();
    if (n > StateVector::kMaxQubits) {
        throw CapacityError("dense Pauli matrices are limited to 12 qubits");
    }
    size_t dim = size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (uint64_t col = 0; col < dim; col++) {
        StateVector out = apply_pauli(StateVector::basis(n, col), op);
        for (uint64_t row = 0; row < dim; row++) {
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = out[row];
        }
    }
    return m;
}

Eigen::MatrixXcd projector(const AbelianErrorGroup &group, const Character &chi) {
    size_t n = group.num_qubits();
    if (n > StateVector::kMaxQubits) {
        throw CapacityError("projector construction is limited to 12 qubits, got " + std::to_string(n));
    }
    if (chi.values.size() != group.order()) {
        throw DimensionError("character does not match group order");
    }
    auto dim = static_cast<Eigen::Index>(size_t{1} << n);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    for (size_t i = 0; i < group.order(); i++) {
        p += static_cast<double>(chi[i]) * pauli_matrix(group.elements()[i]);
    }
    return p / static_cast<double>(group.order());
}

std::vector<StateVector> df_basis(const AbelianErrorGroup &group, const Character &chi) {
    Eigen::MatrixXcd p = projector(group, chi);
    size_t n = group.num_qubits();
    std::vector<Eigen::VectorXcd> basis;
    for (Eigen::Index col = 0; col < p.cols(); col++) {
        Eigen::VectorXcd v = p.col(col);
        for (const auto &b : basis) {
            v -= b.dot(v) * b;
        }
        double norm = v.norm();
        if (norm < kZeroTol) {
            continue;
        }
        basis.push_back(v / norm);
    }
    std::vector<StateVector> out;
    for (const auto &b : basis) {
        out.push_back(StateVector::from_amplitudes(n, std::vector<Amplitude>(b.data(), b.data() + b.size())));
    }
    return out;
}

StabilizerCode as_stabilizer_code(const AbelianErrorGroup &group, const Character &chi) {
    size_t n = group.num_qubits();
    std::vector<PauliString> generators;
    for (size_t i = 0; i < group.generators().size(); i++) {
        bool negative = (chi.generator_signs >> i) & 1;
        generators.push_back(group.generators()[i].with_phase(negative ? 2 : 0));
    }
    if (generators.size() >= n) {
        throw StructureError("character subspace has dimension " +
                             std::to_string(size_t{1} << (n - std::min(n, generators.size()))) +
                             " and cannot host a logical qubit");
    }
    size_t k = n - generators.size();
    std::vector<PauliString> lx;
    std::vector<PauliString> lz;
    find_logicals(n, k, generators, lx, lz);
    std::vector<bool> passive(generators.size(), true);
    return StabilizerCode("dfs-" + std::to_string(n), n, k, std::move(generators), std::move(lx), std::move(lz),
                          std::move(passive));
}

}  // namespace qdc
