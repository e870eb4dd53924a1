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

#include "qdconcat/statevec.h"

#include <bit>
#include <cmath>

#include "qdconcat/dfs.h"
#include "qdconcat/errors.h"

namespace qdc {

namespace {

void check_qubits(size_t n) {
    if (n > StateVector::kMaxQubits) {
        throw CapacityError("dense statevectors are limited to 12 qubits, got " + std::to_string(n));
    }
}

void check_same(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("statevector qubit counts differ");
    }
}

constexpr Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

StateVector StateVector::basis(size_t num_qubits, uint64_t index) {
    check_qubits(num_qubits);
    std::vector<Amplitude> amps(size_t{1} << num_qubits);
    if (index >= amps.size()) {
        throw DimensionError("basis index out of range");
    }
    amps[index] = 1;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(size_t num_qubits, std::vector<Amplitude> amplitudes) {
    check_qubits(num_qubits);
    if (amplitudes.size() != (size_t{1} << num_qubits)) {
        throw DimensionError("amplitude count must be 2^n");
    }
    double norm2 = 0;
    for (const auto &a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (norm2 < 1e-24) {
        throw DomainError("cannot normalize the zero vector");
    }
    double scale = 1 / std::sqrt(norm2);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::from_kets(size_t num_qubits, std::span<const std::pair<double, std::string>> kets) {
    check_qubits(num_qubits);
    std::vector<Amplitude> amps(size_t{1} << num_qubits);
    for (const auto &[coef, bits] : kets) {
        if (bits.size() != num_qubits) {
            throw DimensionError("ket '" + bits + "' has the wrong length");
        }
        uint64_t index = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') {
                throw ParseError("ket '" + bits + "' must contain only 0 and 1");
            }
            index = (index << 1) | (c == '1' ? 1 : 0);
        }
        amps[index] += coef;
    }
    return from_amplitudes(num_qubits, std::move(amps));
}

double StateVector::norm() const {
    double norm2 = 0;
    for (const auto &a : amps_) {
        norm2 += std::norm(a);
    }
    return std::sqrt(norm2);
}

Circuit &Circuit::h(size_t target) {
    if (target >= n_) {
        throw DimensionError("H target " + std::to_string(target) + " out of range");
    }
    gates_.push_back({Gate::Kind::kH, target});
    return *this;
}

Circuit &Circuit::cnot(size_t control, size_t target) {
    if (control >= n_ || target >= n_ || control == target) {
        throw DimensionError("invalid CNOT(" + std::to_string(control) + ", " + std::to_string(target) + ")");
    }
    gates_.push_back({Gate::Kind::kCnot, target, control});
    return *this;
}

StateVector Circuit::apply(StateVector state) const {
    if (state.num_qubits() != n_) {
        throw DimensionError("circuit and state qubit counts differ");
    }
    auto &amps = state.amps_;
    const double inv_sqrt2 = 1 / std::sqrt(2.0);
    for (const Gate &g : gates_) {
        uint64_t t = qubit_mask(n_, g.target);
        if (g.kind == Gate::Kind::kH) {
            for (uint64_t i = 0; i < amps.size(); i++) {
                if (i & t) {
                    continue;
                }
                Amplitude a0 = amps[i];
                Amplitude a1 = amps[i | t];
                amps[i] = (a0 + a1) * inv_sqrt2;
                amps[i | t] = (a0 - a1) * inv_sqrt2;
            }
        } else {
            uint64_t c = qubit_mask(n_, g.control);
            for (uint64_t i = 0; i < amps.size(); i++) {
                if ((i & c) && !(i & t)) {
                    std::swap(amps[i], amps[i | t]);
                }
            }
        }
    }
    return state;
}

StateVector apply_pauli(const StateVector &state, const PauliString &op) {
    size_t n = state.num_qubits();
    if (op.num_qubits() != n) {
        throw DimensionError("Pauli and state qubit counts differ");
    }
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    for (size_t q = 0; q < n; q++) {
        if (op.x_bit(q)) {
            xmask |= qubit_mask(n, q);
        }
        if (op.z_bit(q)) {
            zmask |= qubit_mask(n, q);
        }
    }
    // Y = iXZ contributes one factor of i per Y letter.
    int base = op.phase() + std::popcount(op.x_bits() & op.z_bits());
    std::vector<Amplitude> out(state.dim());
    for (uint64_t i = 0; i < state.dim(); i++) {
        int sign = (std::popcount(i & zmask) & 1) ? 2 : 0;
        out[i ^ xmask] = kIPow[(base + sign) & 3] * state[i];
    }
    return StateVector(n, std::move(out));
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    check_same(a, b);
    Amplitude total = 0;
    for (uint64_t i = 0; i < a.dim(); i++) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

Amplitude expectation(const StateVector &state, const PauliString &op) {
    return inner_product(state, apply_pauli(state, op));
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    check_same(a, b);
    return std::abs(inner_product(a, b)) >= 1 - tol;
}

std::optional<uint64_t> first_mismatch(const StateVector &a, const StateVector &b, double tol) {
    check_same(a, b);
    Amplitude overlap = inner_product(a, b);
    Amplitude phase = std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap) : Amplitude{1};
    for (uint64_t i = 0; i < a.dim(); i++) {
        if (std::abs(a[i] * phase - b[i]) > tol) {
            return i;
        }
    }
    return std::nullopt;
}

KnillLaflammeResult kl_check(
    const StateVector &zero, const StateVector &one, std::span<const PauliString> errors, double tol) {
    check_same(zero, one);
    if (std::abs(zero.norm() - 1) > 1e-9 || std::abs(one.norm() - 1) > 1e-9 ||
        std::abs(inner_product(zero, one)) > 1e-9) {
        throw DomainError("Knill-Laflamme check requires orthonormal codewords");
    }
    std::vector<StateVector> e0;
    std::vector<StateVector> e1;
    for (const auto &e : errors) {
        e0.push_back(apply_pauli(zero, e));
        e1.push_back(apply_pauli(one, e));
    }
    for (size_t m = 0; m < errors.size(); m++) {
        for (size_t n = 0; n < errors.size(); n++) {
            // <w_i|E_m^dag E_n|w_j> = <E_m w_i | E_n w_j>
            Amplitude d0 = inner_product(e0[m], e0[n]);
            Amplitude d1 = inner_product(e1[m], e1[n]);
            Amplitude c01 = inner_product(e0[m], e1[n]);
            Amplitude c10 = inner_product(e1[m], e0[n]);
            if (std::abs(c01) >= tol) {
                return {false, KnillLaflammeWitness{m, n, 0, 1, c01, "off-diagonal element is nonzero"}};
            }
            if (std::abs(c10) >= tol) {
                return {false, KnillLaflammeWitness{m, n, 1, 0, c10, "off-diagonal element is nonzero"}};
            }
            if (std::abs(d0 - d1) >= tol) {
                return {false, KnillLaflammeWitness{m, n, 0, 1, d0 - d1, "diagonal elements differ"}};
            }
        }
    }
    return {true, std::nullopt};
}

bool dfs_invariance(const StateVector &state, const AbelianErrorGroup &group, const Character &chi, double tol) {
    if (state.num_qubits() != group.num_qubits()) {
        throw DimensionError("state and error group qubit counts differ");
    }
    for (size_t i = 0; i < group.order(); i++) {
        StateVector moved = apply_pauli(state, group.elements()[i]);
        for (uint64_t a = 0; a < state.dim(); a++) {
            if (std::abs(moved[a] - static_cast<double>(chi[i]) * state[a]) > tol) {
                return false;
            }
        }
    }
    return true;
}

Circuit qd6_encoder() {
    Circuit c(6);
    c.cnot(0, 2).cnot(0, 4);
    c.h(1).h(3).h(5);
    c.cnot(1, 0).cnot(3, 2).cnot(5, 4);
    return c;
}

Circuit dq6_encoder() {
    Circuit c(6);
    c.h(3);
    c.cnot(3, 0).cnot(0, 1).cnot(0, 2).cnot(3, 4).cnot(3, 5);
    return c;
}

std::pair<StateVector, StateVector> codewords_from_stabilizers(const StabilizerCode &code) {
    size_t n = code.n();
    check_qubits(n);
    if (code.k() != 1) {
        throw UnsupportedError("codeword construction requires k == 1");
    }
    std::vector<PauliString> projectors = code.generators();
    projectors.push_back(code.logical_z()[0]);
    for (uint64_t seed = 0; seed < (uint64_t{1} << n); seed++) {
        StateVector v = StateVector::basis(n, seed);
        std::vector<Amplitude> acc = v.amplitudes();
        bool zero = false;
        for (const auto &s : projectors) {
            StateVector cur = StateVector::from_amplitudes(n, acc);
            StateVector moved = apply_pauli(cur, s);
            double norm2 = 0;
            for (uint64_t i = 0; i < acc.size(); i++) {
                acc[i] = (cur[i] + moved[i]) * 0.5;
                norm2 += std::norm(acc[i]);
            }
            if (norm2 < 1e-20) {
                zero = true;
                break;
            }
        }
        if (zero) {
            continue;
        }
        StateVector w0 = StateVector::from_amplitudes(n, std::move(acc));
        StateVector w1 = apply_pauli(w0, code.logical_x()[0]);
        return {w0, w1};
    }
    throw ConsistencyError("code '" + code.name() + "' has an empty code space");
}

StateVector substitute(const StateVector &outer, const StateVector &inner_zero, const StateVector &inner_one) {
    check_same(inner_zero, inner_one);
    size_t m = outer.num_qubits();
    size_t ni = inner_zero.num_qubits();
    size_t n = m * ni;
    check_qubits(n);
    std::vector<Amplitude> out(size_t{1} << n);
    for (uint64_t x = 0; x < outer.dim(); x++) {
        if (std::abs(outer[x]) == 0) {
            continue;
        }
        std::vector<Amplitude> prod{outer[x]};
        for (size_t j = 0; j < m; j++) {
            const StateVector &block = ((x >> (m - 1 - j)) & 1) ? inner_one : inner_zero;
            std::vector<Amplitude> next(prod.size() * block.dim());
            for (size_t a = 0; a < prod.size(); a++) {
                for (size_t b = 0; b < block.dim(); b++) {
                    next[a * block.dim() + b] = prod[a] * block[b];
                }
            }
            prod = std::move(next);
        }
        for (size_t i = 0; i < out.size(); i++) {
            out[i] += prod[i];
        }
    }
    return StateVector::from_amplitudes(n, std::move(out));
}

std::pair<StateVector, StateVector> encoded_codewords(ConcatCode code) {
    auto run = [](const Circuit &c) {
        uint64_t one = qubit_mask(c.num_qubits(), 0);
        return std::pair{c.apply(StateVector::basis(c.num_qubits(), 0)), c.apply(StateVector::basis(c.num_qubits(), one))};
    };
    auto nest = [](const StabilizerCode &outer, const StabilizerCode &inner) {
        auto [o0, o1] = codewords_from_stabilizers(outer);
        auto [i0, i1] = codewords_from_stabilizers(inner);
        return std::pair{substitute(o0, i0, i1), substitute(o1, i0, i1)};
    };
    switch (code) {
        case ConcatCode::kQD6:
            return run(qd6_encoder());
        case ConcatCode::kDQ6:
            return run(dq6_encoder());
        case ConcatCode::kQD10:
            return nest(builtin("knill-laflamme-5"), builtin("dfs-2"));
        case ConcatCode::kDQ10:
            return nest(builtin("dfs-2"), builtin("knill-laflamme-5"));
    }
    throw LookupError("unknown concatenated code");
}

}  // namespace qdc
