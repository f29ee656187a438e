// Copyright 2026 The cvqe developers.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cvqe/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace cvqe {

std::string PauliString::to_string(int n_qubits) const {
    std::string out(static_cast<std::size_t>(n_qubits), 'I');
    for (int q = 0; q < n_qubits; ++q) {
        const bool xb = (x >> q) & 1, zb = (z >> q) & 1;
        if (xb && zb)
            out[q] = 'Y';
        else if (xb)
            out[q] = 'X';
        else if (zb)
            out[q] = 'Z';
    }
    return out;
}

Complex phase_i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Complex pauli_product_phase(const PauliString& a, const PauliString& b) {
    // Acting on |v>: P(b) contributes i^{cb} (-1)^{v.zb}, then P(a)
    // contributes i^{ca} (-1)^{(v^xb).za}. Rewriting against the canonical
    // P(a^b) form leaves i^{ca+cb-cab} * (-1)^{popcount(xb & za)}.
    const int ca = a.phase_exponent();
    const int cb = b.phase_exponent();
    const int cab = std::popcount((a.x ^ b.x) & (a.z ^ b.z)) & 3;
    int k = ca + cb - cab;
    if (std::popcount(b.x & a.z) & 1) k += 2;
    return phase_i_power(k);
}

PauliOperator PauliOperator::identity(Complex coeff) {
    return PauliOperator(coeff, PauliString{});
}

void PauliOperator::add_term(Complex coeff, PauliString string) {
    terms_.emplace_back(string, coeff);
}

void PauliOperator::add(const PauliOperator& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

PauliOperator PauliOperator::multiplied_by(const PauliOperator& rhs) const {
    PauliOperator out;
    out.terms_.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& [pa, ca] : terms_) {
        for (const auto& [pb, cb] : rhs.terms_) {
            const PauliString prod{pa.x ^ pb.x, pa.z ^ pb.z};
            out.terms_.emplace_back(prod, ca * cb * pauli_product_phase(pa, pb));
        }
    }
    return out;
}

PauliOperator PauliOperator::scaled(Complex factor) const {
    PauliOperator out = *this;
    for (auto& [p, c] : out.terms_) c *= factor;
    return out;
}

PauliOperator PauliOperator::adjoint() const {
    // P(x, z) is Hermitian, so only coefficients conjugate.
    PauliOperator out = *this;
    for (auto& [p, c] : out.terms_) c = std::conj(c);
    return out;
}

void PauliOperator::simplify(double tol) {
    std::unordered_map<PauliString, Complex, PauliStringHash> merged;
    merged.reserve(terms_.size());
    for (const auto& [p, c] : terms_) merged[p] += c;
    terms_.clear();
    for (const auto& [p, c] : merged)
        if (std::abs(c) > tol) terms_.emplace_back(p, c);
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first.x, a.first.z) < std::tie(b.first.x, b.first.z);
    });
}

QubitHamiltonian QubitHamiltonian::from_operator(const PauliOperator& op,
                                                 int n_qubits, double tol) {
    PauliOperator simplified = op;
    simplified.simplify(tol);
    QubitHamiltonian out;
    out.n_qubits = n_qubits;
    out.terms.reserve(simplified.size());
    const std::uint64_t mask =
        n_qubits >= 64 ? ~0ULL : ((1ULL << n_qubits) - 1);
    for (const auto& [p, c] : simplified.terms()) {
        if ((p.x | p.z) & ~mask)
            throw std::invalid_argument("Pauli term acts outside qubit range");
        if (std::abs(c.imag()) >= tol)
            throw std::runtime_error("non-real Pauli coefficient " +
                                     std::to_string(c.imag()) + " on term " +
                                     p.to_string(n_qubits));
        out.terms.push_back({c.real(), p});
    }
    return out;
}

double QubitHamiltonian::diagonal_expectation(std::uint64_t basis) const {
    double e = 0.0;
    for (const auto& t : terms)
        if (t.string.x == 0) e += t.coeff * pauli_z_sign(t.string, basis);
    return e;
}

}  // namespace cvqe
