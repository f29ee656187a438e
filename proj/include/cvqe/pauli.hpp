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
#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cvqe {

using Complex = std::complex<double>;

/// A Pauli string on up to 64 qubits in symplectic (x, z) form.
///
/// Qubit j carries X when only bit j of `x` is set, Z when only bit j of
/// `z` is set, Y when both are set, and I when neither is. The operator
/// represented is the canonical tensor product of those single-qubit
/// Paulis (no extra global phase), whose action on a basis state |b> is
///
///   P |b> = i^{popcount(x & z)} * (-1)^{popcount(b & z)} |b ^ x>.
struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    friend bool operator==(const PauliString&, const PauliString&) = default;

    bool is_identity() const { return x == 0 && z == 0; }

    /// Weight of the i^k prefactor in the basis action (number of Y's mod 4).
    int phase_exponent() const { return std::popcount(x & z) & 3; }

    /// Letters I/X/Y/Z for qubits 0..n_qubits-1, qubit 0 first.
    std::string to_string(int n_qubits) const;
};

struct PauliStringHash {
    std::size_t operator()(const PauliString& p) const {
        std::uint64_t h = p.x * 0x9e3779b97f4a7c15ULL;
        h ^= p.z + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// phase * P(x, z) resulting from the product P(a) * P(b); the mask part is
/// simply (a.x ^ b.x, a.z ^ b.z), this returns the scalar in {1, i, -1, -i}.
Complex pauli_product_phase(const PauliString& a, const PauliString& b);

/// i^k * (-1)^{popcount(b & z)} for the action of P on basis index b, split
/// so callers can hoist the i^k part out of amplitude loops.
inline int pauli_z_sign(const PauliString& p, std::uint64_t basis) {
    return (std::popcount(basis & p.z) & 1) ? -1 : 1;
}

Complex phase_i_power(int k);

/// A complex-weighted sum of Pauli strings; the workhorse for operator
/// algebra (Jordan-Wigner expansion, products of ladder operators).
class PauliOperator {
  public:
    PauliOperator() = default;
    PauliOperator(Complex coeff, PauliString string) { add_term(coeff, string); }

    static PauliOperator identity(Complex coeff = 1.0);

    void add_term(Complex coeff, PauliString string);
    void add(const PauliOperator& other);

    PauliOperator multiplied_by(const PauliOperator& rhs) const;
    PauliOperator scaled(Complex factor) const;
    PauliOperator adjoint() const;

    /// Merge equal strings and drop terms with |coeff| <= tol.
    void simplify(double tol = kPruneTol);

    const std::vector<std::pair<PauliString, Complex>>& terms() const {
        return terms_;
    }
    std::size_t size() const { return terms_.size(); }

    static constexpr double kPruneTol = 1e-12;

  private:
    std::vector<std::pair<PauliString, Complex>> terms_;
};

struct PauliTerm {
    double coeff = 0.0;
    PauliString string;
};

/// Hermitian qubit operator with real Pauli weights, simplified and sorted
/// into a fixed canonical term order.
struct QubitHamiltonian {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;

    /// Builds from a complex-weighted operator. Imaginary residues below
    /// tol are dropped; anything larger throws (the inputs we accept must
    /// produce real weights).
    static QubitHamiltonian from_operator(const PauliOperator& op, int n_qubits,
                                          double tol = PauliOperator::kPruneTol);

    /// <hf| H |hf> over the diagonal (x == 0) terms.
    double diagonal_expectation(std::uint64_t basis) const;
};

}  // namespace cvqe
