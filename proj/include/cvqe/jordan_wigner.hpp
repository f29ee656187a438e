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

#include "cvqe/fcidump.hpp"
#include "cvqe/pauli.hpp"

namespace cvqe {

enum class LadderKind { kCreation, kAnnihilation };

/// Jordan-Wigner image of a single ladder operator:
///   a^dag_j -> (prod_{k<j} Z_k) (X_j - i Y_j) / 2
///   a_j     -> (prod_{k<j} Z_k) (X_j + i Y_j) / 2
/// Spin orbital j lives on qubit j. Products of these compose through
/// PauliOperator::multiplied_by with full phase tracking.
PauliOperator jordan_wigner(LadderKind kind, int spin_orbital, int n_qubits);

/// Spin orbital <-> qubit convention: spatial orbital p with alpha spin sits
/// on qubit 2p, with beta spin on qubit 2p + 1, so the Hartree-Fock string
/// is a contiguous block of ones on the lowest qubits.
inline int spin_orbital_index(int spatial, int spin) { return 2 * spatial + spin; }

/// Second-quantized molecular Hamiltonian mapped to qubits:
///
///   H = e_core
///     + sum_{pq} h_pq sum_s  a^dag_{p,s} a_{q,s}
///     + 1/2 sum_{pqrs} v_pqrs sum_{s,s'} a^dag_{p,s} a^dag_{q,s'} a_{s,s'} a_{r,s}
///
/// with physicists' v_pqrs = (pr|qs) taken from the chemists' tensor. The
/// result is simplified, pruned at 1e-12 and carries real weights only.
QubitHamiltonian build_qubit_hamiltonian(const OrbitalIntegrals& ints);

}  // namespace cvqe
