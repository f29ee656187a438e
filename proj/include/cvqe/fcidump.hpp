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

#include <iosfwd>
#include <string>
#include <vector>

namespace cvqe {

/// Molecular-orbital integrals in Hartree. `h` is the symmetric one-electron
/// matrix, `v_chem` the two-electron tensor in chemists' notation (pq|rs)
/// with the full 8-fold permutational symmetry expanded.
struct OrbitalIntegrals {
    int n_spatial = 0;
    int n_electrons = 0;
    int ms2 = 0;
    double e_core = 0.0;
    std::vector<double> h;       // n_spatial^2, row-major
    std::vector<double> v_chem;  // n_spatial^4

    double one_body(int p, int q) const {
        return h[static_cast<std::size_t>(p) * n_spatial + q];
    }
    /// Chemists' (pq|rs).
    double two_body(int p, int q, int r, int s) const {
        const auto n = static_cast<std::size_t>(n_spatial);
        return v_chem[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s];
    }

    void set_one_body(int p, int q, double value);
    void set_two_body(int p, int q, int r, int s, double value);

    /// Checks the h/v symmetries and the electron-count bound; throws on
    /// violation.
    void validate(double tol = 1e-12) const;
};

/// Parses the FCIDUMP interchange format: a namelist-style header carrying
/// NORB, NELEC and MS2 followed by `value i j k l` records with 1-based
/// indices. `k = l = 0` marks one-electron entries, all-zero indices the
/// core energy, and Fortran `D` exponents are accepted. ORBSYM/ISYM and
/// other header fields are parsed and ignored.
OrbitalIntegrals parse_fcidump(std::istream& in);
OrbitalIntegrals parse_fcidump(const std::string& text);
OrbitalIntegrals load_fcidump(const std::string& path);

}  // namespace cvqe
