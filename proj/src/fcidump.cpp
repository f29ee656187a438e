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
#include "cvqe/fcidump.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cvqe {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("FCIDUMP line " + std::to_string(line_no) + ": " +
                             what);
}

bool parse_double(std::string token, double& out) {
    for (auto& ch : token)
        if (ch == 'D' || ch == 'd') ch = 'E';
    try {
        std::size_t used = 0;
        out = std::stod(token, &used);
        return used == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_int(const std::string& token, int& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

// Header fields may spread over several lines terminated by &END or /.
struct Header {
    int norb = -1;
    int nelec = -1;
    int ms2 = 0;
    int lines_consumed = 0;
};

Header parse_header(std::istream& in) {
    Header header;
    std::string collected;
    std::string line;
    int line_no = 0;
    bool terminated = false;
    while (std::getline(in, line)) {
        ++line_no;
        collected += ' ' + line;
        const auto end_pos = collected.find("&END");
        const auto slash_pos = collected.find('/');
        if (end_pos != std::string::npos || slash_pos != std::string::npos) {
            collected = collected.substr(0, std::min(end_pos, slash_pos));
            terminated = true;
            break;
        }
        if (line_no > 64) break;
    }
    if (!terminated) fail(line_no, "header not terminated by &END or /");
    header.lines_consumed = line_no;

    // Tokenize KEY=v1,v2,... pairs; commas and whitespace both separate.
    for (auto& ch : collected)
        if (ch == ',' || ch == '\t') ch = ' ';
    const auto fci_pos = collected.find("&FCI");
    if (fci_pos == std::string::npos) fail(1, "missing &FCI header marker");
    collected = collected.substr(fci_pos + 4);

    std::istringstream tokens(collected);
    std::string token;
    std::string key;
    while (tokens >> token) {
        const auto eq = token.find('=');
        std::string value;
        if (eq != std::string::npos) {
            key = token.substr(0, eq);
            value = token.substr(eq + 1);
            std::transform(key.begin(), key.end(), key.begin(), ::toupper);
        } else {
            value = token;  // continuation of a value list (e.g. ORBSYM)
        }
        if (value.empty()) continue;
        int parsed = 0;
        if (key == "NORB") {
            if (!parse_int(value, parsed)) fail(1, "bad NORB value '" + value + "'");
            header.norb = parsed;
        } else if (key == "NELEC") {
            if (!parse_int(value, parsed)) fail(1, "bad NELEC value '" + value + "'");
            header.nelec = parsed;
        } else if (key == "MS2") {
            if (!parse_int(value, parsed)) fail(1, "bad MS2 value '" + value + "'");
            header.ms2 = parsed;
        }
        // ORBSYM, ISYM, IUHF, ... : parsed and ignored.
    }
    if (header.norb < 0) fail(1, "header does not define NORB");
    if (header.nelec < 0) fail(1, "header does not define NELEC");
    return header;
}

std::uint64_t canonical_pair(int p, int q) {
    if (p < q) std::swap(p, q);
    return (static_cast<std::uint64_t>(p) << 16) | static_cast<std::uint64_t>(q);
}

std::uint64_t canonical_quad(int p, int q, int r, int s) {
    auto pq = canonical_pair(p, q);
    auto rs = canonical_pair(r, s);
    if (pq < rs) std::swap(pq, rs);
    return (pq << 32) | rs;
}

}  // namespace

void OrbitalIntegrals::set_one_body(int p, int q, double value) {
    h[static_cast<std::size_t>(p) * n_spatial + q] = value;
    h[static_cast<std::size_t>(q) * n_spatial + p] = value;
}

void OrbitalIntegrals::set_two_body(int p, int q, int r, int s, double value) {
    const auto n = static_cast<std::size_t>(n_spatial);
    const auto at = [&](int a, int b, int c, int d) -> double& {
        return v_chem[((static_cast<std::size_t>(a) * n + b) * n + c) * n + d];
    };
    at(p, q, r, s) = value;
    at(q, p, r, s) = value;
    at(p, q, s, r) = value;
    at(q, p, s, r) = value;
    at(r, s, p, q) = value;
    at(s, r, p, q) = value;
    at(r, s, q, p) = value;
    at(s, r, q, p) = value;
}

void OrbitalIntegrals::validate(double tol) const {
    if (n_electrons < 0 || n_electrons > 2 * n_spatial)
        throw std::runtime_error("electron count " + std::to_string(n_electrons) +
                                 " outside [0, 2*n_spatial]");
    for (int p = 0; p < n_spatial; ++p)
        for (int q = 0; q < p; ++q)
            if (std::abs(one_body(p, q) - one_body(q, p)) > tol)
                throw std::runtime_error("one-electron integrals not symmetric");
    for (int p = 0; p < n_spatial; ++p)
        for (int q = 0; q < n_spatial; ++q)
            for (int r = 0; r < n_spatial; ++r)
                for (int s = 0; s < n_spatial; ++s) {
                    const double ref = two_body(p, q, r, s);
                    if (std::abs(two_body(q, p, r, s) - ref) > tol ||
                        std::abs(two_body(p, q, s, r) - ref) > tol ||
                        std::abs(two_body(r, s, p, q) - ref) > tol)
                        throw std::runtime_error(
                            "two-electron integrals break 8-fold symmetry");
                }
}

OrbitalIntegrals parse_fcidump(std::istream& in) {
    const Header header = parse_header(in);
    const int n = header.norb;

    OrbitalIntegrals out;
    out.n_spatial = n;
    out.n_electrons = header.nelec;
    out.ms2 = header.ms2;
    out.h.assign(static_cast<std::size_t>(n) * n, 0.0);
    out.v_chem.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);

    std::map<std::uint64_t, double> seen_h, seen_v;
    bool have_core = false;
    double core = 0.0;

    std::string line;
    int line_no = header.lines_consumed;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string vtok;
        if (!(fields >> vtok)) continue;  // blank line
        double value = 0.0;
        if (!parse_double(vtok, value)) fail(line_no, "bad value '" + vtok + "'");
        std::array<int, 4> idx{};
        for (int k = 0; k < 4; ++k) {
            std::string tok;
            if (!(fields >> tok) || !parse_int(tok, idx[k]))
                fail(line_no, "expected four integer indices");
        }
        std::string trailing;
        if (fields >> trailing) fail(line_no, "trailing token '" + trailing + "'");
        for (int k = 0; k < 4; ++k)
            if (idx[k] < 0 || idx[k] > n)
                fail(line_no, "index " + std::to_string(idx[k]) +
                                  " outside [0, " + std::to_string(n) + "]");

        const auto [i, j, k, l] = idx;
        const double conflict_tol = 1e-10;
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            if (have_core && std::abs(core - value) > conflict_tol)
                fail(line_no, "conflicting core energy entries");
            core = value;
            have_core = true;
        } else if (k == 0 && l == 0) {
            if (i == 0 || j == 0) fail(line_no, "malformed one-electron record");
            const auto key = canonical_pair(i - 1, j - 1);
            if (auto it = seen_h.find(key);
                it != seen_h.end() && std::abs(it->second - value) > conflict_tol)
                fail(line_no, "conflicting duplicate one-electron entry");
            seen_h[key] = value;
            out.set_one_body(i - 1, j - 1, value);
        } else if (i > 0 && j > 0 && k > 0 && l > 0) {
            const auto key = canonical_quad(i - 1, j - 1, k - 1, l - 1);
            if (auto it = seen_v.find(key);
                it != seen_v.end() && std::abs(it->second - value) > conflict_tol)
                fail(line_no, "conflicting duplicate two-electron entry");
            seen_v[key] = value;
            out.set_two_body(i - 1, j - 1, k - 1, l - 1, value);
        } else {
            fail(line_no, "malformed record: indices " + std::to_string(i) + " " +
                              std::to_string(j) + " " + std::to_string(k) + " " +
                              std::to_string(l));
        }
    }
    out.e_core = core;
    out.validate();
    return out;
}

OrbitalIntegrals parse_fcidump(const std::string& text) {
    std::istringstream in(text);
    return parse_fcidump(in);
}

OrbitalIntegrals load_fcidump(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open FCIDUMP file: " + path);
    return parse_fcidump(in);
}

}  // namespace cvqe
