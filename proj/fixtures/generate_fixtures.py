#!/usr/bin/env python3
"""Fixture generator: minimal-basis molecular integrals -> FCIDUMP files.

Self-contained restricted Hartree-Fock in the STO-3G basis (McMurchie-Davidson
integrals over s/p Gaussians), followed by an AO->MO transform and an FCIDUMP
dump of the molecular-orbital integrals. Canonical orbitals are ordered by
increasing orbital energy. For the N2 active-space fixtures the lowest four
MOs are frozen into the core energy (6 electrons in 6 spatial orbitals remain).

Each fixture is cross-checked by an independent determinant-basis FCI
(Slater-Condon rules, dense diagonalization) computed from the re-read file;
the resulting reference energies land in manifest.json.

Requires numpy + scipy only. Regenerate with:  python3 generate_fixtures.py
"""

import functools
import json
import math
import os
from itertools import combinations

import numpy as np
from scipy.special import hyp1f1

ANGSTROM_TO_BOHR = 1.0 / 0.529177210903

# ---------------------------------------------------------------------------
# STO-3G basis data (Basis Set Exchange). Universal 3-Gaussian fits,
# element-scaled exponents. Contraction coefficients are for normalized
# primitives; contracted shells are renormalized below.
# ---------------------------------------------------------------------------

STO3G = {
    "H": [
        ("S", [3.42525091, 0.62391373, 0.16885540],
              [0.15432897, 0.53532814, 0.44463454]),
    ],
    "Be": [
        ("S", [30.1678710, 5.4951153, 1.4871927],
              [0.15432897, 0.53532814, 0.44463454]),
        ("S", [1.3148331, 0.3055389, 0.0993707],
              [-0.09996723, 0.39951283, 0.70011547]),
        ("P", [1.3148331, 0.3055389, 0.0993707],
              [0.15591627, 0.60768372, 0.39195739]),
    ],
    "N": [
        ("S", [99.1061690, 18.0523120, 4.8856602],
              [0.15432897, 0.53532814, 0.44463454]),
        ("S", [3.7804559, 0.8784966, 0.2857144],
              [-0.09996723, 0.39951283, 0.70011547]),
        ("P", [3.7804559, 0.8784966, 0.2857144],
              [0.15591627, 0.60768372, 0.39195739]),
    ],
}

CHARGE = {"H": 1, "Be": 4, "N": 7}


def double_factorial(n):
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def primitive_norm(alpha, lmn):
    l, m, n = lmn
    L = l + m + n
    num = (2.0 * alpha / math.pi) ** 1.5 * (4.0 * alpha) ** L
    den = (double_factorial(2 * l - 1) * double_factorial(2 * m - 1)
           * double_factorial(2 * n - 1))
    return math.sqrt(num / den)


class BasisFunction:
    """One contracted Cartesian Gaussian."""

    def __init__(self, center, lmn, exps, coefs):
        self.center = np.asarray(center, dtype=float)
        self.lmn = lmn
        self.exps = list(exps)
        self.coefs = [c * primitive_norm(a, lmn) for a, c in zip(exps, coefs)]
        s = overlap_contracted(self, self)
        self.coefs = [c / math.sqrt(s) for c in self.coefs]


def build_basis(atoms):
    basis = []
    for sym, xyz in atoms:
        for shell, exps, coefs in STO3G[sym]:
            if shell == "S":
                basis.append(BasisFunction(xyz, (0, 0, 0), exps, coefs))
            elif shell == "P":
                for lmn in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    basis.append(BasisFunction(xyz, lmn, exps, coefs))
    return basis


# ---------------------------------------------------------------------------
# McMurchie-Davidson integrals
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def hermite_E(i, j, t, Qx, a, b):
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-q * Qx * Qx)
    if i > 0:
        return (hermite_E(i - 1, j, t - 1, Qx, a, b) / (2 * p)
                - (q * Qx / a) * hermite_E(i - 1, j, t, Qx, a, b)
                + (t + 1) * hermite_E(i - 1, j, t + 1, Qx, a, b))
    return (hermite_E(i, j - 1, t - 1, Qx, a, b) / (2 * p)
            + (q * Qx / b) * hermite_E(i, j - 1, t, Qx, a, b)
            + (t + 1) * hermite_E(i, j - 1, t + 1, Qx, a, b))


def boys(n, T):
    return hyp1f1(n + 0.5, n + 1.5, -T) / (2.0 * n + 1.0)


def overlap_prim(a, lmn1, A, b, lmn2, B):
    s = 1.0
    for k in range(3):
        s *= hermite_E(lmn1[k], lmn2[k], 0, A[k] - B[k], a, b)
    return s * (math.pi / (a + b)) ** 1.5


def overlap_contracted(g1, g2):
    return sum(c1 * c2 * overlap_prim(a1, g1.lmn, g1.center, a2, g2.lmn, g2.center)
               for a1, c1 in zip(g1.exps, g1.coefs)
               for a2, c2 in zip(g2.exps, g2.coefs))


def kinetic_prim(a, lmn1, A, b, lmn2, B):
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * overlap_prim(a, lmn1, A, b, lmn2, B)
    term1 = -2.0 * b * b * (
        overlap_prim(a, lmn1, A, b, (l2 + 2, m2, n2), B)
        + overlap_prim(a, lmn1, A, b, (l2, m2 + 2, n2), B)
        + overlap_prim(a, lmn1, A, b, (l2, m2, n2 + 2), B))
    term2 = -0.5 * (
        l2 * (l2 - 1) * overlap_prim(a, lmn1, A, b, (l2 - 2, m2, n2), B)
        + m2 * (m2 - 1) * overlap_prim(a, lmn1, A, b, (l2, m2 - 2, n2), B)
        + n2 * (n2 - 1) * overlap_prim(a, lmn1, A, b, (l2, m2, n2 - 2), B))
    return term0 + term1 + term2


def hermite_R(t, u, v, n, p, PC, RPC2, cache):
    key = (t, u, v, n)
    if key in cache:
        return cache[key]
    if t < 0 or u < 0 or v < 0:
        return 0.0
    if t == u == v == 0:
        val = (-2.0 * p) ** n * boys(n, p * RPC2)
    elif t > 0:
        val = ((t - 1) * hermite_R(t - 2, u, v, n + 1, p, PC, RPC2, cache)
               + PC[0] * hermite_R(t - 1, u, v, n + 1, p, PC, RPC2, cache))
    elif u > 0:
        val = ((u - 1) * hermite_R(t, u - 2, v, n + 1, p, PC, RPC2, cache)
               + PC[1] * hermite_R(t, u - 1, v, n + 1, p, PC, RPC2, cache))
    else:
        val = ((v - 1) * hermite_R(t, u, v - 2, n + 1, p, PC, RPC2, cache)
               + PC[2] * hermite_R(t, u, v - 1, n + 1, p, PC, RPC2, cache))
    cache[key] = val
    return val


def nuclear_prim(a, lmn1, A, b, lmn2, B, C):
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    p = a + b
    P = (a * A + b * B) / p
    PC = P - C
    RPC2 = float(np.dot(PC, PC))
    cache = {}
    val = 0.0
    for t in range(l1 + l2 + 1):
        for u in range(m1 + m2 + 1):
            for v in range(n1 + n2 + 1):
                val += (hermite_E(l1, l2, t, A[0] - B[0], a, b)
                        * hermite_E(m1, m2, u, A[1] - B[1], a, b)
                        * hermite_E(n1, n2, v, A[2] - B[2], a, b)
                        * hermite_R(t, u, v, 0, p, PC, RPC2, cache))
    return 2.0 * math.pi / p * val


def eri_prim(a, lmn1, A, b, lmn2, B, c, lmn3, C, d, lmn4, D):
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    l3, m3, n3 = lmn3
    l4, m4, n4 = lmn4
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * A + b * B) / p
    Q = (c * C + d * D) / q
    PQ = P - Q
    RPQ2 = float(np.dot(PQ, PQ))
    cache = {}
    val = 0.0
    for t in range(l1 + l2 + 1):
        E1 = hermite_E(l1, l2, t, A[0] - B[0], a, b)
        for u in range(m1 + m2 + 1):
            E2 = hermite_E(m1, m2, u, A[1] - B[1], a, b)
            for v in range(n1 + n2 + 1):
                E3 = hermite_E(n1, n2, v, A[2] - B[2], a, b)
                for tau in range(l3 + l4 + 1):
                    E4 = hermite_E(l3, l4, tau, C[0] - D[0], c, d)
                    for nu in range(m3 + m4 + 1):
                        E5 = hermite_E(m3, m4, nu, C[1] - D[1], c, d)
                        for phi in range(n3 + n4 + 1):
                            E6 = hermite_E(n3, n4, phi, C[2] - D[2], c, d)
                            sign = (-1.0) ** (tau + nu + phi)
                            val += (E1 * E2 * E3 * E4 * E5 * E6 * sign
                                    * hermite_R(t + tau, u + nu, v + phi, 0,
                                                alpha, PQ, RPQ2, cache))
    return val * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def contracted(fn, g1, g2):
    return sum(c1 * c2 * fn(a1, g1.lmn, g1.center, a2, g2.lmn, g2.center)
               for a1, c1 in zip(g1.exps, g1.coefs)
               for a2, c2 in zip(g2.exps, g2.coefs))


def eri_contracted(g1, g2, g3, g4):
    val = 0.0
    for a1, c1 in zip(g1.exps, g1.coefs):
        for a2, c2 in zip(g2.exps, g2.coefs):
            for a3, c3 in zip(g3.exps, g3.coefs):
                for a4, c4 in zip(g4.exps, g4.coefs):
                    val += c1 * c2 * c3 * c4 * eri_prim(
                        a1, g1.lmn, g1.center, a2, g2.lmn, g2.center,
                        a3, g3.lmn, g3.center, a4, g4.lmn, g4.center)
    return val


def ao_integrals(atoms, basis):
    n = len(basis)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = overlap_contracted(basis[i], basis[j])
            T[i, j] = T[j, i] = contracted(kinetic_prim, basis[i], basis[j])
            v = 0.0
            for sym, xyz in atoms:
                Zc = CHARGE[sym]
                v -= Zc * sum(
                    c1 * c2 * nuclear_prim(a1, basis[i].lmn, basis[i].center,
                                           a2, basis[j].lmn, basis[j].center,
                                           np.asarray(xyz))
                    for a1, c1 in zip(basis[i].exps, basis[i].coefs)
                    for a2, c2 in zip(basis[j].exps, basis[j].coefs))
            V[i, j] = V[j, i] = v

    eri = np.zeros((n, n, n, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1)]
    for ij, (i, j) in enumerate(pairs):
        for kl in range(ij + 1):
            k, l = pairs[kl]
            val = eri_contracted(basis[i], basis[j], basis[k], basis[l])
            for (a, b) in [(i, j), (j, i)]:
                for (c, d) in [(k, l), (l, k)]:
                    eri[a, b, c, d] = val
                    eri[c, d, a, b] = val
    return S, T, V, eri


def nuclear_repulsion(atoms):
    e = 0.0
    for i in range(len(atoms)):
        for j in range(i):
            Zi, Zj = CHARGE[atoms[i][0]], CHARGE[atoms[j][0]]
            r = np.linalg.norm(np.asarray(atoms[i][1]) - np.asarray(atoms[j][1]))
            e += Zi * Zj / r
    return e


# ---------------------------------------------------------------------------
# Restricted Hartree-Fock with DIIS
# ---------------------------------------------------------------------------

def rhf(S, Hcore, eri, n_electrons, max_iter=400, tol=1e-12):
    n = S.shape[0]
    nocc = n_electrons // 2
    s_eval, s_evec = np.linalg.eigh(S)
    X = s_evec @ np.diag(s_eval ** -0.5) @ s_evec.T

    def fock(D):
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        return Hcore + 2.0 * J - K

    def density(F):
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        Cocc = C[:, :nocc]
        return Cocc @ Cocc.T, C, eps

    # GWH guess; a bare core guess can land on symmetry-broken SCF solutions
    F0 = 0.875 * S * (np.diag(Hcore)[:, None] + np.diag(Hcore)[None, :])
    np.fill_diagonal(F0, np.diag(Hcore))
    D, C, eps = density(F0)
    errs, focks = [], []
    e_old = 0.0
    for it in range(max_iter):
        F = fock(D)
        err = F @ D @ S - S @ D @ F
        errs.append(err.ravel())
        focks.append(F)
        if len(errs) > 8:
            errs.pop(0)
            focks.pop(0)
        if len(errs) > 1:
            m = len(errs)
            B = -np.ones((m + 1, m + 1))
            B[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    B[i, j] = np.dot(errs[i], errs[j])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                w = np.linalg.solve(B, rhs)[:m]
                F = sum(wi * Fi for wi, Fi in zip(w, focks))
            except np.linalg.LinAlgError:
                pass
        D, C, eps = density(F)
        e_elec = np.einsum("pq,pq->", D, Hcore + fock(D))
        if abs(e_elec - e_old) < tol and np.max(np.abs(errs[-1])) < 1e-9:
            return e_elec, C, eps
        e_old = e_elec
    raise RuntimeError("SCF failed to converge")


# ---------------------------------------------------------------------------
# MO integrals, active space reduction, FCIDUMP output
# ---------------------------------------------------------------------------

def mo_integrals(Hcore, eri, C):
    h_mo = C.T @ Hcore @ C
    eri_mo = np.einsum("pqrs,pi,qj,rk,sl->ijkl", eri, C, C, C, C, optimize=True)
    return h_mo, eri_mo


def freeze_core(h_mo, eri_mo, e_core, n_freeze, n_active):
    act = list(range(n_freeze, n_freeze + n_active))
    e_fc = e_core
    for i in range(n_freeze):
        e_fc += 2.0 * h_mo[i, i]
        for j in range(n_freeze):
            e_fc += 2.0 * eri_mo[i, i, j, j] - eri_mo[i, j, j, i]
    h_act = np.zeros((n_active, n_active))
    for a, p in enumerate(act):
        for b, q in enumerate(act):
            v = h_mo[p, q]
            for i in range(n_freeze):
                v += 2.0 * eri_mo[p, q, i, i] - eri_mo[p, i, i, q]
            h_act[a, b] = v
    v_act = eri_mo[np.ix_(act, act, act, act)]
    return h_act, v_act, e_fc


def write_fcidump(path, h, v, e_core, n_electrons, tol=1e-12):
    n = h.shape[0]
    with open(path, "w") as f:
        f.write(f"&FCI NORB={n:3d},NELEC={n_electrons:3d},MS2=0,\n")
        f.write("  ORBSYM=" + "1," * n + "\n")
        f.write("  ISYM=1,\n")
        f.write("&END\n")

        def line(val, i, j, k, l):
            f.write(f" {val: .16E} {i:3d} {j:3d} {k:3d} {l:3d}\n")

        pairs = [(p, q) for p in range(n) for q in range(p + 1)]
        for ij, (p, q) in enumerate(pairs):
            for kl in range(ij + 1):
                r, s = pairs[kl]
                val = v[p, q, r, s]
                if abs(val) > tol:
                    line(val, p + 1, q + 1, r + 1, s + 1)
        for p in range(n):
            for q in range(p + 1):
                if abs(h[p, q]) > tol:
                    line(h[p, q], p + 1, q + 1, 0, 0)
        line(e_core, 0, 0, 0, 0)


def read_fcidump(path):
    with open(path) as f:
        text = f.read()
    head, _, body = text.partition("&END")
    fields = dict()
    for token in head.replace("&FCI", " ").replace("\n", " ").split(","):
        if "=" in token:
            k, _, v = token.partition("=")
            fields[k.strip()] = v.strip()
    n = int(fields["NORB"])
    nelec = int(fields["NELEC"])
    h = np.zeros((n, n))
    v = np.zeros((n, n, n, n))
    e_core = 0.0
    for row in body.strip().splitlines():
        parts = row.split()
        if len(parts) != 5:
            continue
        val = float(parts[0].replace("D", "E"))
        i, j, k, l = (int(x) for x in parts[1:])
        if i == j == k == l == 0:
            e_core = val
        elif k == 0 and l == 0:
            h[i - 1, j - 1] = h[j - 1, i - 1] = val
        else:
            p, q, r, s = i - 1, j - 1, k - 1, l - 1
            for (a, b) in [(p, q), (q, p)]:
                for (c, d) in [(r, s), (s, r)]:
                    v[a, b, c, d] = val
                    v[c, d, a, b] = val
    return h, v, e_core, n, nelec


# ---------------------------------------------------------------------------
# Determinant-basis FCI (Slater-Condon rules), Sz = 0 block
# ---------------------------------------------------------------------------

def spin_orbital_tensors(h, v):
    """Expand spatial integrals to spin orbitals (alpha=2p, beta=2p+1).

    Returns h_so and antisymmetrized <ij||kl> in physicists' notation.
    """
    n = h.shape[0]
    ns = 2 * n
    h_so = np.zeros((ns, ns))
    for p in range(n):
        for q in range(n):
            h_so[2 * p, 2 * q] = h[p, q]
            h_so[2 * p + 1, 2 * q + 1] = h[p, q]
    # <ij|kl> = (ik|jl) delta(si,sk) delta(sj,sl)
    g = np.zeros((ns, ns, ns, ns))
    for i in range(ns):
        for j in range(ns):
            for k in range(ns):
                if (i % 2) != (k % 2):
                    continue
                for l in range(ns):
                    if (j % 2) != (l % 2):
                        continue
                    g[i, j, k, l] = v[i // 2, k // 2, j // 2, l // 2]
    return h_so, g - g.transpose(0, 1, 3, 2)


def fci_ground_energy(h, v, n_electrons):
    n = h.shape[0]
    ns = 2 * n
    h_so, g = spin_orbital_tensors(h, v)
    na = n_electrons // 2
    alpha_sets = list(combinations(range(n), na))
    dets = []
    for occ_a in alpha_sets:
        for occ_b in alpha_sets:
            occ = sorted([2 * p for p in occ_a] + [2 * p + 1 for p in occ_b])
            dets.append(tuple(occ))
    index = {d: i for i, d in enumerate(dets)}
    ndet = len(dets)

    def phase(det, removed, added):
        mask = 0
        for o in det:
            mask |= 1 << o
        sign = 1
        for o in removed:
            below = bin(mask & ((1 << o) - 1)).count("1")
            sign *= (-1) ** below
            mask &= ~(1 << o)
        for o in added:
            below = bin(mask & ((1 << o) - 1)).count("1")
            sign *= (-1) ** below
            mask |= 1 << o
        return sign

    H = np.zeros((ndet, ndet))
    for I, det in enumerate(dets):
        occ = det
        e = sum(h_so[i, i] for i in occ)
        e += 0.5 * sum(g[i, j, i, j] for i in occ for j in occ)
        H[I, I] = e
        occset = set(occ)
        virt = [a for a in range(ns) if a not in occset]
        for i in occ:
            for a in virt:
                if (i % 2) != (a % 2):
                    continue
                new = tuple(sorted(occset - {i} | {a}))
                J = index.get(new)
                if J is None or J < I:
                    continue
                val = h_so[i, a] + sum(g[i, j, a, j] for j in occ if j != i)
                val *= phase(det, [i], [a])
                H[I, J] = H[J, I] = val
        for (i, j) in combinations(occ, 2):
            for (a, b) in combinations(virt, 2):
                if (i % 2 + j % 2) != (a % 2 + b % 2):
                    continue
                if (i % 2) + (j % 2) == 1 and (i % 2) != (a % 2):
                    a, b = b, a
                if (i % 2) != (a % 2):
                    continue
                new = tuple(sorted(occset - {i, j} | {a, b}))
                J = index.get(new)
                if J is None or J < I:
                    continue
                val = g[i, j, a, b] * phase(det, [j, i], [a, b])
                H[I, J] = H[J, I] = val

    evals = np.linalg.eigvalsh(H)
    return float(evals[0])


def hf_det_energy(h, v, n_electrons):
    n = h.shape[0]
    h_so, g = spin_orbital_tensors(h, v)
    occ = list(range(n_electrons))
    e = sum(h_so[i, i] for i in occ)
    e += 0.5 * sum(g[i, j, i, j] for i in occ for j in occ)
    return e


# ---------------------------------------------------------------------------
# Molecules
# ---------------------------------------------------------------------------

def h_chain(k, d):
    return [("H", (0.0, 0.0, i * d * ANGSTROM_TO_BOHR)) for i in range(k)]


def beh2(d):
    z = d * ANGSTROM_TO_BOHR
    return [("H", (0.0, 0.0, -z)), ("Be", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, z))]


def n2(d):
    return [("N", (0.0, 0.0, 0.0)), ("N", (0.0, 0.0, d * ANGSTROM_TO_BOHR))]


JOBS = [
    ("h2_d0.735", h_chain(2, 0.735), 2, 0, "H2 chain, d=0.735 A"),
    ("h4_d1.000", h_chain(4, 1.0), 4, 0, "H4 chain, d=1.000 A"),
    ("h6_d1.000", h_chain(6, 1.0), 6, 0, "H6 chain, d=1.000 A"),
    ("h6_d2.000", h_chain(6, 2.0), 6, 0, "H6 chain, d=2.000 A"),
    ("h6_d2.500", h_chain(6, 2.5), 6, 0, "H6 chain, d=2.500 A"),
    ("beh2_d1.300", beh2(1.3), 6, 0, "BeH2 linear, d(Be-H)=1.300 A"),
    ("beh2_d2.000", beh2(2.0), 6, 0, "BeH2 linear, d(Be-H)=2.000 A"),
    ("beh2_d2.500", beh2(2.5), 6, 0, "BeH2 linear, d(Be-H)=2.500 A"),
    ("n2_d1.100", n2(1.1), 6, 4, "N2, d=1.100 A, CAS(6e,6o)"),
    ("n2_d1.500", n2(1.5), 6, 4, "N2, d=1.500 A, CAS(6e,6o)"),
    ("n2_d2.000", n2(2.0), 6, 4, "N2, d=2.000 A, CAS(6e,6o)"),
]


def main():
    out_dir = os.path.dirname(os.path.abspath(__file__))
    manifest = []
    for name, atoms, n_active_elec, n_freeze, label in JOBS:
        print(f"=== {name}: {label}")
        basis = build_basis(atoms)
        S, T, V, eri = ao_integrals(atoms, basis)
        e_nuc = nuclear_repulsion(atoms)
        n_elec_total = sum(CHARGE[a[0]] for a in atoms)
        e_elec, C, eps = rhf(S, T + V, eri, n_elec_total)
        e_scf = e_elec + e_nuc
        print(f"    E_RHF  = {e_scf:.10f} Ha  (orbital energies {np.round(eps, 4)})")

        h_mo, eri_mo = mo_integrals(T + V, eri, C)
        if n_freeze:
            n_active = h_mo.shape[0] - n_freeze
            h_act, v_act, e_core = freeze_core(h_mo, eri_mo, e_nuc, n_freeze,
                                               n_active)
        else:
            h_act, v_act, e_core = h_mo, eri_mo, e_nuc

        path = os.path.join(out_dir, name + ".fcidump")
        write_fcidump(path, h_act, v_act, e_core, n_active_elec)

        # re-read and cross-check against the file actually written
        h_r, v_r, e_core_r, norb_r, nelec_r = read_fcidump(path)
        e_hf = hf_det_energy(h_r, v_r, nelec_r) + e_core_r
        assert abs(e_hf - e_scf) < 1e-8, (e_hf, e_scf)
        e_fci = fci_ground_energy(h_r, v_r, nelec_r) + e_core_r
        print(f"    E_HF(det) = {e_hf:.10f}  E_FCI = {e_fci:.10f}  "
              f"corr = {e_fci - e_hf:.6f}")
        assert e_fci <= e_hf + 1e-12
        manifest.append({
            "file": name + ".fcidump",
            "label": label,
            "n_spatial": norb_r,
            "n_electrons": nelec_r,
            "e_hf": e_hf,
            "e_fci": e_fci,
        })

    with open(os.path.join(out_dir, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2)
    print("wrote manifest.json")


if __name__ == "__main__":
    main()
