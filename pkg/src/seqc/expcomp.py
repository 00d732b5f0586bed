"""Nth expansion complexity by exact linear algebra over F_p.

E_N is the least total degree D of a nonzero h(s,t) with
h(G(t), t) = 0 mod t^N.  For each candidate D we assemble the N x m
matrix whose columns are the coefficient vectors of t^j G(t)^i mod t^N
over all monomials with i + j <= D and look for a nontrivial kernel.
Column order is (i, j) lexicographic and the returned witness is the
first reduced-echelon kernel vector, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Poly, PrimeField


@dataclass(frozen=True)
class ExpansionResult:
    """E_N with an optional witness as ((i, j, coeff), ...) monomials."""

    n: int
    value: int
    witness: tuple = None
    capped: bool = False


def monomials(d: int):
    """All (i, j) with i + j <= d, lexicographic."""
    return [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]


def _kernel_vector(a, p):
    """First canonical kernel vector of the matrix mod p, or None."""
    a = a.copy() % p
    n, m = a.shape
    pivots = []  # column of the pivot in row len(pivots)
    row = 0
    for col in range(m):
        if row == n:
            break
        nz = np.nonzero(a[row:, col])[0]
        if len(nz) == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            a[[row, pr]] = a[[pr, row]]
        inv = pow(int(a[row, col]), -1, p)
        a[row] = a[row] * inv % p
        mask = np.nonzero(a[:, col])[0]
        for r in mask:
            if r != row:
                a[r] = (a[r] - a[r, col] * a[row]) % p
        pivots.append(col)
        row += 1
    pivot_set = set(pivots)
    free = [c for c in range(m) if c not in pivot_set]
    if not free:
        return None
    f = free[0]
    v = np.zeros(m, dtype=np.int64)
    v[f] = 1
    for r, c in enumerate(pivots):
        v[c] = (-a[r, f]) % p
    return v


def _g_powers(pref, p, n, d_max):
    g = np.zeros(n, dtype=np.int64)
    g[:len(pref)] = np.array(pref[:n], dtype=np.int64)
    pows = [np.zeros(n, dtype=np.int64)]
    pows[0][0] = 1
    for _ in range(d_max):
        nxt = np.convolve(pows[-1], g)[:n] % p
        pows.append(nxt)
    return pows


def _matrix_for(pows, n, d, p):
    mons = monomials(d)
    a = np.zeros((n, len(mons)), dtype=np.int64)
    for col, (i, j) in enumerate(mons):
        a[j:, col] = pows[i][:n - j]
    return a, mons


def expansion_complexity(prefix, field: PrimeField, d_max: int = 8) -> ExpansionResult:
    """E_N for N = len(prefix); search capped at total degree d_max."""
    n = len(prefix)
    if n < 1:
        raise ValueError("prefix must contain at least one symbol")
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    for u in prefix:
        field.validate_symbol(u)
    if not any(prefix):
        return ExpansionResult(n, 0)
    p = field.p
    pows = _g_powers(prefix, p, n, d_max)
    return _search(pows, n, p, 1, d_max)


def _search(pows, n, p, d_start, d_max):
    for d in range(d_start, d_max + 1):
        a, mons = _matrix_for(pows, n, d, p)
        v = _kernel_vector(a, p)
        if v is not None:
            wit = tuple((i, j, int(c)) for (i, j), c in zip(mons, v) if c)
            return ExpansionResult(n, d, wit)
    return ExpansionResult(n, d_max, capped=True)


def expansion_profile(prefix, field: PrimeField, d_max: int = 8):
    """[E_1, ..., E_len] as ExpansionResults; monotone search start per N."""
    n_total = len(prefix)
    if n_total < 1:
        raise ValueError("prefix must contain at least one symbol")
    for u in prefix:
        field.validate_symbol(u)
    p = field.p
    pows = _g_powers(prefix, p, n_total, d_max)
    out = []
    d_floor = 1
    for n in range(1, n_total + 1):
        if not any(prefix[:n]):
            out.append(ExpansionResult(n, 0))
            continue
        res = _search(pows, n, p, d_floor, d_max)
        if not res.capped:
            d_floor = res.value  # E_N is nondecreasing in N
        out.append(res)
    return out


def evaluate_witness(witness, prefix, field: PrimeField) -> Poly:
    """Re-evaluate sum coeff * G^i * t^j mod t^N, independent of the solver."""
    n = len(prefix)
    g = Poly(field, tuple(prefix))
    acc = Poly.zero(field)
    for i, j, c in witness:
        term = Poly(field, (c,)).shift(j)
        gp = Poly.one(field)
        for _ in range(i):
            gp = (gp * g).truncate(n)
        acc = acc + (term * gp).truncate(n)
    return acc.truncate(n)
