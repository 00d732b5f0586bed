"""Nth linear complexity profiles by Berlekamp-Massey synthesis.

The profile is produced in a single O(N^2) pass, emitting L(N) at every
step.  Over F_2 the synthesis state is bit-packed into ints; the generic
prime-field path keeps the state in numpy vectors.  The zero-prefix and
0...0!=0 boundary conventions fall out of the standard initialization and
are asserted in tests rather than special-cased here.
"""

from __future__ import annotations

import numpy as np

from .algebra import PrimeField
from .autoseq import Profile


def _bm_f2(bits):
    """Bit-packed synthesis; returns (per-step L values, final C bits, final L)."""
    c = 1  # connection polynomial, bit j = c_j, c_0 = 1
    b = 1  # previous connection polynomial
    ell = 0
    m = -1  # index of last length change
    rev = 0  # bit j = u_{n-j}
    prof = []
    for n, u in enumerate(bits):
        rev = (rev << 1) | (u & 1)
        if (c & rev).bit_count() & 1:
            t = c
            c ^= b << (n - m)
            if 2 * ell <= n:
                ell = n + 1 - ell
                b = t
                m = n
        prof.append(ell)
    return prof, c, ell


def _bm_modp(seq, p):
    """Generic prime-field synthesis; returns (L values, final c vector, final L)."""
    n_len = len(seq)
    s = np.array(seq, dtype=np.int64)
    c = np.zeros(n_len + 1, dtype=np.int64)
    b = np.zeros(n_len + 1, dtype=np.int64)
    c[0] = b[0] = 1
    ell = 0
    m = -1
    bd_inv = 1  # inverse of the discrepancy at the last length change
    prof = []
    for n in range(n_len):
        d = int(c[:ell + 1] @ s[n - ell:n + 1][::-1]) % p
        if d:
            t = c.copy()
            coef = d * bd_inv % p
            width = n_len + 1 - (n - m)
            c[n - m:] = (c[n - m:] - coef * b[:width]) % p
            if 2 * ell <= n:
                ell = n + 1 - ell
                b = t
                bd_inv = pow(d, -1, p)
                m = n
        prof.append(ell)
    return prof, c, ell


def _synthesize(prefix, field: PrimeField):
    for u in prefix:
        field.validate_symbol(u)
    if field.p == 2:
        prof, c, ell = _bm_f2(prefix)
        cvec = [(c >> j) & 1 for j in range(ell + 1)]
    else:
        prof, c, ell = _bm_modp(prefix, field.p)
        cvec = [int(v) for v in c[:ell + 1]]
    return prof, cvec, ell


def bm_profile(prefix, field: PrimeField) -> Profile:
    """L(u_n, N) for every N = 1..len(prefix)."""
    if len(prefix) < 1:
        raise ValueError("prefix must contain at least one symbol")
    prof, _, _ = _synthesize(prefix, field)
    return Profile(tuple(prof))


def bm_connection(prefix, field: PrimeField):
    """(L, (c_0, ..., c_{L-1})) with u_{n+L} = c_{L-1} u_{n+L-1} + ... + c_0 u_n.

    Replaying the recurrence from the first L symbols regenerates the
    whole prefix.
    """
    if len(prefix) < 1:
        raise ValueError("prefix must contain at least one symbol")
    _, cvec, ell = _synthesize(prefix, field)
    p = field.p
    coeffs = tuple((-cvec[ell - i]) % p if ell - i < len(cvec) else 0 for i in range(ell))
    return ell, coeffs


def replay_recurrence(coeffs, seed, n: int, field: PrimeField):
    """First n terms of the order-L recurrence started from ``seed``."""
    ell = len(coeffs)
    p = field.p
    out = list(seed[:min(ell, n)])
    while len(out) < n:
        out.append(sum(c * u for c, u in zip(coeffs, out[-ell:])) % p)
    return out
