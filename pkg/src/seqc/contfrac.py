"""Continued fractions of truncated Laurent series over F_p.

The primary engine runs the extended Euclidean algorithm on (x^N, g(x)),
where g packs the N known coefficients; it is integer-exact and needs no
precision bookkeeping inside the loop.  The polynomial-part/inverse
recursion on truncated series is kept as a secondary path for
differential testing.

Reliability is two-tiered.  Convergent degrees are determined by the
first N coefficients whenever deg Q_{j-1} + deg Q_j <= N (the profile
bracketing), so deg Q_j is recorded up to that point.  The quotient
polynomial itself is only determined when Q_j is the unique minimal
recurrence for the prefix, which needs 2 deg Q_j <= N; quotient values
past that index can pick up truncation noise in their low-order
coefficients and are not emitted.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import gf2
from .algebra import LaurentSeries, Poly, PrecisionError, PrimeField
from .autoseq import Profile


@dataclass
class CFExpansion:
    """Partial quotients A_0..A_J with convergents and reliability count.

    ``quotients`` holds only value-certified quotients (2 deg Q_j <= N);
    ``q_degrees`` and the convergent pairs extend to every degree-certified
    index (deg Q_{j-1} + deg Q_j <= N), which the profile walk needs.
    Convergent pairs are stored in a backend-native form and converted to
    Poly lazily; at bench scale the full Poly conversion would dominate.
    """

    field: PrimeField
    quotients: tuple  # Poly: A_0, A_1, ..., A_{reliable_count}
    q_degrees: tuple  # deg Q_0, ..., deg Q_J
    _raw_pairs: tuple  # ((P_j, Q_j) in backend form, j = 0..J)
    _pairs_cache: tuple = dc_field(default=None, repr=False)

    @property
    def reliable_count(self) -> int:
        """Largest j such that A_1..A_j are certified for the input precision."""
        return len(self.quotients) - 1

    @property
    def degree_count(self) -> int:
        """Largest j for which deg Q_j is certified (may exceed reliable_count)."""
        return len(self.q_degrees) - 1

    def _pair_to_polys(self, pair):
        pp, qq = pair
        if self.field.p == 2:
            return gf2.to_poly(pp, self.field), gf2.to_poly(qq, self.field)
        return Poly(self.field, tuple(pp)), Poly(self.field, tuple(qq))

    @property
    def convergents(self) -> tuple:
        """((P_0, Q_0), ..., (P_J, Q_J)) as Poly pairs."""
        if self._pairs_cache is None:
            self._pairs_cache = tuple(self._pair_to_polys(p) for p in self._raw_pairs)
        return self._pairs_cache

    def convergent(self, j: int):
        return self._pair_to_polys(self._raw_pairs[j])

    def raw_q(self, j: int):
        return self._raw_pairs[j][1]


def convergents(expansion: CFExpansion) -> tuple:
    return expansion.convergents


def _cf_euclid_f2(bits, n):
    g = 0
    for i, bit in enumerate(bits):
        if bit:
            g |= 1 << (n - 1 - i)
    quotients = []
    pairs = [(0, 1)]  # (P_0, Q_0) with A_0 = 0
    p_prev, p_cur = 1, 0
    q_prev, q_cur = 0, 1
    r_prev, r_cur = 1 << n, g
    while r_cur:
        a, r_next = gf2.divmod_(r_prev, r_cur)
        q_new = gf2.mul(a, q_cur) ^ q_prev
        if gf2.degree(q_cur) + gf2.degree(q_new) > n:
            break
        p_new = gf2.mul(a, p_cur) ^ p_prev
        quotients.append(a)
        pairs.append((p_new, q_new))
        p_prev, p_cur = p_cur, p_new
        q_prev, q_cur = q_cur, q_new
        r_prev, r_cur = r_cur, r_next
    return quotients, pairs


def _arr_degree(a) -> int:
    return len(a) - 1


def _arr_trim(a):
    nz = np.nonzero(a)[0]
    return a[:nz[-1] + 1] if len(nz) else a[:0]


def _arr_divmod(a, b, p):
    da, db = _arr_degree(a), _arr_degree(b)
    if da < db:
        return np.zeros(0, dtype=np.int64), a.copy()
    inv = pow(int(b[-1]), -1, p)
    r = a.copy()
    q = np.zeros(da - db + 1, dtype=np.int64)
    for i in range(da, db - 1, -1):
        c = int(r[i]) % p
        if c:
            c = c * inv % p
            q[i - db] = c
            r[i - db:i + 1] = (r[i - db:i + 1] - c * b) % p
    return q, _arr_trim(r)


def _arr_mul_add(a, b, c, p):
    """a*b + c over F_p for numpy coefficient arrays."""
    if len(a) == 0 or len(b) == 0:
        conv = np.zeros(1, dtype=np.int64)
    else:
        conv = np.convolve(a, b)
    n = max(len(conv), len(c))
    out = np.zeros(n, dtype=np.int64)
    out[:len(conv)] = conv
    out[:len(c)] += c
    return _arr_trim(out % p)


def _cf_euclid_modp(symbols, n, p):
    g = np.zeros(n, dtype=np.int64)
    for i, u in enumerate(symbols):
        g[n - 1 - i] = u
    g = _arr_trim(g)
    x_n = np.zeros(n + 1, dtype=np.int64)
    x_n[-1] = 1
    one = np.ones(1, dtype=np.int64)
    zero = np.zeros(0, dtype=np.int64)
    quotients = []
    pairs = [(zero, one)]
    p_prev, p_cur = one, zero
    q_prev, q_cur = zero, one
    r_prev, r_cur = x_n, g
    while len(r_cur):
        a, r_next = _arr_divmod(r_prev, r_cur, p)
        q_new = _arr_mul_add(a, q_cur, q_prev, p)
        if _arr_degree(q_cur) + _arr_degree(q_new) > n:
            break
        p_new = _arr_mul_add(a, p_cur, p_prev, p)
        quotients.append(a)
        pairs.append((p_new, q_new))
        p_prev, p_cur = p_cur, p_new
        q_prev, q_cur = q_cur, q_new
        r_prev, r_cur = r_cur, r_next
    return quotients, pairs


def _value_certified_count(degs, n) -> int:
    """Quotients whose value 2 deg Q_j <= n pins down (minimal recurrence unique)."""
    rc = 0
    while rc + 1 < len(degs) and 2 * degs[rc + 1] <= n:
        rc += 1
    return rc


def _series_symbols(r: LaurentSeries):
    """Coefficients of x^-1..x^-N of a series with valuation < 0."""
    n = -r.low
    return [r.coeff(-i) for i in range(1, n + 1)], n


def cf_expand(r: LaurentSeries) -> CFExpansion:
    """Certified continued-fraction expansion of a truncated series."""
    if r.is_zero:
        raise ZeroDivisionError("cannot expand the zero series")
    field = r.field
    a0 = r.polynomial_part()
    if not a0.is_zero:
        b = r - LaurentSeries.from_poly(a0, r.low)
    else:
        b = r
    if b.is_zero:
        # purely polynomial input: the expansion is the single quotient A_0
        if field.p == 2:
            raw = ((gf2.from_poly(a0), 1),)
        else:
            raw = ((np.array(a0.coeffs, dtype=np.int64), np.ones(1, dtype=np.int64)),)
        return CFExpansion(field, (a0,), (0,), raw)
    symbols, n = _series_symbols(b)
    if field.p == 2:
        bits_q, pairs = _cf_euclid_f2(symbols, n)
        if not a0.is_zero:
            a0_bits = gf2.from_poly(a0)
            pairs = [(pp ^ gf2.mul(a0_bits, qq), qq) for pp, qq in pairs]
        degs = tuple(gf2.degree(qq) for _, qq in pairs)
        rc = _value_certified_count(degs, n)
        quots = tuple(gf2.to_poly(q, field) for q in bits_q[:rc])
    else:
        arr_q, pairs = _cf_euclid_modp(symbols, n, field.p)
        if not a0.is_zero:
            a0_arr = np.array(a0.coeffs, dtype=np.int64)
            pairs = [(_arr_mul_add(a0_arr, qq, pp, field.p), qq) for pp, qq in pairs]
        degs = tuple(_arr_degree(qq) for _, qq in pairs)
        rc = _value_certified_count(degs, n)
        quots = tuple(Poly(field, tuple(int(v) for v in q)) for q in arr_q[:rc])
    return CFExpansion(field, (a0,) + quots, degs, tuple(pairs))


def cf_expand_series(r: LaurentSeries, max_quotients: int = None):
    """Partial quotients via the Pol/inverse recursion on truncated series.

    Secondary differential-testing path: stops when the remaining precision
    can no longer support another polynomial part.  Returns the quotient
    list (A_0 first).
    """
    if r.is_zero:
        raise ZeroDivisionError("cannot expand the zero series")
    quots = [r.polynomial_part()]
    b = r - LaurentSeries.from_poly(quots[0], r.low)
    while not b.is_zero:
        if max_quotients is not None and len(quots) > max_quotients:
            break
        inv = b.inverse()
        try:
            a = inv.polynomial_part()
        except PrecisionError:
            break
        if a.degree < 1:
            break  # truncation noise: a true partial quotient has degree >= 1
        quots.append(a)
        b = inv - LaurentSeries.from_poly(a, inv.low)
    return quots


def profile_from_cf(r: LaurentSeries, n_max: int) -> Profile:
    """Linear complexity profile from the convergent denominators.

    L(N) = deg Q_j for the unique j with
    deg Q_{j-1} + deg Q_j <= N < deg Q_j + deg Q_{j+1}.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if r.is_zero:
        if -r.low < n_max:
            raise PrecisionError(f"series precision {-r.low} < n_max {n_max}")
        return Profile((0,) * n_max)
    if r.valuation >= 0:
        raise ValueError("expected a sequence series with valuation < 0")
    if -r.low < n_max:
        raise PrecisionError(f"series precision {-r.low} < n_max {n_max}")
    exp = cf_expand(r)
    degs = exp.q_degrees
    vals = []
    j = 0
    for n in range(1, n_max + 1):
        while j + 1 < len(degs) and degs[j] + degs[j + 1] <= n:
            j += 1
        vals.append(degs[j])
    return Profile(tuple(vals))


def check_convergent_identities(expansion: CFExpansion, coprimality: str = "full"):
    """Verify deg Q_j = sum deg A_h and the convergent coprimality identity.

    Over F_2 the identity is P_{j-1} Q_j + P_j Q_{j-1} = 1; for odd p it
    holds up to the unit (-1)^j.  ``coprimality`` may be "full", "sampled"
    (every 16th convergent; the degree identity is still checked for all),
    or "skip".  Returns the index of the first failing convergent or None.
    """
    degs = expansion.q_degrees
    total = 0
    for j in range(1, expansion.degree_count + 1):
        if j <= expansion.reliable_count:
            total += int(expansion.quotients[j].degree)
            if degs[j] != total:
                return j
        elif degs[j] <= degs[j - 1]:  # deg A_j >= 1 even past the value-certified range
            return j
    if coprimality == "skip":
        return None
    p = expansion.field.p
    last = expansion.degree_count
    for j in range(1, last + 1):
        if coprimality == "sampled" and j % 16 and j != last:
            continue
        pj_prev, qj_prev = expansion._raw_pairs[j - 1]
        pj, qj = expansion._raw_pairs[j]
        if p == 2:
            ok = gf2.mul_add_is_one(pj_prev, qj, pj, qj_prev)
        else:
            if len(pj) and len(qj_prev):
                neg = (-np.convolve(pj, qj_prev)) % p
            else:
                neg = np.zeros(0, dtype=np.int64)
            lhs = _arr_mul_add(pj_prev, qj, neg, p)
            ok = len(lhs) == 1 and int(lhs[0]) in (1, p - 1)
        if not ok:
            return j
    return None


@dataclass(frozen=True)
class QCongruenceReport:
    """Outcome of the Q_j congruence and coefficient-periodicity checks."""

    k: int
    checked: int
    congruence_failures: tuple  # (j, expected bits, actual bits)
    lemma_failures: tuple  # (j, expected bits, actual bits)

    @property
    def ok(self) -> bool:
        return not self.congruence_failures and not self.lemma_failures


def q_congruences(expansion: CFExpansion, k: int) -> QCongruenceReport:
    """Check the Q_j congruences of the all-one-pattern analysis.

    For k = 1 every Q_j must satisfy Q_j = 1 mod (x+1); for k >= 2 even
    indices give 1 and odd indices x+1 modulo x^{2^{k-1}} + 1.  Also checks
    that the coefficients of Q_j * U^{2^k} (U the all-one series) are
    2^k-periodic and reconstruct Q_j modulo x^{2^k} + 1.
    """
    if expansion.field.p != 2:
        raise ValueError("congruence report is defined over F_2 only")
    if k < 1:
        raise ValueError("k must be >= 1")
    half = 1 << (k - 1)
    modulus = (1 << half) | 1  # x^{2^{k-1}} + 1 (x + 1 when k = 1)
    full_mod = (1 << (1 << k)) | 1  # x^{2^k} + 1
    cong_fail = []
    lemma_fail = []
    for j in range(expansion.reliable_count + 1):
        q = expansion.raw_q(j)
        expected = 1 if (k == 1 or j % 2 == 0) else 0b11
        actual = gf2.mod_(q, modulus)
        if actual != expected:
            cong_fail.append((j, expected, actual))
        # b_i of Q*U^{2^k} depends only on i mod 2^k; rebuild Q from b_1..b_{2^k}
        period = 1 << k
        buckets = [0] * period
        qq = q
        while qq:
            low = qq & -qq
            buckets[(low.bit_length() - 1) % period] ^= 1
            qq ^= low
        recon = 0
        for i in range(1, period + 1):
            if buckets[(-i) % period]:
                recon |= 1 << (period - i)
        q_mod = gf2.mod_(q, full_mod)
        if recon != q_mod:
            lemma_fail.append((j, q_mod, recon))
    return QCongruenceReport(k, expansion.reliable_count + 1,
                             tuple(cong_fail), tuple(lemma_fail))
