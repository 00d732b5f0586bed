"""Exact arithmetic over prime fields.

Dense polynomials and truncated formal Laurent series in x^-1 over F_p.
All values are immutable and all operations are exact.  A Laurent series
carries an explicit record of how far down its coefficients are actually
known, so consumers (the continued-fraction engine in particular) can
never silently read coefficients past the truncation point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NEG_INF = float("-inf")

# int64 convolutions are safe while length * p**2 stays below 2**63
_SMALL_P = 46337


class FieldMismatchError(ValueError):
    """Operands belong to different prime fields."""


class PrecisionError(ValueError):
    """A coefficient outside the known range of a truncated series was required."""


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, valid far beyond the supported 2**31 range
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime modulus 2 <= p <= 2**31 - 1."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p <= 2**31 - 1):
            raise ValueError(f"modulus out of range: {self.p}")
        if not _is_prime(self.p):
            raise ValueError(f"modulus is not prime: {self.p}")

    def reduce(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        return pow(a % self.p, -1, self.p)

    def validate_symbol(self, a: int) -> int:
        if not (0 <= a < self.p):
            raise ValueError(f"symbol {a} outside F_{self.p}")
        return a


def _check_same_field(a, b):
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over F_p, coefficients low-to-high, no trailing zeros."""

    field: PrimeField
    coeffs: tuple

    def __post_init__(self):
        p = self.field.p
        c = [v % p for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field, deg, coeff=1):
        return cls(field, (0,) * deg + (coeff,))

    # -- basic queries ------------------------------------------------

    @property
    def degree(self):
        """Degree, with the distinguished -inf marker for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if self.is_zero:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def evaluate(self, a: int) -> int:
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        _check_same_field(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        _check_same_field(self, other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        if p <= _SMALL_P and min(len(a), len(b)) > 8:
            conv = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
            return Poly(self.field, tuple(int(v) for v in conv % p))
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(self.field, tuple(out))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        _check_same_field(self, other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.degree < other.degree:
            return Poly.zero(self.field), self
        p = self.field.p
        b = other.coeffs
        db = len(b) - 1
        inv = self.field.inv(b[-1])
        r = list(self.coeffs)
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] % p
            if c:
                c = c * inv % p
                q[i - db] = c
                for j in range(db + 1):
                    r[i - db + j] -= c * b[j]
                r[i] = 0
        return Poly(self.field, tuple(q)), Poly(self.field, tuple(r[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero:
            return self
        inv = self.field.inv(self.leading())
        return Poly(self.field, tuple(c * inv for c in self.coeffs))

    def shift(self, k: int):
        """Multiply by x^k, k >= 0."""
        if self.is_zero:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def truncate(self, n: int):
        """Reduce modulo x^n."""
        return Poly(self.field, self.coeffs[:max(n, 0)])

    def __repr__(self):
        return f"Poly(p={self.field.p}, {list(self.coeffs)})"


# Spec-level operation names; thin wrappers over the Poly methods.

def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly):
    return divmod(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    _check_same_field(a, b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_pow_mod_tN(a: Poly, e: int, n: int) -> Poly:
    """a**e mod x^n by square-and-multiply, truncating at every step."""
    if n < 1:
        raise ValueError("precision must be >= 1")
    if e < 0:
        raise ValueError("negative exponent")
    result = Poly.one(a.field)
    base = a.truncate(n)
    while e:
        if e & 1:
            result = (result * base).truncate(n)
        base = (base * base).truncate(n)
        e >>= 1
    return result


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated formal Laurent series in x^-1 over F_p.

    A nonzero series is sum_{e=low..top} c_e x^e with c_top != 0 (the
    valuation is normalized); coefficients above ``top`` are structurally
    zero, coefficients below ``low`` are unknown.  ``top is None`` encodes a
    series known to vanish at every exponent >= ``low``.
    """

    field: PrimeField
    top: object  # int, or None for a zero-within-precision series
    coeffs: tuple
    low: int

    def __post_init__(self):
        p = self.field.p
        c = [v % p for v in self.coeffs]
        top = self.top
        if top is not None:
            if len(c) != top - self.low + 1:
                raise ValueError("coefficient span does not match top/low")
            while c and c[0] == 0:
                c.pop(0)
                top -= 1
            if not c:
                top = None
        elif c:
            raise ValueError("zero series must carry no coefficients")
        if top is not None and top < self.low:
            raise ValueError("empty known range")
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "top", top)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field, low: int):
        return cls(field, None, (), low)

    @classmethod
    def from_prefix(cls, prefix, field):
        """R = sum_{i=1..N} u_{i-1} x^-i from the first N sequence symbols."""
        if len(prefix) < 1:
            raise ValueError("prefix must contain at least one symbol")
        for u in prefix:
            field.validate_symbol(u)
        return cls(field, -1, tuple(prefix), -len(prefix))

    @classmethod
    def from_poly(cls, poly: Poly, low: int):
        """Exact polynomial viewed as a series, known down to exponent ``low``."""
        if poly.is_zero:
            return cls.zero(poly.field, low)
        top = int(poly.degree)
        if low > top:
            raise ValueError("low must not exceed the polynomial degree")
        coeffs = tuple(poly.coeff(e) for e in range(top, low - 1, -1))
        return cls(poly.field, top, coeffs, low)

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.top is None

    @property
    def valuation(self):
        """nu(R): the top exponent, or the -inf marker for the zero series."""
        return self.top if self.top is not None else NEG_INF

    @property
    def precision(self) -> int:
        """Number of known coefficients counted from the leading term.

        For a zero series built from an N-symbol prefix this equals N.
        """
        if self.top is None:
            return max(0, -self.low)
        return self.top - self.low + 1

    def coeff(self, e: int) -> int:
        """Coefficient of x^e; raises PrecisionError below the known range."""
        if e < self.low:
            raise PrecisionError(f"coefficient of x^{e} unknown (low={self.low})")
        if self.top is None or e > self.top:
            return 0
        return self.coeffs[self.top - e]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        _check_same_field(self, other)
        low = max(self.low, other.low)
        tops = [s.top for s in (self, other) if s.top is not None]
        if not tops:
            return LaurentSeries.zero(self.field, low)
        top = max(tops)
        if top < low:
            return LaurentSeries.zero(self.field, low)
        coeffs = tuple(self.coeff(e) + other.coeff(e) for e in range(top, low - 1, -1))
        return LaurentSeries(self.field, top, coeffs, low)

    def __neg__(self):
        if self.is_zero:
            return self
        return LaurentSeries(self.field, self.top, tuple(-c for c in self.coeffs), self.low)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        _check_same_field(self, other)
        if self.is_zero or other.is_zero:
            # unknown tails start below `low`; products are known zero above
            if self.is_zero and other.is_zero:
                low = self.low + other.low - 1
            elif self.is_zero:
                low = self.low + other.top
            else:
                low = other.low + self.top
            return LaurentSeries.zero(self.field, low)
        p = self.field.p
        known = min(len(self.coeffs), len(other.coeffs))
        if p <= _SMALL_P:
            conv = np.convolve(
                np.array(self.coeffs, dtype=np.int64),
                np.array(other.coeffs, dtype=np.int64),
            ) % p
            out = tuple(int(v) for v in conv[:known])
        else:
            a, b = self.coeffs, other.coeffs
            acc = [0] * known
            for i, ai in enumerate(a):
                if ai:
                    for j in range(min(len(b), known - i)):
                        acc[i + j] += ai * b[j]
            out = tuple(v % p for v in acc)
        top = self.top + other.top
        return LaurentSeries(self.field, top, out, top - known + 1)

    def inverse(self):
        """Multiplicative inverse, correct to the same number of coefficients.

        Generalizes the F_2 convolution recursion to any prime p by dividing
        through by the leading coefficient.
        """
        if self.is_zero:
            raise ZeroDivisionError("cannot invert the zero series")
        p = self.field.p
        c = self.coeffs
        n = len(c)
        lead_inv = self.field.inv(c[0])
        if p <= _SMALL_P:
            ca = np.array(c, dtype=np.int64)
            z = np.zeros(n, dtype=np.int64)
            z[0] = lead_inv
            for i in range(1, n):
                s = int(ca[1:i + 1] @ z[i - 1::-1]) % p
                z[i] = (-lead_inv * s) % p
            out = tuple(int(v) for v in z)
        else:
            z = [0] * n
            z[0] = lead_inv
            for i in range(1, n):
                s = sum(c[j] * z[i - j] for j in range(1, i + 1)) % p
                z[i] = (-lead_inv * s) % p
            out = tuple(z)
        top = -self.top
        return LaurentSeries(self.field, top, out, top - n + 1)

    def shift(self, k: int):
        """Multiply by x^k."""
        if self.is_zero:
            return LaurentSeries.zero(self.field, self.low + k)
        return LaurentSeries(self.field, self.top + k, self.coeffs, self.low + k)

    def polynomial_part(self) -> Poly:
        """Pol(R): the terms with exponent >= 0 as a polynomial in x."""
        if self.is_zero or self.top < 0:
            return Poly.zero(self.field)
        if self.low > 0:
            raise PrecisionError("constant term not covered by known range")
        return Poly(self.field, tuple(self.coeff(e) for e in range(self.top + 1)))

    def __repr__(self):
        if self.is_zero:
            return f"LaurentSeries(p={self.field.p}, 0, low={self.low})"
        return (f"LaurentSeries(p={self.field.p}, top={self.top}, "
                f"{list(self.coeffs)}, low={self.low})")


def series_from_prefix(prefix, field) -> LaurentSeries:
    return LaurentSeries.from_prefix(prefix, field)


def series_inverse(r: LaurentSeries) -> LaurentSeries:
    return r.inverse()


def series_add(r: LaurentSeries, s: LaurentSeries) -> LaurentSeries:
    return r + s


def series_mul(r: LaurentSeries, s: LaurentSeries) -> LaurentSeries:
    return r * s


def polynomial_part(r: LaurentSeries) -> Poly:
    return r.polynomial_part()


def valuation(r: LaurentSeries):
    return r.valuation
