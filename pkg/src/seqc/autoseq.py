"""Automatic sequence generators and their algebraic witnesses.

Each built-in sequence comes with the bivariate polynomial h(s,t) whose
root is the sequence's generating function, plus the derived parameters
(d, M) that feed the general complexity bounds.  An independent
digit-counting oracle is provided for pattern sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import NEG_INF, Poly, PrimeField, poly_pow_mod_tN

PATTERN = "pattern"
SUM_OF_DIGITS = "sum-of-digits"
BAUM_SWEET = "baum-sweet"
PAPER_FOLDING = "paper-folding"
PERFECT_PROFILE = "perfect-profile"


@dataclass(frozen=True)
class SequenceSpec:
    """A named automatic sequence with its defining parameters."""

    kind: str
    p: int = 2
    k: int = 1
    a: int = 1
    v0: int = 1

    def __post_init__(self):
        if self.kind == PATTERN:
            PrimeField(self.p)
            if self.k < 1:
                raise ValueError("pattern length k must be >= 1")
            if not (0 < self.a < self.p ** self.k):
                raise ValueError("pattern value a must satisfy 0 < a < p**k")
        elif self.kind == SUM_OF_DIGITS:
            if self.p < 2:
                raise ValueError("digit base must be >= 2")
        elif self.kind == PAPER_FOLDING:
            if self.v0 not in (0, 1):
                raise ValueError("v0 must be an F_2 element")
        elif self.kind not in (BAUM_SWEET, PERFECT_PROFILE):
            raise ValueError(f"unknown sequence kind: {self.kind}")

    @property
    def field(self) -> PrimeField:
        if self.kind == PATTERN:
            return PrimeField(self.p)
        if self.kind == SUM_OF_DIGITS:
            return PrimeField(self.p)  # raises for composite bases
        return PrimeField(2)

    @property
    def canonical_name(self) -> str:
        if self.kind == PATTERN:
            if (self.p, self.k, self.a) == (2, 1, 1):
                return "thue-morse"
            if (self.p, self.k, self.a) == (2, 2, 3):
                return "rudin-shapiro"
            return f"pattern(p={self.p},k={self.k},a={self.a})"
        if self.kind == SUM_OF_DIGITS:
            return f"sum-of-digits(p={self.p})"
        if self.kind == PAPER_FOLDING:
            return f"paper-folding(v0={self.v0})"
        return self.kind

    @property
    def is_all_one_pattern(self) -> bool:
        return self.kind == PATTERN and self.p == 2 and self.a == 2 ** self.k - 1


def pattern(p: int, k: int, a: int) -> SequenceSpec:
    return SequenceSpec(PATTERN, p=p, k=k, a=a)


def thue_morse() -> SequenceSpec:
    return pattern(2, 1, 1)


def rudin_shapiro() -> SequenceSpec:
    return pattern(2, 2, 3)


def sum_of_digits(p: int) -> SequenceSpec:
    return SequenceSpec(SUM_OF_DIGITS, p=p)


def baum_sweet() -> SequenceSpec:
    return SequenceSpec(BAUM_SWEET)


def paper_folding(v0: int = 1) -> SequenceSpec:
    return SequenceSpec(PAPER_FOLDING, v0=v0)


def perfect_profile() -> SequenceSpec:
    return SequenceSpec(PERFECT_PROFILE)


def builtin_specs():
    """The seven built-in sequences exercised by the verification suite."""
    return (
        thue_morse(),
        rudin_shapiro(),
        pattern(2, 3, 7),
        sum_of_digits(3),
        baum_sweet(),
        paper_folding(1),
        perfect_profile(),
    )


# -- term generation (iterative digit peeling, no recursion) ------------

def term(spec: SequenceSpec, n: int) -> int:
    if n < 0:
        raise ValueError("index must be >= 0")
    kind = spec.kind
    if kind == PATTERN:
        p, pk, a = spec.p, spec.p ** spec.k, spec.a
        count = 0
        while n:
            if n % pk == a:
                count += 1
            n //= p
        return count % p
    if kind == SUM_OF_DIGITS:
        k = spec.p
        s = 0
        while n:
            s += n % k
            n //= k
        return s % k
    if kind == BAUM_SWEET:
        if n == 0:
            return 1
        while True:
            while n % 4 == 0:
                n //= 4
            if n % 2 == 0:
                return 0
            n = (n - 1) // 2
            if n == 0:
                return 1
    if kind == PAPER_FOLDING:
        if n == 0:
            return spec.v0
        while n % 2 == 0:
            n //= 2
        return 1 if n % 4 == 1 else 0
    # perfect-profile: w_{2n} = 1, w_{2n+1} = w_n + 1
    flips = 0
    while n % 2 == 1:
        flips += 1
        n = (n - 1) // 2
    return (1 + flips) % 2


def prefix(spec: SequenceSpec, n: int):
    """[term(0), ..., term(n-1)], filled breadth-first where a recurrence helps."""
    if n < 1:
        raise ValueError("prefix length must be >= 1")
    kind = spec.kind
    if kind == PATTERN:
        p, pk, a = spec.p, spec.p ** spec.k, spec.a
        out = [0] * n
        for i in range(1, n):
            out[i] = (out[i // p] + (1 if i % pk == a else 0)) % p
        return out
    if kind == SUM_OF_DIGITS:
        k = spec.p
        out = [0] * n
        for i in range(1, n):
            out[i] = (out[i // k] + i) % k
        return out
    if kind == PERFECT_PROFILE:
        out = [0] * n
        out[0] = 1
        for i in range(1, n):
            out[i] = 1 if i % 2 == 0 else (out[(i - 1) // 2] + 1) % 2
        return out
    return [term(spec, i) for i in range(n)]


def pattern_count_oracle(p: int, digits, n: int) -> int:
    """Occurrences of the digit block ``digits`` in the base-p expansion of n.

    ``digits`` may be a string of digit characters or a sequence of ints.
    Patterns with a leading zero digit are rejected: the count at the
    most-significant end is ambiguous there and the recurrence is the
    normative definition.
    """
    if isinstance(digits, str):
        digits = tuple(int(ch) for ch in digits)
    else:
        digits = tuple(digits)
    if not digits:
        raise ValueError("empty pattern")
    if any(not (0 <= d < p) for d in digits):
        raise ValueError("pattern digit outside base")
    if digits[0] == 0:
        raise ValueError("pattern with leading zero digit is not supported")
    if n < 0:
        raise ValueError("index must be >= 0")
    rep = []
    while n:
        rep.append(n % p)
        n //= p
    rep.reverse()
    k = len(digits)
    return sum(1 for i in range(len(rep) - k + 1) if tuple(rep[i:i + k]) == digits)


def pattern_digits(spec: SequenceSpec):
    """Base-p digits (MSB first, length k, leading zeros kept) of a pattern spec."""
    if spec.kind != PATTERN:
        raise ValueError("not a pattern spec")
    a, p = spec.a, spec.p
    out = []
    for _ in range(spec.k):
        out.append(a % p)
        a //= p
    out.reverse()
    return tuple(out)


# -- algebraic witnesses -------------------------------------------------

@dataclass(frozen=True)
class AlgebraicWitness:
    """h(s,t) = sum_i h_i(t) s^i with the derived parameters d and M."""

    field: PrimeField
    h_coeffs: tuple  # Poly, index i = h_i(t)
    m: int
    no_rational_zero: bool = True

    def __post_init__(self):
        if not self.h_coeffs or self.h_coeffs[-1].is_zero:
            raise ValueError("leading coefficient h_d must be nonzero")
        if self.m != self._recompute_m():
            raise ValueError("stored M disagrees with the coefficients")

    def _recompute_m(self) -> int:
        return max(int(h.degree) - i for i, h in enumerate(self.h_coeffs) if not h.is_zero)

    @property
    def d(self) -> int:
        return len(self.h_coeffs) - 1

    @property
    def total_degree(self) -> int:
        return max(int(h.degree) + i for i, h in enumerate(self.h_coeffs) if not h.is_zero)


def witness(spec: SequenceSpec) -> AlgebraicWitness:
    field = spec.field
    t = Poly.x(field)
    one = Poly.one(field)
    zero = Poly.zero(field)
    if spec.kind == PATTERN:
        # (t-1)^{p^k + p - 1} s^p - (t-1)^{p^k} s - t^a
        p, pk = spec.p, spec.p ** spec.k
        tm1 = t - one
        h = [zero] * (p + 1)
        h[0] = -Poly.monomial(field, spec.a)
        h[1] = -(tm1 ** pk)
        h[p] = tm1 ** (pk + p - 1)
        return AlgebraicWitness(field, tuple(h), m=pk - 1)
    if spec.kind == SUM_OF_DIGITS:
        # (1-t)^{p+1} s^p - (1-t)^2 s + t
        p = spec.p
        omt = one - t
        h = [zero] * (p + 1)
        h[0] = t
        h[1] = -(omt * omt)
        h[p] = omt ** (p + 1)
        return AlgebraicWitness(field, tuple(h), m=1)
    if spec.kind == BAUM_SWEET:
        # s^3 + t s + 1
        return AlgebraicWitness(field, (one, t, zero, one), m=0)
    if spec.kind == PAPER_FOLDING:
        # (t^4 + 1) s^2 + (t^4 + 1) s + t
        t4p1 = Poly(field, (1, 0, 0, 0, 1))
        return AlgebraicWitness(field, (t, t4p1, t4p1), m=3)
    # perfect-profile: t(t+1) s^2 + (t+1) s + 1
    tp1 = t + one
    return AlgebraicWitness(field, (one, tp1, t * tp1), m=0)


def residual(spec: SequenceSpec, n: int) -> Poly:
    """sum_i h_i(t) G(t)^i mod t^n, with G built from the sequence prefix.

    The contract is that this is the zero polynomial; anything else
    signals a generator/witness mismatch.
    """
    w = witness(spec)
    return witness_residual(w, prefix(spec, n), n)


def witness_residual(w: AlgebraicWitness, pref, n: int) -> Poly:
    g = Poly(w.field, tuple(pref[:n]))
    acc = Poly.zero(w.field)
    gpow = Poly.one(w.field)
    for i, h in enumerate(w.h_coeffs):
        if i:
            gpow = (gpow * g).truncate(n)
        if not h.is_zero:
            acc = acc + (h * gpow).truncate(n)
    return acc.truncate(n)


@dataclass(frozen=True)
class Profile:
    """The vector (L(u_n,1), ..., L(u_n,N_max)) of Nth linear complexities."""

    values: tuple

    @property
    def n_max(self) -> int:
        return len(self.values)

    def at(self, n: int) -> int:
        """L(u_n, n) for 1 <= n <= n_max."""
        return self.values[n - 1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def validate(self):
        """Check 0 <= L(N) <= N, monotonicity and the successive-N jump rule."""
        prev = 0
        for n, v in enumerate(self.values, start=1):
            if not (0 <= v <= n):
                raise ValueError(f"L({n})={v} outside [0, {n}]")
            if v < prev:
                raise ValueError(f"profile decreases at N={n}")
            if v > max(prev, n - prev):
                raise ValueError(f"jump rule violated at N={n}")
            prev = v
        return self
