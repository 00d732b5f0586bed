"""Nth expansion complexity: exact kernel search plus brute-force oracle."""

import itertools

import pytest

from seqc import autoseq, expcomp
from seqc.algebra import Poly, PrimeField

F2 = PrimeField(2)
F3 = PrimeField(3)


def brute_force_expansion(prefix, p, d_max=3):
    """Least D with a nonzero h(s,t), total degree <= D, h(G,t) = 0 mod t^N.

    Enumerates every coefficient assignment over the monomials s^i t^j
    with i + j <= D.  Exponential; keep N and D tiny.
    """
    n = len(prefix)
    if not any(prefix):
        return 0
    for d in range(1, d_max + 1):
        mons = expcomp.monomials(d)
        # columns: coefficient vector of t^j G^i mod t^n
        cols = []
        for i, j in mons:
            g = Poly(PrimeField(p), tuple(prefix))
            gp = Poly.one(g.field)
            for _ in range(i):
                gp = (gp * g).truncate(n)
            col = gp.shift(j).truncate(n)
            cols.append([col.coeff(e) for e in range(n)])
        for assign in itertools.product(range(p), repeat=len(mons)):
            if not any(assign):
                continue
            ok = all(
                sum(c * col[e] for c, col in zip(assign, cols)) % p == 0
                for e in range(n)
            )
            if ok:
                return d
    return None


class TestExpansionComplexity:
    def test_thue_morse_n1_zero_prefix(self):
        assert expcomp.expansion_complexity([0], F2).value == 0

    def test_thue_morse_n2_witness(self):
        res = expcomp.expansion_complexity([0, 1], F2)
        assert res.value == 1
        assert res.witness == ((0, 1, 1), (1, 0, 1))  # h = t + s

    def test_thue_morse_n32_plateau(self):
        pref = autoseq.prefix(autoseq.thue_morse(), 32)
        assert expcomp.expansion_complexity(pref, F2).value == 5

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            expcomp.expansion_complexity([], F2)
        with pytest.raises(ValueError):
            expcomp.expansion_complexity([0, 1], F2, d_max=0)

    def test_capped_flag(self):
        pref = autoseq.prefix(autoseq.thue_morse(), 32)
        res = expcomp.expansion_complexity(pref, F2, d_max=3)
        assert res.capped
        assert res.witness is None


class TestWitnesses:
    def test_witnesses_reevaluate_to_zero(self):
        for spec in autoseq.builtin_specs():
            pref = autoseq.prefix(spec, 48)
            for res in expcomp.expansion_profile(pref, spec.field):
                if res.witness is None:
                    continue
                val = expcomp.evaluate_witness(res.witness, pref[:res.n], spec.field)
                assert val.is_zero, (spec.canonical_name, res.n)

    def test_witness_is_nonzero_polynomial(self):
        pref = autoseq.prefix(autoseq.rudin_shapiro(), 24)
        for res in expcomp.expansion_profile(pref, F2):
            if res.value > 0 and not res.capped:
                assert res.witness
                assert any(c for _, _, c in res.witness)


class TestProfile:
    def test_nondecreasing(self):
        for spec in autoseq.builtin_specs():
            pref = autoseq.prefix(spec, 64)
            vals = [r.value for r in expcomp.expansion_profile(pref, spec.field)]
            assert all(a <= b for a, b in zip(vals, vals[1:]))

    def test_zero_until_first_nonzero_symbol(self):
        pref = [0, 0, 0, 1, 0, 1]
        vals = [r.value for r in expcomp.expansion_profile(pref, F2)]
        assert vals[:3] == [0, 0, 0]
        assert all(v >= 1 for v in vals[3:])

    def test_thue_morse_plateau_by_64(self):
        pref = autoseq.prefix(autoseq.thue_morse(), 64)
        vals = [r.value for r in expcomp.expansion_profile(pref, F2)]
        assert vals[-1] == 5
        assert 5 in vals[:64]

    def test_perfect_profile_plateau_at_most_4(self):
        # the defining witness t(t+1)s^2 + (t+1)s + 1 has total degree 4
        pref = autoseq.prefix(autoseq.perfect_profile(), 64)
        vals = [r.value for r in expcomp.expansion_profile(pref, F2)]
        assert max(vals) <= 4


class TestBruteForceAgreement:
    def test_binary_prefixes_n_le_6(self):
        for n in range(1, 7):
            for bits in itertools.product((0, 1), repeat=n):
                expected = brute_force_expansion(list(bits), 2, d_max=3)
                res = expcomp.expansion_complexity(list(bits), F2, d_max=3)
                if expected is None:
                    assert res.capped, bits
                else:
                    assert res.value == expected, bits

    def test_ternary_prefixes_n_le_4(self):
        for n in range(1, 5):
            for syms in itertools.product((0, 1, 2), repeat=n):
                expected = brute_force_expansion(list(syms), 3, d_max=2)
                res = expcomp.expansion_complexity(list(syms), F3, d_max=2)
                if expected is None:
                    assert res.capped, syms
                else:
                    assert res.value == expected, syms
