"""Berlekamp-Massey profile and connection polynomial synthesis."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from seqc import autoseq, lincomp
from seqc.algebra import PrimeField

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


def brute_force_lc(prefix, p):
    """Smallest L such that some length-L recurrence reproduces the prefix.

    Exhaustive over all p^L coefficient vectors; the convention cases
    (all-zero prefix, zero-padded unit) are handled like the main path:
    L = 0 for all-zero, else try L = 1, 2, ...
    """
    n = len(prefix)
    if not any(prefix):
        return 0
    for ell in range(1, n + 1):
        if ell > n - 1:
            # any L >= n works vacuously; minimal such is n when the
            # prefix is 0,...,0,c (handled by the loop reaching here)
            return ell
        for cs in itertools.product(range(p), repeat=ell):
            ok = True
            for i in range(n - ell):
                val = sum(c * prefix[i + j] for j, c in enumerate(cs)) % p
                if val != prefix[i + ell] % p:
                    ok = False
                    break
            if ok:
                return ell
    return n


class TestConventions:
    def test_zero_padded_unit(self):
        prof = lincomp.bm_profile([0, 0, 0, 1], F2)
        assert list(prof) == [0, 0, 0, 4]

    def test_all_zero(self):
        prof = lincomp.bm_profile([0, 0, 0, 0, 0], F2)
        assert list(prof) == [0, 0, 0, 0, 0]

    def test_thue_morse_n12(self):
        pref = autoseq.prefix(autoseq.thue_morse(), 12)
        assert list(lincomp.bm_profile(pref, F2)) == [0, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6]

    def test_perfect_profile_n8(self):
        pref = autoseq.prefix(autoseq.perfect_profile(), 8)
        assert list(lincomp.bm_profile(pref, F2)) == [1, 1, 2, 2, 3, 3, 4, 4]


class TestBruteForceMinimality:
    def test_all_binary_prefixes_up_to_length_8(self):
        for n in range(1, 9):
            for bits in itertools.product((0, 1), repeat=n):
                prof = lincomp.bm_profile(list(bits), F2)
                assert prof.at(n) == brute_force_lc(list(bits), 2), bits

    def test_random_binary_length_12(self):
        rng = random.Random(12)
        for _ in range(60):
            bits = [rng.randrange(2) for _ in range(12)]
            prof = lincomp.bm_profile(bits, F2)
            assert prof.at(12) == brute_force_lc(bits, 2), bits

    def test_random_ternary_length_8(self):
        rng = random.Random(3)
        for _ in range(60):
            syms = [rng.randrange(3) for _ in range(8)]
            prof = lincomp.bm_profile(syms, F3)
            assert prof.at(8) == brute_force_lc(syms, 3), syms


class TestConnection:
    def test_regenerates_perfect_profile_prefix(self):
        pref = [1, 0, 1, 1, 1, 0, 1, 0]
        ell, cs = lincomp.bm_connection(pref, F2)
        assert ell == 4
        assert lincomp.replay_recurrence(cs, pref[:ell], len(pref), F2) == pref

    def test_convention_prefix_01(self):
        pref = [0, 1]
        ell, cs = lincomp.bm_connection(pref, F2)
        assert ell == 2
        assert lincomp.replay_recurrence(cs, pref[:ell], len(pref), F2) == pref

    def test_constant_prefix(self):
        ell, cs = lincomp.bm_connection([1, 1, 1, 1], F2)
        assert ell == 1
        assert cs == (1,)

    def test_replay_all_builtins(self):
        for spec in autoseq.builtin_specs():
            pref = autoseq.prefix(spec, 96)
            ell, cs = lincomp.bm_connection(pref, spec.field)
            assert lincomp.replay_recurrence(cs, pref[:ell], len(pref), spec.field) == pref


symbol_lists = st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=40)


@given(symbol_lists)
def test_profile_invariants_f5(xs):
    prof = lincomp.bm_profile(xs, F5)
    prof.validate()  # 0 <= L <= N, monotone, jump rule


@given(st.lists(st.integers(min_value=0, max_value=1), min_size=1, max_size=40))
@settings(max_examples=60)
def test_connection_replays_random_f2(xs):
    ell, cs = lincomp.bm_connection(xs, F2)
    assert lincomp.replay_recurrence(cs, xs[:ell], len(xs), F2) == xs


@given(st.lists(st.integers(min_value=0, max_value=1), min_size=2, max_size=32))
def test_profile_prefix_consistency(xs):
    # the profile of a prefix is a prefix of the profile
    full = list(lincomp.bm_profile(xs, F2))
    half = list(lincomp.bm_profile(xs[: len(xs) // 2 + 1], F2))
    assert full[: len(half)] == half


def test_seeded_random_triples_match_brute_force():
    # 1000 seeded triples (p, length, symbols) against exhaustive search
    rng = random.Random(1000)
    fields = {2: F2, 3: F3, 5: F5}
    for _ in range(1000):
        p = rng.choice((2, 3, 5))
        n = rng.randrange(1, 7 if p == 5 else 9)
        syms = [rng.randrange(p) for _ in range(n)]
        prof = lincomp.bm_profile(syms, fields[p])
        assert prof.at(n) == brute_force_lc(syms, p), (p, syms)
