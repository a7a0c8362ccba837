from __future__ import annotations

from fractions import Fraction
from math import inf

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcone.errors import InvalidClass, InvalidGenus, NilconeError, TotalMismatch
from nilcone.hn import (
    HNType,
    UnimodularMatrix,
    codim_one_stratum,
    enumerate_hn,
    euler_form,
    format_slope,
    parse_slope,
    path_below,
    sl2_transport,
    slope,
    stratum_codim,
    stratum_leq,
)

from oracles import bezout_split, codim_from_definition, hn_types_bruteforce

H = HNType.of


def test_slope_values():
    assert slope((0, 3)) == inf
    assert slope((2, 4)) == 2
    s = slope((3, -2))
    assert s == Fraction(-2, 3) and isinstance(s, Fraction)
    for bad in [(0, 0), (0, -1), (-1, 4)]:
        with pytest.raises(InvalidClass):
            slope(bad)


def test_slope_text_round_trip():
    for mu in [inf, Fraction(-2, 3), Fraction(5)]:
        assert parse_slope(format_slope(mu)) == mu
    assert format_slope(inf) == "inf"
    assert format_slope(Fraction(1, 2)) == "1/2"


def test_euler_form_examples():
    assert euler_form((1, 0), (1, 1), 1) == 1
    assert euler_form((1, 0), (1, 0), 0) == 1
    assert euler_form((1, 0), (1, 0), 2) == -1


def test_hn_type_validation():
    with pytest.raises(InvalidClass):
        H((1, 0), (1, 1))  # slopes increase
    with pytest.raises(InvalidClass):
        H((1, 1), (0, 1))  # torsion not first
    with pytest.raises(InvalidClass):
        H((0, 1), (0, 2))  # equal slopes
    with pytest.raises(InvalidClass):
        HNType(())


def test_codim_examples():
    assert stratum_codim(H((2, 1))) == 0
    for d2 in range(-5, 6):
        assert stratum_codim(H((0, 1), (1, d2))) == 1
    assert stratum_codim(H((0, 2), (2, 0))) == 4


def test_enumerate_examples():
    assert enumerate_hn((2, 1), 0) == [H((2, 1))]
    got = enumerate_hn((2, 1), 2)
    assert got == [H((2, 1)), H((1, 1), (1, 0)), H((0, 1), (2, 0))]
    assert [stratum_codim(h) for h in got] == [0, 1, 2]
    for d in range(-4, 5):
        assert enumerate_hn((1, d), 1) == [H((1, d)), H((0, 1), (1, d - 1))]


def test_enumerate_rejects_negative_bound():
    with pytest.raises(NilconeError):
        enumerate_hn((1, 0), -1)


def test_enumerate_torsion_has_one_type():
    for d in range(1, 7):
        assert enumerate_hn((0, d), 10) == [H((0, d))]


@pytest.mark.parametrize("alpha", [(1, 0), (2, -1), (3, 2), (2, 2), (4, 1)])
def test_enumerate_matches_oracle(alpha):
    oracle = {tuple(f) for f in hn_types_bruteforce(alpha, 4)}
    got = enumerate_hn(alpha, 4)
    assert {tuple(tuple(f) for f in h) for h in got} == oracle
    assert got == sorted(got, key=HNType.sort_key)


def test_codim_equals_euler_form_sum():
    for h in enumerate_hn((3, 1), 6):
        fs = h.factors
        expected = -sum(euler_form(fs[j], fs[i], 1) for i in range(len(fs)) for j in range(i))
        assert stratum_codim(h) == expected == codim_from_definition([tuple(f) for f in fs])


def test_codim_lower_bound_by_length():
    for alpha in [(2, 1), (3, 0), (3, 3), (4, -2)]:
        for h in enumerate_hn(alpha, 6):
            assert stratum_codim(h) >= len(h) - 1
            assert (stratum_codim(h) == 0) == (len(h) == 1)


def test_jobs_do_not_change_result():
    for alpha in [(3, 1), (4, 2), (2, 2)]:
        assert enumerate_hn(alpha, 5, jobs=1) == enumerate_hn(alpha, 5, jobs=4)


def test_path_below_examples():
    a, b = H((0, 2), (2, 0)), H((0, 1), (2, 1))
    assert path_below(a, a)
    assert path_below(a, b)
    c = H((1, 2), (1, 0))
    assert not path_below(c, b)
    assert not path_below(b, c)
    assert stratum_codim(b) == stratum_codim(c) == 2
    with pytest.raises(TotalMismatch):
        path_below(H((2, 1)), H((2, 2)))


def test_stratum_leq_examples():
    assert stratum_leq(H((0, 1), (2, 1)), H((0, 2), (2, 0)))
    for alpha in [(2, 2), (3, 1), (1, -2)]:
        hs = enumerate_hn(alpha, 5)
        for h in hs:
            assert stratum_leq(H(alpha), h)
            assert stratum_leq(h, h)


def test_strictly_lower_path_has_larger_codim():
    hs = enumerate_hn((3, 2), 6)
    for a in hs:
        for b in hs:
            if a != b and stratum_leq(a, b):
                assert stratum_codim(a) < stratum_codim(b)


def test_codim_one_examples():
    assert codim_one_stratum((2, 1), 1) == H((1, 1), (1, 0))
    assert codim_one_stratum((2, 2), 1) is None
    assert codim_one_stratum((3, 2), 1) == H((1, 1), (2, 1))
    assert codim_one_stratum((0, 1), 1) is None
    assert codim_one_stratum((1, 4), 2) == H((0, 1), (1, 3))
    assert codim_one_stratum((2, 1), 3) is None
    with pytest.raises(InvalidGenus):
        codim_one_stratum((2, 1), 0)


def test_codim_one_is_the_only_codim_one_stratum():
    for r in range(1, 5):
        for d in range(-5, 6):
            ones = [h for h in enumerate_hn((r, d), 1) if stratum_codim(h) == 1]
            h = codim_one_stratum((r, d), 1)
            assert ones == ([] if h is None else [h])
            split = bezout_split(r, d)
            assert (h is None) == (split is None)
            if h is not None:
                assert tuple(h.factors[0]) == split


def test_sl2_examples():
    eye = UnimodularMatrix(1, 0, 0, 1)
    h = H((1, 1), (1, 0))
    assert sl2_transport(eye, h) == h
    assert sl2_transport(UnimodularMatrix(1, 0, 1, 1), h) == H((1, 2), (1, 1))
    assert sl2_transport(UnimodularMatrix(0, -1, 1, 0), h) is None
    with pytest.raises(NilconeError):
        UnimodularMatrix(2, 0, 0, 1)


def test_unimodular_product():
    t = UnimodularMatrix(1, 0, 1, 1)
    s = UnimodularMatrix(0, -1, 1, 0)
    v = (2, 3)
    assert (t @ s).apply(v) == t.apply(s.apply(v))


unimodular = st.sampled_from([
    UnimodularMatrix(1, 0, k, 1) for k in range(-3, 4)
] + [UnimodularMatrix(0, -1, 1, 0), UnimodularMatrix(1, 1, 0, 1), UnimodularMatrix(2, 1, 1, 1)])


@settings(max_examples=50, deadline=None)
@given(unimodular, st.integers(1, 3), st.integers(-4, 4))
def test_sl2_preserves_codim(gamma, r, d):
    for h in enumerate_hn((r, d), 4):
        t = sl2_transport(gamma, h)
        if t is not None:
            assert stratum_codim(t) == stratum_codim(h)
            assert t.total() == gamma.apply(h.total())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(-5, 5), st.integers(0, 5))
def test_enumeration_properties(r, d, bound):
    if r == 0 and d <= 0:
        return
    hs = enumerate_hn((r, d), bound)
    assert hs[0] == H((r, d))
    assert len(set(hs)) == len(hs)
    for h in hs:
        assert h.total() == (r, d)
        assert stratum_codim(h) <= bound
