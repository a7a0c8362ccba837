from __future__ import annotations

from math import factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcone.errors import NilconeError, NotUnitriangular, WeightMismatch
from nilcone.matrix import IntegerMatrix, invert_unitriangular, kron
from nilcone.partitions import (
    Partition,
    dominance_leq,
    endo_dim,
    kostka,
    kostka_matrix,
    partition_count,
    partitions_of,
)

from oracles import centralizer_dim, partition_count_dp, ssyt_count


def test_partition_validation():
    assert Partition((3, 1, 1)).weight == 5
    assert Partition((3, 1, 1)).length == 3
    assert Partition(()) == ()
    with pytest.raises(NilconeError):
        Partition((1, 2))
    with pytest.raises(NilconeError):
        Partition((2, 0))


def test_conjugate_and_multiplicities():
    lam = Partition((3, 1, 1))
    assert lam.conjugate() == (3, 1, 1)
    assert Partition((4, 2)).conjugate() == (2, 2, 1, 1)
    assert Partition((3, 3, 1)).multiplicities() == (1, 0, 2)
    assert Partition.from_multiplicities((1, 0, 2)) == (3, 3, 1)


@pytest.mark.parametrize("d", range(0, 11))
def test_partition_count_matches_recurrence(d):
    assert partition_count(d) == partition_count_dp(d)


def test_dominance_examples():
    assert dominance_leq((2, 1), (2, 1))
    assert dominance_leq((1, 1, 1), (3,))
    assert not dominance_leq((3, 1), (2, 2))
    assert dominance_leq((2, 2), (3, 1))
    with pytest.raises(WeightMismatch):
        dominance_leq((2,), (1, 1, 1))


@pytest.mark.parametrize("d", range(1, 9))
def test_dominance_is_partial_order(d):
    ps = partitions_of(d)
    leq = {(a, b): dominance_leq(a, b) for a in ps for b in ps}
    for a in ps:
        assert leq[a, a]
        for b in ps:
            if leq[a, b] and leq[b, a]:
                assert a == b
            for c in ps:
                if leq[a, b] and leq[b, c]:
                    assert leq[a, c]


def test_partitions_order_extends_dominance():
    for d in range(1, 9):
        ps = partitions_of(d)
        assert ps[0] == (1,) * d and ps[-1] == (d,)
        for i, a in enumerate(ps):
            for b in ps[:i]:
                assert not dominance_leq(a, b) or a == b


def test_kostka_examples():
    assert kostka((2, 1), (2, 1)) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3, 2), (2, 2, 1)) == 2
    assert kostka((), ()) == 1
    with pytest.raises(WeightMismatch):
        kostka((2,), (1,))


@pytest.mark.parametrize("d", range(1, 8))
def test_kostka_support_is_dominance(d):
    for lam in partitions_of(d):
        assert kostka(lam, lam) == 1
        for nu in partitions_of(d):
            assert (kostka(lam, nu) > 0) == dominance_leq(nu, lam)


@pytest.mark.parametrize("d", range(1, 8))
def test_standard_tableaux_square_sum(d):
    ones = (1,) * d
    assert sum(kostka(lam, ones) ** 2 for lam in partitions_of(d)) == factorial(d)


def test_kostka_matrix_examples():
    assert kostka_matrix(1).to_lists() == [[1]]
    m2 = kostka_matrix(2)
    assert list(m2.order) == [(1, 1), (2,)]
    assert m2.to_lists() == [[1, 0], [1, 1]]
    m3 = kostka_matrix(3)
    assert list(m3.order) == [(1, 1, 1), (2, 1), (3,)]
    assert m3.to_lists() == [[1, 0, 0], [2, 1, 0], [1, 1, 1]]
    with pytest.raises(NilconeError):
        kostka_matrix(0)


def test_kostka_matrix_against_tableau_oracle_small():
    for d in range(1, 6):
        m = kostka_matrix(d)
        for lam in m.order:
            for nu in m.order:
                assert m.entry(lam, nu) == ssyt_count(lam, nu)


def test_invert_examples():
    eye = IntegerMatrix.identity(["a", "b", "c"])
    assert invert_unitriangular(eye) == eye
    m = IntegerMatrix.from_rows(["x", "y"], [[1, 0], [1, 1]])
    assert invert_unitriangular(m).to_lists() == [[1, 0], [-1, 1]]
    assert invert_unitriangular(kostka_matrix(3)).to_lists() == [[1, 0, 0], [-2, 1, 0], [1, -1, 1]]


def test_invert_rejects_non_unitriangular():
    with pytest.raises(NotUnitriangular):
        invert_unitriangular(IntegerMatrix.from_rows([0, 1], [[2, 0], [0, 1]]))
    with pytest.raises(NotUnitriangular):
        invert_unitriangular(IntegerMatrix.from_rows([0, 1], [[1, 1], [0, 1]]))


@pytest.mark.parametrize("d", range(1, 8))
def test_inverse_kostka_is_exact(d):
    m = kostka_matrix(d)
    inv = invert_unitriangular(m)
    assert (m @ inv) == IntegerMatrix.identity(m.order)
    assert sympy.Matrix(m.to_lists()).inv().tolist() == inv.to_lists()


def test_kron_labels_and_entries():
    a = kostka_matrix(2)
    k = kron(a, a)
    assert list(k.order) == [((1, 1), (1, 1)), ((1, 1), (2,)), ((2,), (1, 1)), ((2,), (2,))]
    assert k.to_lists() == [[1, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 1, 1, 1]]


def test_endo_dim_examples():
    assert endo_dim((1,)) == 1
    assert endo_dim((1, 1)) == 4
    assert endo_dim((2, 1)) == 5


@pytest.mark.parametrize("d", range(1, 7))
def test_endo_dim_is_centralizer_dimension(d):
    for lam in partitions_of(d):
        assert endo_dim(lam) == centralizer_dim(lam)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=6))
def test_endo_dim_conjugate_formula(parts):
    lam = Partition(sorted(parts, reverse=True))
    # the weights 2i-1 go on the parts of lam itself; squares go on the columns
    assert endo_dim(lam) == sum((2 * i - 1) * p for i, p in enumerate(lam, start=1))
    assert endo_dim(lam) == sum(c * c for c in lam.conjugate())
    assert endo_dim(lam) >= lam.weight


@settings(max_examples=60)
@given(st.integers(1, 7), st.data())
def test_kostka_agrees_with_oracle(d, data):
    ps = partitions_of(d)
    lam = data.draw(st.sampled_from(ps))
    nu = data.draw(st.sampled_from(ps))
    assert kostka(lam, nu) == ssyt_count(lam, nu)
