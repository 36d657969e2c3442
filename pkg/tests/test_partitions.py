from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from conftest import partitions
from gpi.partitions import (
    HookShape,
    Partition,
    branch_down,
    branch_up,
    compositions,
    count_semistandard_tableaux,
    count_standard_tableaux,
    enumerate_partitions,
    format_partition,
    hook_lengths,
    hook_membership,
    interleaved_below,
    interleaves,
    is_horizontal_strip,
    parse_partition,
    sn_dimension,
    strip,
    weyl_dimension,
)


def test_partition_normalizes_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition(()).size == 0


@pytest.mark.parametrize("bad", [(1, 2), (2, -1)])
def test_partition_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_enumerate_partitions_counts():
    # p(n) for n = 0..10
    assert [len(enumerate_partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_enumerate_partitions_order_and_height():
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_partitions(4, max_height=2) == [(4,), (3, 1), (2, 2)]


def test_compositions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(compositions(4, 3))) == 15


def test_parse_and_format_round_trip():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert format_partition((3, 1, 1)) == "3,1,1"
    assert parse_partition(format_partition(())) == ()


def test_conjugate():
    assert Partition((3, 1)).conjugate() == (2, 1, 1)


@given(partitions())
def test_conjugate_is_involution(lam):
    lam = Partition(lam)
    assert lam.conjugate().conjugate() == lam


def test_hook_lengths_and_dimension():
    assert hook_lengths((2, 1)) == [3, 1, 1]
    assert sn_dimension((2, 2)) == 2
    assert sn_dimension((3, 2, 1)) == 16


@given(partitions(max_n=7, min_n=1))
def test_hook_formula_matches_tableaux_count(lam):
    assert sn_dimension(lam) == count_standard_tableaux(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_sum_of_squares(n):
    assert sum(sn_dimension(l) ** 2 for l in enumerate_partitions(n)) == factorial(n)


def test_weyl_dimension_values():
    assert weyl_dimension((2, 1), 3) == 8
    assert weyl_dimension((1, 1, 1), 2) == 0
    assert weyl_dimension((4,), 4) == 35


@settings(max_examples=40)
@given(partitions(max_n=5), st.integers(min_value=1, max_value=3))
def test_weyl_dimension_counts_semistandard_tableaux(lam, k):
    assert weyl_dimension(lam, k) == count_semistandard_tableaux(lam, k)


def test_hooks_and_strips():
    h = HookShape(2, 1)
    assert (5, 3, 1, 1) in h
    assert (5, 3, 2) not in h
    assert hook_membership((3, 1, 1), strip(3))
    assert not hook_membership((1, 1, 1, 1), strip(3))


def test_branching_neighbours():
    assert branch_up((2, 1)) == [(3, 1), (2, 2), (2, 1, 1)]
    assert sorted(branch_down((2, 1))) == [(1, 1), (2,)]


def test_interleaving():
    assert interleaves((3, 1), (2,))
    assert not interleaves((2, 2), (2, 2, 1))
    assert set(interleaved_below((2, 1))) == {(2,), (1, 1), (2, 1), (1,)}


@given(partitions(max_n=6))
def test_interleaved_below_are_horizontal_strips(lam):
    for mu in interleaved_below(lam):
        assert is_horizontal_strip(lam, mu)
