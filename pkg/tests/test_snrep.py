from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from conftest import partitions
from gpi.partitions import enumerate_partitions, sn_dimension
from gpi.snrep import (
    MultiplicityError,
    branching_check,
    character_vector,
    class_representative,
    class_size,
    compose,
    cycle_type,
    decompose,
    identity,
    inner_product,
    inverse,
    irreducible_character,
    left_ideal_dimension,
    regular_character,
    sign,
    specht_trace,
    standard_filling,
    young_symmetrizer,
)

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(n))).map(tuple))


@given(perms)
def test_inverse_and_sign(p):
    assert compose(p, inverse(p)) == identity(len(p))
    assert sign(compose(p, p)) == 1


@given(partitions(max_n=7, min_n=1))
def test_class_representative_has_cycle_type(mu):
    assert cycle_type(class_representative(mu)) == mu


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(mu) for mu in enumerate_partitions(n)) == factorial(n)


def test_small_character_table():
    assert irreducible_character((2, 1), (1, 1, 1)) == 2
    assert irreducible_character((2, 1), (2, 1)) == 0
    assert irreducible_character((2, 1), (3,)) == -1
    assert irreducible_character((1, 1, 1), (2, 1)) == -1


@given(partitions(max_n=6, min_n=1))
def test_characters_are_orthonormal(lam):
    chi = character_vector(lam)
    assert inner_product(chi, chi) == 1
    assert chi[(1,) * sum(lam)] == sn_dimension(lam)


def test_young_symmetrizer_of_hook():
    e = young_symmetrizer([[1, 2], [3]])
    assert len(e) == 4
    assert left_ideal_dimension(e) == 2


@pytest.mark.parametrize("n", range(1, 5))
def test_ideal_traces_match_murnaghan_nakayama(n):
    for lam in enumerate_partitions(n):
        tab = standard_filling(lam)
        for mu in enumerate_partitions(n):
            assert specht_trace(tab, class_representative(mu)) == irreducible_character(lam, mu)


def test_bad_tableau():
    with pytest.raises(ValueError):
        young_symmetrizer([[1, 1]])


@settings(max_examples=30)
@given(st.integers(1, 6))
def test_regular_character_decomposes_by_dimension(n):
    exp = decompose(regular_character(n))
    assert dict(exp) == {lam: sn_dimension(lam) for lam in enumerate_partitions(n)}


def test_decompose_rejects_non_character():
    half = character_vector((2,)).scale(Fraction(1, 2))
    with pytest.raises(MultiplicityError):
        decompose(half)


@given(partitions(max_n=7, min_n=1))
def test_branching(lam):
    assert branching_check(lam)
