from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gpi.linalg import RowSpace, bareiss_rank, dense_rows, flint_rank, flint_rref, nullspace, rank

entries = st.one_of(st.integers(-3, 3), st.fractions(min_value=-2, max_value=2, max_denominator=3))


def sparse(rows):
    return [{c: x for c, x in enumerate(r) if x} for r in rows]


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    nr = draw(st.integers(1, max_rows))
    nc = draw(st.integers(1, max_cols))
    return [[draw(entries) for _ in range(nc)] for _ in range(nr)]


@settings(max_examples=80)
@given(matrices())
def test_three_rank_routes_agree(m):
    vecs = sparse(m)
    r = rank(vecs)
    assert r == bareiss_rank(m)
    assert r == flint_rank(vecs, len(m[0]))


@settings(max_examples=60)
@given(matrices())
def test_nullspace_is_orthogonal_and_complete(m):
    ncols = len(m[0])
    vecs = sparse(m)
    kernel = nullspace(vecs, ncols)
    assert len(kernel) == ncols - rank(vecs)
    for k in kernel:
        for row in vecs:
            assert sum(row.get(c, 0) * x for c, x in k.items()) == 0
    assert rank(kernel) == len(kernel)


def test_rowspace_coordinates():
    space = RowSpace()
    assert space.add({0: 1, 1: 2})
    assert space.add({1: 1, 2: 1})
    assert not space.add({0: 2, 1: 4})
    assert space.rank == 2
    v = {0: 1, 1: 3, 2: 1}
    assert space.contains(v)
    with pytest.raises(ValueError):
        space.coordinates({2: 1, 3: 1})


def test_rowspace_stop_at():
    space = RowSpace()
    space.extend([{0: 1}, {1: 1}, {0: 1, 1: 1}, {2: 1}], stop_at=2)
    assert space.rank == 2


def test_flint_rref_pivots():
    vecs = [{1: 2, 2: 1}, {1: 4, 2: 2}, {3: Fraction(1, 2)}]
    _, rk, pivots = flint_rref(vecs, 4)
    assert rk == 2
    assert pivots == [1, 3]


def test_dense_rows_and_empty():
    assert dense_rows([{1: 5}], 3) == [[0, 5, 0]]
    assert bareiss_rank([]) == 0
    assert flint_rank([], 3) == 0
