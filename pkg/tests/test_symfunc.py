import pytest
from hypothesis import given, settings, strategies as st

from conftest import partitions
from gpi.partitions import Partition, enumerate_partitions, weyl_dimension
from gpi.symfunc import (
    ExactPoly,
    SchurExpansion,
    TruncatedSeries,
    duplication_check,
    expand_closed_form,
    geometric,
    lr_coefficient,
    lr_coefficient_by_expansion,
    product_of_geometric,
    schur_expand,
    schur_poly,
    schur_poly_jt,
    skew_schur,
    skew_schur_at_ones,
    young_derived,
    young_product_series,
)


def test_schur_poly_two_variables():
    assert schur_poly((2, 1), 2) == ExactPoly(2, {(2, 1): 1, (1, 2): 1})
    assert schur_poly((1, 1, 1), 2) == ExactPoly(2)


@settings(max_examples=60)
@given(partitions(max_n=6), st.integers(min_value=1, max_value=4))
def test_tableaux_and_jacobi_trudi_agree(lam, k):
    assert schur_poly(lam, k) == schur_poly_jt(lam, k)


@given(partitions(max_n=5), st.integers(min_value=1, max_value=4))
def test_schur_at_ones_is_weyl_dimension(lam, k):
    assert schur_poly(lam, k).evaluate([1] * k) == weyl_dimension(lam, k)


def test_lr_coefficient_known_value():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient_by_expansion((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (2,)) == 1


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_lr_routes_agree(a, b):
    for lam in enumerate_partitions(a):
        for mu in enumerate_partitions(b):
            for nu in enumerate_partitions(a + b):
                assert lr_coefficient(lam, mu, nu) == lr_coefficient_by_expansion(lam, mu, nu)


def test_skew_schur():
    assert skew_schur((2, 1), (1,), 2) == {(2,): 1, (1, 1): 1}
    assert skew_schur_at_ones((2, 1), (1,), 2) == 4
    with pytest.raises(ValueError):
        skew_schur((1,), (2,), 2)


def test_schur_expand_simple():
    s = ExactPoly.power_sum_one(2)
    assert schur_expand(s * s) == {(2,): 1, (1, 1): 1}


def test_schur_expand_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        schur_expand(ExactPoly.variable(2, 0))


@settings(max_examples=40)
@given(st.dictionaries(partitions(max_n=4, min_n=1), st.integers(min_value=-3, max_value=3), max_size=4))
def test_schur_expand_round_trip(coeffs):
    exp = SchurExpansion(4, coeffs)
    assert schur_expand(exp.to_poly()) == exp


def test_geometric_series_inverse():
    t = ExactPoly.variable(1, 0).to_truncated(5)
    one = TruncatedSeries(1, 5, {(0,): 1})
    assert geometric(t) * (one - t) == one
    assert (one - t).inverse() == geometric(t)


def test_closed_forms_one_variable():
    # 2n+3, n+2 and 1 for the three UT2 actions; d^(n+1) for the free algebra
    def coeffs(name, N):
        series = expand_closed_form(name, 1, N)
        return [series.coefficient((n,)) for n in range(N + 1)]

    assert coeffs("ut2", 5) == [0, 5, 7, 9, 11, 13]
    assert coeffs("ut2_D", 3) == [0, 3, 4, 5]
    assert coeffs("ut2_F", 4) == [0, 1, 1, 1, 1]
    assert coeffs("free(2)", 3) == [0, 4, 8, 16]
    assert coeffs("free3", 2) == [0, 9, 27]


def test_closed_form_two_variables_free():
    series = expand_closed_form("free(2)", 2, 2)
    # d^{n+1} (t1 + t2)^n
    assert series.coefficient((1, 1)) == 8 * 2
    assert series.coefficient((2, 0)) == 8


def test_unknown_closed_form():
    with pytest.raises(ValueError):
        expand_closed_form("ut3", 1, 2)


@pytest.mark.parametrize("outer,inner", [((2, 1), (1,)), ((3, 2), (1,)), ((2, 2), ()), ((3, 1), (2,))])
@pytest.mark.parametrize("l,k", [(1, 1), (1, 2), (2, 2)])
def test_duplication(outer, inner, l, k):
    assert duplication_check(outer, inner, l, k)


def test_young_derived_pieri():
    y = young_derived({(1,): 1})
    assert y((2, 1)) == 1
    assert y((2, 2)) == 0
    assert y((3,)) == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_young_derived_matches_product_series(k):
    alpha = {(1,): 2, (1, 1): 1, (2, 1): 3}
    series = young_product_series(alpha, k, 5)
    y = young_derived(alpha)
    for n in range(6):
        part = ExactPoly(k, {e: c for e, c in series.terms.items() if sum(e) == n})
        assert y.expansion(n, k).to_poly() == part


def test_product_of_geometric_counts_monomials():
    p = product_of_geometric(2, 3)
    assert all(c == 1 for c in p.terms.values())
    assert len(p.terms) == 10
