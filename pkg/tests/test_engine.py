from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from gpi.algebra import builtin, diagonal, make_action, make_algebra, ordinary, semidirect
from gpi.engine import (
    AlgebraModel,
    FreeModel,
    VerificationError,
    capelli_landing,
    capelli_report,
    character_values,
    cocharacter,
    codimension,
    colength,
    evaluation_matrix,
    first_nonvanishing_basis,
    gid_contained,
    gl_pipeline_multiplicities,
    homogeneous_codimension,
    is_identity,
    multidegree_dimension,
    multiplicity_bound_check,
    strip_violations,
)
from gpi.gpoly import capelli, generalized_capelli_set, parse_genpoly
from gpi.linalg import bareiss_rank, dense_rows
from gpi.partitions import Partition, compositions
from gpi.verify import expected_ut2


def P(*parts):
    return Partition(parts)


@pytest.mark.parametrize(
    "name,n,gc",
    [("ut2_self", 1, 5), ("ut2_self", 2, 10), ("ut2_self", 3, 22), ("ut2_D", 1, 3), ("ut2_F", 1, 1),
     ("matrix(2)", 1, 16), ("matrix(2)", 2, 64), ("diagonal(2)", 3, 1)],
)
def test_codimensions(name, n, gc):
    assert codimension(builtin(name), n) == gc


@pytest.mark.parametrize("d,n", [(1, 3), (2, 2), (3, 2)])
def test_free_codimension_is_full(d, n):
    assert codimension(FreeModel(d), n) == d ** (n + 1) * factorial(n)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("name,action", [("ut2_self", "self"), ("ut2_D", "D"), ("ut2_F", "F")])
def test_ut2_tables(name, action, n):
    assert dict(cocharacter(builtin(name), n).multiplicities) == expected_ut2(n, action)


def test_ut2_self_degree_four():
    r = cocharacter(builtin("ut2_self"), 4)
    assert dict(r.multiplicities) == {P(4): 11, P(3, 1): 9, P(2, 2): 3, P(2, 1, 1): 2}
    assert (r.gc, r.gl) == (50, 25)


def test_ut2_f_is_ordinary_ut2():
    for n in (1, 2, 3):
        assert cocharacter(builtin("ut2_F"), n).multiplicities == cocharacter(ordinary(builtin("ut2_self")), n).multiplicities


@pytest.mark.parametrize("name,n", [("ut2_self", 3), ("matrix(2)", 2), ("ut2_D", 3)])
def test_backends_agree(name, n):
    act = builtin(name)
    py = cocharacter(AlgebraModel(act, "python"), n)
    fl = cocharacter(AlgebraModel(act, "flint"), n)
    assert py.gc == fl.gc
    assert py.multiplicities == fl.multiplicities


@pytest.mark.parametrize("name", ["ut2_self", "ut2_D", "grassmann(3)"])
def test_kernel_and_image_routes_agree(name):
    act = builtin(name)
    for n in (1, 2, 3):
        assert character_values(act, n, "kernel") == character_values(act, n, "image")


def test_free_model_cocharacter_is_regular_times_words():
    r = cocharacter(FreeModel(2), 3)
    # gP_n is d^(n+1) copies of the regular representation
    assert all(m == 16 * c for (lam, m), c in zip(r.multiplicities.items(), [1, 2, 1]))


def test_evaluation_matrix_rank_is_codimension():
    act = builtin("ut2_D")
    rows = evaluation_matrix(act, 2)
    assert bareiss_rank(dense_rows(rows, act.A.dim ** 3)) == codimension(act, 2)


@settings(max_examples=20, deadline=None)
@given(st.permutations([0, 1, 2]))
def test_rows_intertwine_the_symmetric_group(sigma):
    model = AlgebraModel(builtin("ut2_self"), "python")
    n = 3
    cp = model.col_perm(n, sigma)
    for k in range(0, model.monomial_count(n), 7):
        row = model.row(n, k)
        moved = {c: row[cp[c]] for c in range(model.ncols(n)) if cp[c] in row}
        assert model.row(n, model.monomial_action(n, sigma, k)) == moved


def test_multidegree_examples():
    act = builtin("ut2_self")
    assert multidegree_dimension(act, (2,)) == 7
    for alpha in [(2,), (1, 1), (2, 1), (3,), (1, 2)]:
        assert multidegree_dimension(act, alpha) == multidegree_dimension(act, alpha, "explicit")


@pytest.mark.parametrize("act,n,k,value", [(FreeModel(2), 2, 1, 8), ("ut2_self", 3, 1, 9), ("ut2_D", 2, 1, 4)])
def test_homogeneous_codimension(act, n, k, value):
    act = builtin(act) if isinstance(act, str) else act
    assert homogeneous_codimension(act, n, k) == value


def test_homogeneous_codimension_full_k_equals_sum_of_multidegrees():
    act = builtin("ut2_D")
    total = sum(multidegree_dimension(act, a) for a in compositions(3, 2))
    assert homogeneous_codimension(act, 3, 2) == total


def test_gl_pipeline_needs_enough_variables():
    with pytest.raises(ValueError):
        gl_pipeline_multiplicities(builtin("ut2_D"), 3, 2)


@pytest.mark.parametrize("name", ["ut2_D", "matrix(2)"])
def test_pipelines_agree(name):
    act = builtin(name)
    for n in (1, 2):
        assert gl_pipeline_multiplicities(act, n) == cocharacter(act, n).multiplicities


def test_colength_and_strip():
    act = builtin("ut2_self")
    assert colength(act, 4) == 25
    assert strip_violations(cocharacter(act, 4), 3) == []
    assert strip_violations(cocharacter(act, 4), 2) == [P(2, 1, 1)]


def test_is_identity():
    act = builtin("ut2_self")
    W = act.W
    assert is_identity(parse_genpoly("w[1] x1 w[1]", W), act)
    assert not is_identity(parse_genpoly("x1 x2 - x2 x1", W), act)
    # [x1, x2][x3, x4] on UT2, in ordinary form
    ordinary_act = builtin("ut2_F")
    F = ordinary_act.W
    comm = parse_genpoly("x1 x2 x3 x4 - x1 x2 x4 x3 - x2 x1 x3 x4 + x2 x1 x4 x3", F)
    assert is_identity(comm, ordinary_act)


def test_non_multilinear_identity_is_linearized():
    act = builtin("diagonal(2)")
    F = act.W
    assert is_identity(parse_genpoly("x1 x1 x2 - x2 x1 x1", F), act)
    assert not is_identity(parse_genpoly("x1 x1", F), act)
    assert first_nonvanishing_basis(parse_genpoly("x1 x1", F), act) == {"x1": "d1", "x2": "d1"}


@pytest.mark.parametrize("name", ["ut2_self", "ut2_D", "ut2_F"])
@pytest.mark.parametrize("m", [1, 2])
def test_capelli_report_matches_generic_evaluation(name, m):
    act = builtin(name)
    generic = all(is_identity(f, act) for f in generalized_capelli_set(m, act.W))
    assert capelli_report(act, m).holds == generic
    assert capelli_report(act, m, generalized=False).holds == is_identity(capelli(m, act.W), act)


def test_capelli_on_ut2():
    for name in ("ut2_self", "ut2_D", "ut2_F"):
        act = builtin(name)
        assert [bool(capelli_report(act, m)) for m in (1, 2, 3, 4)] == [False, False, False, True]
    act = builtin("ut2_F")
    assert is_identity(capelli(4, act.W), act)


def test_capelli_witness_on_matrices():
    rep = capelli_report(builtin("matrix(2)"), 2)
    assert not rep
    assert "witness: x = " in rep.render()


def test_capelli_landing():
    assert capelli_landing(builtin("ut2_D"))
    assert capelli_landing(builtin("ut2_F"))


@pytest.mark.parametrize("name", ["ut2_self", "ut2_D", "ut2_F"])
def test_identities_of_semidirect_product_hold_in_a(name):
    act = builtin(name)
    s = semidirect(act)
    for n in (1, 2, 3):
        assert gid_contained(s, act, n)
    for n in (1, 2):
        assert codimension(act, n) <= codimension(s, n)


def test_gid_containment_is_not_symmetric():
    # the diagonal algebra is a subalgebra of UT2 but is commutative
    ut, diag = builtin("ut2_F"), builtin("diagonal(2)")
    assert gid_contained(ut, diag, 2)
    assert not gid_contained(diag, ut, 2)


def test_bound_examples():
    rep = multiplicity_bound_check(builtin("ut2_self"), 1)
    assert rep.rows == [(P(1), 5, 27)]
    rep = multiplicity_bound_check(builtin("ut2_D"), 2)
    assert rep.rows == [(P(2), 4, 48), (P(1, 1), 2, 40)]


def test_bound_needs_unital_algebra():
    N = make_algebra(["e12"], [[[0]]])
    act = make_action(diagonal(1), N, [[[1]]], [[[1]]])
    with pytest.raises(ValueError):
        multiplicity_bound_check(act, 1)


def test_unknown_method():
    with pytest.raises(ValueError):
        character_values(builtin("ut2_D"), 2, "fast")
    with pytest.raises(ValueError):
        multidegree_dimension(builtin("ut2_D"), (1, 1), "fast")
