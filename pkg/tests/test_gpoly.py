import pytest
from hypothesis import given, settings, strategies as st

from gpi.algebra import builtin, field_algebra, ut
from gpi.gpoly import (
    Evaluator,
    GenMonomial,
    GenPoly,
    GradedGenPoly,
    capelli,
    first_nonvanishing,
    format_genpoly,
    generalized_capelli_set,
    multilinear_basis,
    multilinear_dimension,
    multilinearize,
    multiply,
    parse_genpoly,
    tilde,
)

U = ut(2)
ACT = builtin("ut2_self")


@st.composite
def polys(draw, names=("x1", "x2", "x3"), max_deg=3, W=U):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        deg = draw(st.integers(1, max_deg))
        xs = tuple(draw(st.sampled_from(names)) for _ in range(deg))
        ws = tuple(draw(st.integers(0, W.dim - 1)) for _ in range(deg + 1))
        c = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
        terms[GenMonomial(ws, xs)] = c
    return GenPoly(W, terms)


@pytest.mark.parametrize("n,d", [(1, 1), (2, 3), (3, 2), (4, 1)])
def test_multilinear_basis_size(n, d):
    basis = multilinear_basis(n, d)
    assert len(basis) == multilinear_dimension(n, d)
    assert len(set(basis)) == len(basis)


def test_multilinear_basis_order():
    basis = multilinear_basis(2, 3)
    assert basis[0] == GenMonomial((0, 0, 0), ("x1", "x2"))
    assert basis[1] == GenMonomial((0, 0, 1), ("x1", "x2"))
    # second permutation starts after d^(n+1) monomials
    assert basis[27] == GenMonomial((0, 0, 0), ("x2", "x1"))


def test_missing_w_slots_are_the_unit():
    f = parse_genpoly("x1", U)
    # 1_W = e11 + e22 for W = UT2
    assert f.terms == {GenMonomial((0, 0), ("x1",)): 1, GenMonomial((0, 2), ("x1",)): 1,
                       GenMonomial((2, 0), ("x1",)): 1, GenMonomial((2, 2), ("x1",)): 1}


def test_adjacent_w_multiply():
    f = parse_genpoly("w[0] w[1] x1 w[2]", U)
    assert f.terms == {GenMonomial((1, 2), ("x1",)): 1}
    assert not parse_genpoly("w[1] w[0] x1", U)


@settings(max_examples=60)
@given(polys())
def test_format_parse_round_trip(f):
    assert parse_genpoly(format_genpoly(f), U) == f if f else format_genpoly(f) == "0"


@settings(max_examples=40)
@given(polys(), polys(), polys())
def test_multiplication_is_associative(f, g, h):
    assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))


@settings(max_examples=40)
@given(polys())
def test_unit_is_neutral(f):
    one = GenPoly.unit(U)
    assert multiply(one, f) == f
    assert multiply(f, one) == f


@settings(max_examples=40)
@given(polys(names=("x1",)), polys(names=("x2",)), st.integers(0, 2), st.integers(0, 2))
def test_evaluation_is_multiplicative(f, g, a, b):
    ev = Evaluator(ACT)
    assignment = {"x1": a, "x2": b}
    lhs = ev.evaluate(multiply(f, g), assignment)
    rhs = ACT.A.mul(ev.evaluate(f, assignment), ev.evaluate(g, assignment))
    assert lhs == rhs


def test_parse_errors():
    for bad in ["", "w[0]", "x1 + + x2", "w[9] x1", "x", "X1"]:
        with pytest.raises(ValueError):
            parse_genpoly(bad, U)


def test_multilinearize_square():
    F = field_algebra()
    f = parse_genpoly("x1 x1", F)
    assert multilinearize(f) == parse_genpoly("x1 x2 + x2 x1", F)
    g = parse_genpoly("y1 x1 y1", F)
    assert len(multilinearize(g)) == 2
    assert multilinearize(g).is_multilinear()


def test_capelli_shape():
    cap = capelli(3)
    assert len(cap) == 6
    assert cap.degree() == 7
    assert cap.is_multilinear()


@pytest.mark.parametrize("m", [1, 2])
def test_generalized_capelli_set_size(m):
    W = builtin("ut2_D").W
    assert sum(1 for _ in generalized_capelli_set(m, W)) == (W.dim + 1) ** (m + 1)


def test_first_nonvanishing():
    f = parse_genpoly("x1 x2 - x2 x1", U)
    hit = first_nonvanishing(f, ACT)
    ev = Evaluator(ACT)
    assert any(ev.evaluate(f, hit))
    # e12 x1 e12 vanishes on UT2
    assert first_nonvanishing(parse_genpoly("w[1] x1 w[1]", U), ACT) is None


@settings(max_examples=40)
@given(
    st.lists(st.permutations(["y1", "z1", "z2", "z3"]), min_size=1, max_size=4),
    st.lists(st.integers(0, 2), min_size=5, max_size=5),
)
def test_tilde_is_an_involution(orders, ws):
    f = GradedGenPoly(U, {GenMonomial(tuple(ws), tuple(xs)): k + 1 for k, xs in enumerate(orders)})
    assert tilde(tilde(f)) == f


def test_tilde_sign():
    F = field_algebra()
    f = parse_genpoly("z2 y1 z1 + z1 y1 z2", F, graded=True)
    assert tilde(f) == parse_genpoly("z1 y1 z2 - z2 y1 z1", F, graded=True)


def test_graded_rejects_x_variables():
    with pytest.raises(ValueError):
        parse_genpoly("x1", U, graded=True)
