import pytest

from gpi.algebra import builtin_superalgebra, field_algebra, grassmann_truncated, ut2_graded_D
from gpi.gpoly import parse_genpoly, tilde
from gpi.superalg import (
    desk_cases,
    envelope,
    graded_identities,
    graded_is_identity,
    graded_multilinear_basis,
    tensor_grassmann,
    tilde_correspondence_check,
    tilde_roundtrip,
    truncation_stable,
)


def test_envelope_dimensions():
    U = ut2_graded_D()
    # A0 has dim 2, A1 dim 1; E(m) has 2^(m-1) even and odd words
    assert envelope(U, 2).A.dim == 2 * 2 + 1 * 2
    assert envelope(U, 3).A.dim == 2 * 4 + 1 * 4
    assert tensor_grassmann(U, 2).A.dim == 12


def test_envelope_parity_follows_a():
    U = ut2_graded_D()
    env = envelope(U, 2)
    assert sum(env.parity) == 2


def test_envelope_rejects_zero_generators():
    with pytest.raises(ValueError):
        envelope(ut2_graded_D(), 0)


def test_graded_commutativity_of_grassmann():
    E = grassmann_truncated(3)
    W = E.W
    assert graded_is_identity(parse_genpoly("y1 y2 - y2 y1", W, graded=True), E)
    assert graded_is_identity(parse_genpoly("y1 z1 - z1 y1", W, graded=True), E)
    assert graded_is_identity(parse_genpoly("z1 z2 + z2 z1", W, graded=True), E)
    assert not graded_is_identity(parse_genpoly("z1 z2 - z2 z1", W, graded=True), E)


def test_envelope_of_grassmann_is_commutative():
    # tilde turns z1 z2 + z2 z1 into z1 z2 - z2 z1, an identity of the commutative envelope
    E2 = grassmann_truncated(2)
    f = parse_genpoly("z1 z2 - z2 z1", E2.W, graded=True)
    assert graded_is_identity(f, envelope(E2, 2))
    assert tilde_correspondence_check(f, E2, 2)


def test_graded_identities_of_ut2():
    U = ut2_graded_D()
    ids = graded_identities(U, 1, 1)
    assert len(ids) == 14
    assert all(graded_is_identity(g, U) for g in ids)
    assert len(graded_multilinear_basis(1, 1, U.W.dim)) == 2 * 2 ** 3


def test_graded_identities_of_grassmann():
    E3 = grassmann_truncated(3)
    ids = graded_identities(E3, 1, 2)
    assert len(ids) == 5
    assert all(graded_is_identity(g, E3) for g in ids)


def test_correspondence_rejects_small_truncation():
    U = ut2_graded_D()
    with pytest.raises(ValueError):
        tilde_correspondence_check(parse_genpoly("y1 z1 y2", U.W, graded=True), U, 2)


def test_desk_cases():
    cases = desk_cases()
    assert len(cases) == 24
    for label, f, S, m in cases:
        assert tilde_correspondence_check(f, S, m), label


@pytest.mark.parametrize("k", [0, 2, 4, 5, 6])
def test_truncation_is_stable(k):
    label, f, S, m = desk_cases()[k]
    assert truncation_stable(f, S, m), label


def test_tilde_roundtrip_through_text():
    F = field_algebra()
    f = parse_genpoly("z2 y1 z1 - 1/2 * z1 y1 z2", F, graded=True)
    assert tilde_roundtrip(f)
    assert tilde(f) != f


def test_not_multilinear_rejected():
    U = ut2_graded_D()
    with pytest.raises(ValueError):
        graded_is_identity(parse_genpoly("y1 y1", U.W, graded=True), U)


def test_builtin_superalgebras():
    assert builtin_superalgebra("grassmann(2)").A.dim == 4
    with pytest.raises(KeyError):
        builtin_superalgebra("ut3")
