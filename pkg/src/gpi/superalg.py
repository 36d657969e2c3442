"""Grassmann envelopes and graded generalized identities.

The infinite Grassmann algebra is replaced by the exterior algebra on ``m``
generators.  For multilinear f, an evaluation at elements ``a_i (x) g_i`` with
Grassmann words ``g_i`` is zero when two words share a generator and otherwise
equals ``tilde(f)(a) (x) g_1...g_n``.  So only the choice "one fresh generator
per odd variable, 1 for even ones" matters, and ``m >= deg f`` is enough.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .algebra import WSuperAlgebra, grassmann_algebra, make_action, make_algebra, make_superalgebra
from .gpoly import Evaluator, GenMonomial, GenPoly, GradedGenPoly, basis_assignments, format_genpoly, parse_genpoly, tilde
from .linalg import nullspace


def _tensor(S: WSuperAlgebra, m: int, pairs: list[tuple[int, int]], parity_of) -> WSuperAlgebra:
    A, W, act = S.A, S.W, S.action
    E, _ = grassmann_algebra(m)
    index = {p: k for k, p in enumerate(pairs)}
    d = len(pairs)

    def embed(avec, g):
        out = [0] * d
        for i, c in enumerate(avec):
            if c:
                out[index[(i, g)]] += c
        return out

    mult = []
    for a, g in pairs:
        row = []
        for b, h in pairs:
            out = [0] * d
            gh = E.mult[g][h]
            ab = A.mult[a][b]
            for k, e in enumerate(gh):
                if e:
                    for i, c in enumerate(ab):
                        if c:
                            out[index[(i, k)]] += c * e
            row.append(out)
        mult.append(row)
    labels = [f"{A.basis[a]}*{E.basis[g]}" for a, g in pairs]
    B = make_algebra(labels, mult, f"{A.name}(x)E{m}")
    left = [[embed(act.left[w][a], g) for a, g in pairs] for w in range(W.dim)]
    right = [[embed(act.right[a][w], g) for w in range(W.dim)] for a, g in pairs]
    new = make_action(W, B, left, right, f"{act.name or A.name}(x)E{m}")
    return make_superalgebra(new, [parity_of(a, g) for a, g in pairs])


@lru_cache(maxsize=32)
def envelope(S: WSuperAlgebra, m: int) -> WSuperAlgebra:
    """(A0 (x) E0) + (A1 (x) E1) over the exterior algebra on m generators.

    W acts on the first tensor factor.  The result is validated.
    """
    if m < 1:
        raise ValueError("m must be positive")
    _, epar = grassmann_algebra(m)
    pairs = [(a, g) for a in range(S.A.dim) for g in range(len(epar)) if S.parity[a] == epar[g]]
    return _tensor(S, m, pairs, lambda a, g: S.parity[a])


def tensor_grassmann(S: WSuperAlgebra, m: int) -> WSuperAlgebra:
    """A (x) E with the grading coming from E."""
    if m < 1:
        raise ValueError("m must be positive")
    _, epar = grassmann_algebra(m)
    pairs = [(a, g) for a in range(S.A.dim) for g in range(len(epar))]
    return _tensor(S, m, pairs, lambda a, g: epar[g])


def graded_is_identity(f: GenPoly, S: WSuperAlgebra) -> bool:
    """f vanishes when even variables run over A0 and odd ones over A1."""
    if not f.is_multilinear():
        raise ValueError("graded identity testing needs a multilinear polynomial")
    if f.W.mult != S.W.mult:
        raise ValueError("polynomial and superalgebra use different W")
    f = GradedGenPoly(f.W, f.terms)
    ev = Evaluator(S.action)
    choices = {v: S.homogeneous_basis(1 if v in f.odd_variables() else 0) for v in f.variables()}
    for assignment in basis_assignments(f.variables(), choices):
        if any(ev.evaluate(f, assignment)):
            return False
    return True


def tilde_correspondence_check(f: GenPoly, S: WSuperAlgebra, m: int) -> bool:
    """[f is a graded identity of E(S)] iff [tilde(f) is one of S], at truncation m."""
    if f.degree() > m:
        raise ValueError(f"degree {f.degree()} exceeds the truncation m = {m}")
    lhs = graded_is_identity(f, envelope(S, m))
    rhs = graded_is_identity(tilde(f), S)
    return lhs == rhs


def truncation_stable(f: GenPoly, S: WSuperAlgebra, m: int) -> bool:
    """Same verdict on the envelopes with m and m + 1 generators."""
    return graded_is_identity(f, envelope(S, m)) == graded_is_identity(f, envelope(S, m + 1))


def graded_variables(l: int, m: int) -> list[str]:
    return [f"y{i + 1}" for i in range(l)] + [f"z{i + 1}" for i in range(m)]


def graded_multilinear_basis(l: int, m: int, d: int) -> list[GenMonomial]:
    """Monomials of gP_{l,m}: orders of y1..yl, z1..zm times W-words."""
    names = graded_variables(l, m)
    n = len(names)
    out = []
    for perm in itertools.permutations(range(n)):
        xs = tuple(names[i] for i in perm)
        for ws in itertools.product(range(d), repeat=n + 1):
            out.append(GenMonomial(ws, xs))
    return out


def graded_identities(S: WSuperAlgebra, l: int, m: int) -> list[GradedGenPoly]:
    """Basis of the multilinear graded identities of S in gP_{l,m}."""
    names = graded_variables(l, m)
    basis = graded_multilinear_basis(l, m, S.W.dim)
    ev = Evaluator(S.action)
    choices = {v: S.homogeneous_basis(1 if v.startswith("z") else 0) for v in names}
    assignments = list(basis_assignments(names, choices))
    da = S.A.dim
    columns = []
    for assignment in assignments:
        vals = [ev.word(mono.ws, [assignment[v] for v in mono.xs]) for mono in basis]
        for c in range(da):
            columns.append({i: v[c] for i, v in enumerate(vals) if v[c]})
    # identities: coefficient vectors orthogonal to every evaluation column
    kernel = nullspace(columns, len(basis))
    return [GradedGenPoly(S.W, {basis[i]: c for i, c in vec.items()}) for vec in kernel]


def tilde_roundtrip(f: GradedGenPoly) -> bool:
    """tilde(tilde(f)) == f after passing through the text syntax."""
    once = parse_genpoly(format_genpoly(tilde(f)), f.W, graded=True)
    twice = parse_genpoly(format_genpoly(tilde(once)), f.W, graded=True)
    return twice == f


def graded_polys(l: int, m: int, W) -> Iterator[GradedGenPoly]:
    for mono in graded_multilinear_basis(l, m, W.dim):
        yield GradedGenPoly(W, {mono: 1})


def desk_cases() -> list[tuple[str, GenPoly, WSuperAlgebra, int]]:
    """The fixed desk cases for the envelope correspondence."""
    from .algebra import grassmann_truncated, ut2_graded_D

    E2 = grassmann_truncated(2)
    U = ut2_graded_D()
    cases = [
        ("even-only commutator on graded UT2", parse_genpoly("y1 y2 - y2 y1", U.W, graded=True), U, 2),
        ("even-only single variable on graded UT2", parse_genpoly("y1", U.W, graded=True), U, 1),
        ("odd commutator on E(2)", parse_genpoly("z1 z2 - z2 z1", E2.W, graded=True), E2, 2),
        ("odd anticommutator on E(2)", parse_genpoly("z1 z2 + z2 z1", E2.W, graded=True), E2, 2),
        (
            "mixed polynomial of gP_{1,1} on graded UT2",
            parse_genpoly("2 * w[0] y1 w[1] z1 w[0] - w[1] z1 y1 w[0] + 3 * y1 w[0] z1", U.W, graded=True),
            U,
            2,
        ),
    ]
    for k, g in enumerate(graded_identities(U, 1, 1)):
        cases.append((f"graded identity {k + 1} of UT2 in gP_{{1,1}}, untwisted", tilde(g), U, 2))
    E3 = grassmann_truncated(3)
    for k, g in enumerate(graded_identities(E3, 1, 2)):
        cases.append((f"graded identity {k + 1} of E(3) in gP_{{1,2}}, untwisted", tilde(g), E3, 3))
    return cases


__all__ = [
    "desk_cases",
    "envelope",
    "graded_identities",
    "graded_is_identity",
    "graded_multilinear_basis",
    "graded_polys",
    "graded_variables",
    "tensor_grassmann",
    "tilde_correspondence_check",
    "tilde_roundtrip",
    "truncation_stable",
]
