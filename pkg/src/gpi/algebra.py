"""Finite-dimensional algebras, W-actions and W-superalgebras.

Elements are dense coefficient tuples in a fixed basis.  Structure constants
are exact rationals; integral values are kept as plain ints so that the 0/1
built-ins never touch :class:`~fractions.Fraction`.

Built-in UT2 basis order is ``(e11, e12, e22)``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .linalg import RowSpace, _norm

Vec = tuple


class AxiomError(ValueError):
    """A structure-constant table violates an algebra or action axiom."""


class SchemaError(ValueError):
    """An algebra document does not match the expected schema."""


def parse_rational(x) -> int | Fraction:
    if isinstance(x, bool):
        raise SchemaError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and re.fullmatch(r"\s*-?\d+(\s*/\s*\d+)?\s*", x):
        return _norm(Fraction(x.replace(" ", "")))
    raise SchemaError(f"not a rational string: {x!r}")


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _vec(values: Sequence, dim: int) -> Vec:
    if len(values) != dim:
        raise SchemaError(f"expected a vector of length {dim}, got {len(values)}")
    return tuple(_norm(v) if isinstance(v, Fraction) else v for v in values)


def zero(dim: int) -> Vec:
    return (0,) * dim


def unit_vec(dim: int, i: int) -> Vec:
    v = [0] * dim
    v[i] = 1
    return tuple(v)


def add(u: Vec, v: Vec) -> Vec:
    return tuple(_norm(a + b) for a, b in zip(u, v))


def scale(c, v: Vec) -> Vec:
    return tuple(_norm(c * a) for a in v)


def bilinear(table, u: Vec, v: Vec, out_dim: int) -> Vec:
    """Extend a basis product table ``table[i][j] -> vector`` bilinearly."""
    acc = [0] * out_dim
    for i, a in enumerate(u):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(row[j]):
                if c:
                    acc[k] += ab * c
    return tuple(_norm(x) for x in acc)


@dataclass(frozen=True)
class FiniteAlgebra:
    """Associative algebra given by structure constants.

    ``mult[i][j]`` is the coordinate vector of ``b_i b_j``.
    """

    basis: tuple[str, ...]
    mult: tuple[tuple[Vec, ...], ...]
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)

    def mul(self, u: Vec, v: Vec) -> Vec:
        return bilinear(self.mult, u, v, self.dim)

    def basis_vector(self, i: int) -> Vec:
        return unit_vec(self.dim, i)

    def check_associative(self) -> None:
        d = self.dim
        support = [[[(k, c) for k, c in enumerate(v) if c] for v in row] for row in self.mult]
        for i, j, l in itertools.product(range(d), repeat=3):
            left = [0] * d
            for k, c in support[i][j]:
                for r, v in support[k][l]:
                    left[r] += c * v
            right = [0] * d
            for k, c in support[j][l]:
                for r, v in support[i][k]:
                    right[r] += c * v
            if left != right:
                raise AxiomError(f"associativity fails on basis triple ({i}, {j}, {l})")

    def unity(self) -> Vec | None:
        return find_unity(self)


def make_algebra(basis: Sequence[str], mult, name: str = "", validate: bool = True) -> FiniteAlgebra:
    d = len(basis)
    if d < 1:
        raise SchemaError("an algebra needs at least one basis element")
    if len(mult) != d or any(len(row) != d for row in mult):
        raise SchemaError(f"multiplication table must be {d}x{d}")
    table = tuple(tuple(_vec(mult[i][j], d) for j in range(d)) for i in range(d))
    alg = FiniteAlgebra(tuple(basis), table, name)
    if validate:
        alg.check_associative()
    return alg


def find_unity(alg: FiniteAlgebra) -> Vec | None:
    """Solve e b_i = b_i = b_i e for the two-sided unit; None if there is none."""
    d = alg.dim
    space = RowSpace()
    # unknowns e_0..e_{d-1}; column d holds the right-hand side
    for i in range(d):
        for k in range(d):
            target = 1 if k == i else 0
            eq_left = {m: alg.mult[m][i][k] for m in range(d) if alg.mult[m][i][k]}
            eq_right = {m: alg.mult[i][m][k] for m in range(d) if alg.mult[i][m][k]}
            for eq in (eq_left, eq_right):
                if target:
                    eq = dict(eq)
                    eq[d] = target
                space.add(eq)
    if d in space.rows:
        return None  # inconsistent: a row reads 0 = 1
    if len(space.rows) < d:
        raise AxiomError("unity is not unique")  # cannot happen for a genuine unit
    e = [0] * d
    for p, row in space.rows.items():
        e[p] = _norm(row.get(d, 0))
    return tuple(e)


@dataclass(frozen=True)
class WAction:
    """A W-algebra: A is a unitary W-bimodule compatible with its product.

    ``left[w][a]`` is ``w_w . a_a`` and ``right[a][w]`` is ``a_a . w_w``.
    """

    W: FiniteAlgebra
    A: FiniteAlgebra
    left: tuple[tuple[Vec, ...], ...]
    right: tuple[tuple[Vec, ...], ...]
    name: str = ""
    unit_W: Vec = field(default=())

    def act_left(self, w: Vec, a: Vec) -> Vec:
        return bilinear(self.left, w, a, self.A.dim)

    def act_right(self, a: Vec, w: Vec) -> Vec:
        return bilinear(self.right, a, w, self.A.dim)

    def validate(self) -> None:
        validate_action(self)


def make_action(W: FiniteAlgebra, A: FiniteAlgebra, left, right, name: str = "", validate: bool = True) -> WAction:
    dw, da = W.dim, A.dim
    if len(left) != dw or any(len(r) != da for r in left):
        raise SchemaError(f"left action table must be {dw}x{da}")
    if len(right) != da or any(len(r) != dw for r in right):
        raise SchemaError(f"right action table must be {da}x{dw}")
    lt = tuple(tuple(_vec(left[w][a], da) for a in range(da)) for w in range(dw))
    rt = tuple(tuple(_vec(right[a][w], da) for w in range(dw)) for a in range(da))
    unit = find_unity(W)
    if unit is None:
        raise AxiomError("W must be unital")
    act = WAction(W, A, lt, rt, name, unit)
    if validate:
        validate_action(act)
    return act


def validate_action(act: WAction) -> None:
    """Check every W-algebra axiom on basis triples; raise AxiomError on failure."""
    W, A = act.W, act.A
    dw, da = W.dim, A.dim
    if act.unit_W == () or find_unity(W) is None:
        raise AxiomError("W must be unital")
    W.check_associative()
    A.check_associative()
    e = lambda i: unit_vec(da, i)
    f = lambda i: unit_vec(dw, i)
    one = act.unit_W
    for a in range(da):
        if act.act_left(one, e(a)) != e(a) or act.act_right(e(a), one) != e(a):
            raise AxiomError(f"1_W does not act as the identity on basis element {a}")
    for w, a1, a2 in itertools.product(range(dw), range(da), range(da)):
        if act.act_left(f(w), A.mult[a1][a2]) != A.mul(act.left[w][a1], e(a2)):
            raise AxiomError(f"w(a1 a2) = (w a1) a2 fails on (w={w}, a1={a1}, a2={a2})")
        if A.mul(e(a1), act.right[a2][w]) != act.act_right(A.mult[a1][a2], f(w)):
            raise AxiomError(f"(a1 a2) w = a1 (a2 w) fails on (a1={a1}, a2={a2}, w={w})")
        if A.mul(act.right[a1][w], e(a2)) != A.mul(e(a1), act.left[w][a2]):
            raise AxiomError(f"(a1 w) a2 = a1 (w a2) fails on (a1={a1}, w={w}, a2={a2})")
    for w1, w2, a in itertools.product(range(dw), range(dw), range(da)):
        if act.act_left(W.mult[w1][w2], e(a)) != act.act_left(f(w1), act.left[w2][a]):
            raise AxiomError(f"(w1 w2) a = w1 (w2 a) fails on (w1={w1}, w2={w2}, a={a})")
        if act.act_right(e(a), W.mult[w1][w2]) != act.act_right(act.right[a][w1], f(w2)):
            raise AxiomError(f"a (w1 w2) = (a w1) w2 fails on (a={a}, w1={w1}, w2={w2})")
        if act.act_left(f(w1), act.right[a][w2]) != act.act_right(act.left[w1][a], f(w2)):
            raise AxiomError(f"w1 (a w2) = (w1 a) w2 fails on (w1={w1}, a={a}, w2={w2})")


@dataclass(frozen=True)
class WSuperAlgebra:
    """W-algebra with a Z/2 grading of A given by a parity per basis element."""

    action: WAction
    parity: tuple[int, ...]

    @property
    def A(self) -> FiniteAlgebra:
        return self.action.A

    @property
    def W(self) -> FiniteAlgebra:
        return self.action.W

    def homogeneous_basis(self, p: int) -> list[int]:
        return [i for i, q in enumerate(self.parity) if q == p]

    def validate(self) -> None:
        act, par = self.action, self.parity
        if len(par) != act.A.dim or any(p not in (0, 1) for p in par):
            raise AxiomError("parity must assign 0 or 1 to every basis element of A")

        def check(vec, p, what):
            if any(c and par[k] != p for k, c in enumerate(vec)):
                raise AxiomError(f"grading violated by {what}")

        for i, j in itertools.product(range(act.A.dim), repeat=2):
            check(act.A.mult[i][j], (par[i] + par[j]) % 2, f"product of basis elements ({i}, {j})")
        for w, a in itertools.product(range(act.W.dim), range(act.A.dim)):
            check(act.left[w][a], par[a], f"left action ({w}, {a})")
            check(act.right[a][w], par[a], f"right action ({a}, {w})")


def make_superalgebra(action: WAction, parity: Sequence[int], validate: bool = True) -> WSuperAlgebra:
    sa = WSuperAlgebra(action, tuple(parity))
    if validate:
        sa.validate()
    return sa


# -- constructions ---------------------------------------------------------------


def field_algebra() -> FiniteAlgebra:
    return make_algebra(["1"], [[[1]]], "F")


def matrix_units(n: int) -> FiniteAlgebra:
    """M_n with basis e_ij in row-major order."""
    labels = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    d = n * n
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j == k:
            mult[i * n + j][k * n + l][i * n + l] = 1
    return make_algebra(labels, mult, f"M{n}", validate=False)


def subalgebra(alg: FiniteAlgebra, indices: Sequence[int], name: str = "") -> FiniteAlgebra:
    """Subalgebra spanned by a subset of basis elements closed under product."""
    pos = {g: i for i, g in enumerate(indices)}
    mult = []
    for g in indices:
        row = []
        for h in indices:
            v = alg.mult[g][h]
            if any(c and k not in pos for k, c in enumerate(v)):
                raise AxiomError(f"basis span not closed under product ({g}, {h})")
            row.append([v[k] for k in indices])
        mult.append(row)
    return make_algebra([alg.basis[i] for i in indices], mult, name or alg.name)


def ut(n: int) -> FiniteAlgebra:
    """Upper triangular n x n matrices, basis e_ij (i <= j) in row-major order."""
    full = matrix_units(n)
    idx = [i * n + j for i in range(n) for j in range(n) if i <= j]
    return subalgebra(full, idx, f"UT{n}")


def multiplication_action(A: FiniteAlgebra, Wsub: Sequence[Vec], W: FiniteAlgebra, name: str) -> WAction:
    """W acting on A by left and right multiplication through ``Wsub``.

    ``Wsub[w]`` is the image in A of the w-th basis element of W.
    """
    dw, da = W.dim, A.dim
    left = [[A.mul(Wsub[w], unit_vec(da, a)) for a in range(da)] for w in range(dw)]
    right = [[A.mul(unit_vec(da, a), Wsub[w]) for w in range(dw)] for a in range(da)]
    return make_action(W, A, left, right, name)


def trivial_action(A: FiniteAlgebra, name: str = "") -> WAction:
    """W = F acting by scalars: the ordinary PI setting."""
    F = field_algebra()
    da = A.dim
    left = [[unit_vec(da, a) for a in range(da)]]
    right = [[unit_vec(da, a)] for a in range(da)]
    return make_action(F, A, left, right, name or f"{A.name}_ord")


def ordinary(act: WAction) -> WAction:
    """The same algebra A seen with W = F."""
    return trivial_action(act.A, f"{act.name}[W=F]")


def ut2_self() -> WAction:
    A = ut(2)
    return multiplication_action(A, [unit_vec(3, i) for i in range(3)], A, "ut2_self")


def ut2_D() -> WAction:
    A = ut(2)
    D = subalgebra(A, [0, 2], "D")
    return multiplication_action(A, [unit_vec(3, 0), unit_vec(3, 2)], D, "ut2_D")


def ut2_F() -> WAction:
    A = ut(2)
    F = field_algebra()
    return multiplication_action(A, [(1, 0, 1)], F, "ut2_F")


def matrix_self(n: int) -> WAction:
    A = matrix_units(n)
    return multiplication_action(A, [unit_vec(n * n, i) for i in range(n * n)], A, f"matrix({n})")


def diagonal(n: int) -> FiniteAlgebra:
    mult = [[[1 if (i == j == k) else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    return make_algebra([f"d{i + 1}" for i in range(n)], mult, f"D{n}")


def diagonal_trivial(n: int) -> WAction:
    return trivial_action(diagonal(n), f"diagonal({n})")


def _grassmann_basis(m: int) -> list[tuple[int, ...]]:
    return [s for r in range(m + 1) for s in itertools.combinations(range(m), r)]


def grassmann_algebra(m: int) -> tuple[FiniteAlgebra, tuple[int, ...]]:
    """Exterior algebra on m generators; basis = increasing words, by length."""
    if m < 1:
        raise ValueError("m must be positive")
    words = _grassmann_basis(m)
    index = {w: i for i, w in enumerate(words)}
    d = len(words)
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for u in words:
        for v in words:
            if set(u) & set(v):
                continue
            seq = u + v
            inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
            mult[index[u]][index[v]][index[tuple(sorted(seq))]] = -1 if inversions % 2 else 1
    labels = ["1" if not w else "e" + "".join(str(i + 1) for i in w) for w in words]
    parity = tuple(len(w) % 2 for w in words)
    return make_algebra(labels, mult, f"E{m}", validate=False), parity


def grassmann_truncated(m: int) -> WSuperAlgebra:
    E, parity = grassmann_algebra(m)
    act = trivial_action(E, f"grassmann({m})")
    return make_superalgebra(act, parity)


def ut2_graded_D() -> WSuperAlgebra:
    """UT2 with A0 = span(e11, e22), A1 = span(e12) and W = D."""
    return make_superalgebra(ut2_D(), (0, 1, 0))


def semidirect(act: WAction) -> WAction:
    """A x| W on A (+) W, with W acting through its own component."""
    A, W = act.A, act.W
    da, dw = A.dim, W.dim
    d = da + dw

    def split(v):
        return v[:da], v[da:]

    def mul(u, v):
        a1, w1 = split(u)
        a2, w2 = split(v)
        a = add(add(A.mul(a1, a2), act.act_left(w1, a2)), act.act_right(a1, w2))
        return a + W.mul(w1, w2)

    basis = [f"({x},0)" for x in A.basis] + [f"(0,{x})" for x in W.basis]
    mult = [[mul(unit_vec(d, i), unit_vec(d, j)) for j in range(d)] for i in range(d)]
    B = make_algebra(basis, mult, f"{A.name}x|{W.name}")
    embed_w = [zero(da) + unit_vec(dw, w) for w in range(dw)]
    return multiplication_action(B, embed_w, W, f"semidirect({act.name})")


def pi_map(act: WAction) -> list[Vec]:
    """Images w_i . 1_A of the W-basis; checked multiplicative and compatible."""
    A, W = act.A, act.W
    one = find_unity(A)
    if one is None:
        raise AxiomError("pi map needs an algebra A with unity")
    images = [act.act_left(unit_vec(W.dim, w), one) for w in range(W.dim)]
    for w in range(W.dim):
        if act.act_right(one, unit_vec(W.dim, w)) != images[w]:
            raise AxiomError(f"w.1_A != 1_A.w for basis element {w}")

    def pi(wvec):
        acc = zero(A.dim)
        for w, c in enumerate(wvec):
            if c:
                acc = add(acc, scale(c, images[w]))
        return acc

    for w1, w2 in itertools.product(range(W.dim), repeat=2):
        if pi(W.mult[w1][w2]) != A.mul(images[w1], images[w2]):
            raise AxiomError(f"pi is not multiplicative on ({w1}, {w2})")
    for w, a in itertools.product(range(W.dim), range(A.dim)):
        ea = unit_vec(A.dim, a)
        if act.left[w][a] != A.mul(images[w], ea) or act.right[a][w] != A.mul(ea, images[w]):
            raise AxiomError(f"action of {w} on {a} is not multiplication by pi(w)")
    return images


def is_injective(images: Sequence[Vec]) -> bool:
    space = RowSpace()
    for v in images:
        space.add({k: c for k, c in enumerate(v) if c})
    return space.rank == len(images)


# -- built-in registry and documents ------------------------------------------------

_PARAM_RE = re.compile(r"^([a-z_]+?)_?\(?(\d+)\)?$")


def builtin(name: str) -> WAction:
    """Look up a built-in W-algebra.

    Names: ``ut2_self``, ``ut2_D``, ``ut2_F``, ``matrix(n)``,
    ``grassmann(m)`` (W = F), ``diagonal(n)`` (W = F).  The parameter may
    also be written without parentheses, e.g. ``matrix2``.
    """
    fixed = {"ut2_self": ut2_self, "ut2": ut2_self, "ut2_D": ut2_D, "ut2_F": ut2_F}
    if name in fixed:
        return fixed[name]()
    m = _PARAM_RE.match(name)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "matrix":
            return matrix_self(k)
        if kind == "grassmann":
            return grassmann_truncated(k).action
        if kind == "diagonal":
            return diagonal_trivial(k)
    raise KeyError(f"unknown built-in algebra {name!r}")


def builtin_superalgebra(name: str) -> WSuperAlgebra:
    m = _PARAM_RE.match(name)
    if m and m.group(1) == "grassmann":
        return grassmann_truncated(int(m.group(2)))
    if name == "ut2_graded_D":
        return ut2_graded_D()
    raise KeyError(f"unknown built-in superalgebra {name!r}")


BUILTIN_NAMES = ("ut2_self", "ut2_D", "ut2_F", "matrix(n)", "grassmann(m)", "diagonal(n)")


def _algebra_doc(alg: FiniteAlgebra) -> dict:
    return {
        "dim": alg.dim,
        "basis": list(alg.basis),
        "mult": [[[format_rational(c) for c in v] for v in row] for row in alg.mult],
    }


def dump_algebra(act: WAction | WSuperAlgebra) -> dict:
    parity = None
    if isinstance(act, WSuperAlgebra):
        parity = list(act.parity)
        act = act.action
    doc: dict[str, Any] = {
        "name": act.name,
        "W": _algebra_doc(act.W),
        "A": _algebra_doc(act.A),
        "left": [[[format_rational(c) for c in v] for v in row] for row in act.left],
        "right": [[[format_rational(c) for c in v] for v in row] for row in act.right],
    }
    if parity is not None:
        doc["parity"] = parity
    return doc


def _read_table(raw, shape: tuple[int, int, int], what: str):
    n1, n2, n3 = shape
    if not isinstance(raw, list) or len(raw) != n1:
        raise SchemaError(f"{what}: expected {n1} rows")
    out = []
    for row in raw:
        if not isinstance(row, list) or len(row) != n2:
            raise SchemaError(f"{what}: expected rows of length {n2}")
        out_row = []
        for v in row:
            if not isinstance(v, list) or len(v) != n3:
                raise SchemaError(f"{what}: expected vectors of length {n3}")
            out_row.append([parse_rational(c) for c in v])
        out.append(out_row)
    return out


def _read_algebra(raw, what: str, validate: bool) -> FiniteAlgebra:
    if not isinstance(raw, Mapping):
        raise SchemaError(f"{what} must be an object")
    for key in ("dim", "basis", "mult"):
        if key not in raw:
            raise SchemaError(f"{what} is missing {key!r}")
    d = raw["dim"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise SchemaError(f"{what}.dim must be a positive integer")
    basis = raw["basis"]
    if not isinstance(basis, list) or len(basis) != d or not all(isinstance(b, str) for b in basis):
        raise SchemaError(f"{what}.basis must list {d} strings")
    mult = _read_table(raw["mult"], (d, d, d), f"{what}.mult")
    return make_algebra(basis, mult, what, validate=validate)


def load_algebra(doc: Mapping | str, validate: bool = True) -> WAction | WSuperAlgebra:
    """Build a W-algebra from a document (a mapping or JSON text).

    Returns a :class:`WSuperAlgebra` when the document carries ``parity``.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, Mapping):
        raise SchemaError("document must be a JSON object")
    for key in ("name", "W", "A", "left", "right"):
        if key not in doc:
            raise SchemaError(f"document is missing {key!r}")
    if not isinstance(doc["name"], str):
        raise SchemaError("name must be a string")
    W = _read_algebra(doc["W"], "W", validate)
    A = _read_algebra(doc["A"], "A", validate)
    left = _read_table(doc["left"], (W.dim, A.dim, A.dim), "left")
    right = _read_table(doc["right"], (A.dim, W.dim, A.dim), "right")
    act = make_action(W, A, left, right, doc["name"], validate=validate)
    if "parity" in doc and doc["parity"] is not None:
        parity = doc["parity"]
        if not isinstance(parity, list) or len(parity) != A.dim:
            raise SchemaError("parity must list 0/1 for every basis element of A")
        return make_superalgebra(act, parity, validate=validate)
    return act


def same_structure(a: WAction, b: WAction) -> bool:
    return (
        a.W.mult == b.W.mult
        and a.A.mult == b.A.mult
        and a.left == b.left
        and a.right == b.right
    )
