"""Generalized polynomials: elements of the free W-algebra.

A monomial ``w_{i0} x_{j1} w_{i1} ... x_{jn} w_{in}`` is stored as the pair
of words ``ws = (i0, ..., in)`` (indices into the basis of W) and
``xs = (xj1, ..., xjn)`` (variable names such as ``"x1"``, ``"y2"``,
``"z1"``).  Coefficients are exact rationals.

Textual syntax, used by the command line::

    3/2 * w[0] x1 w[2] x2 w[0] - x2 x1

A W-slot that is not written is ``1_W``; consecutive ``w[i]`` tokens are
multiplied in W.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import FiniteAlgebra, WAction, find_unity, format_rational, unit_vec
from .linalg import _norm
from .snrep import sign

Var = str

_VAR_RE = re.compile(r"^([a-z])(\d+)$")


def var_key(v: Var) -> tuple[str, int]:
    m = _VAR_RE.match(v)
    if not m:
        raise ValueError(f"bad variable name {v!r}")
    return m.group(1), int(m.group(2))


def parity(v: Var) -> int:
    """Variables named z* are odd; everything else is even."""
    return 1 if var_key(v)[0] == "z" else 0


@dataclass(frozen=True)
class GenMonomial:
    ws: tuple[int, ...]
    xs: tuple[Var, ...]

    def __post_init__(self):
        if len(self.ws) != len(self.xs) + 1:
            raise ValueError("a monomial has one more W-slot than variables")

    @property
    def degree(self) -> int:
        return len(self.xs)

    def sort_key(self):
        return (tuple(var_key(v) for v in self.xs), self.ws)

    def multidegree(self) -> dict[Var, int]:
        out: dict[Var, int] = {}
        for v in self.xs:
            out[v] = out.get(v, 0) + 1
        return out


class GenPoly:
    """Finite combination of generalized monomials over a fixed W.

    Monomials without variables are only allowed when ``augmented`` is set
    (the free unital W-algebra).
    """

    def __init__(self, W: FiniteAlgebra, terms: Mapping[GenMonomial, object] | None = None, augmented: bool = False):
        self.W = W
        self.augmented = augmented
        acc: dict[GenMonomial, object] = {}
        for m, c in (terms or {}).items():
            if m.degree == 0 and not augmented:
                raise ValueError("generalized polynomials have no constant terms")
            if any(not 0 <= i < W.dim for i in m.ws):
                raise ValueError(f"W index out of range in {m}")
            for v in m.xs:
                var_key(v)
            acc[m] = acc.get(m, 0) + c
        self.terms = {m: _norm(Fraction(c)) for m, c in acc.items() if c}

    # construction helpers
    def _new(self, terms, augmented=None):
        return type(self)(self.W, terms, self.augmented if augmented is None else augmented)

    @classmethod
    def monomial(cls, W: FiniteAlgebra, ws: Sequence[int], xs: Sequence[Var], c=1):
        return cls(W, {GenMonomial(tuple(ws), tuple(xs)): c})

    @classmethod
    def from_items(cls, W: FiniteAlgebra, items: Sequence, c=1, augmented: bool = False):
        """Expand a word mixing W-vectors and variable names.

        Missing W-slots are filled with 1_W; adjacent W-vectors multiply.
        """
        unit = find_unity(W)
        slots: list = []
        xs: list[Var] = []
        expect_w = True
        for item in items:
            if isinstance(item, str):
                if expect_w:
                    slots.append(unit)
                xs.append(item)
                expect_w = True
            else:
                vec = tuple(item)
                if expect_w:
                    slots.append(vec)
                    expect_w = False
                else:
                    slots[-1] = W.mul(slots[-1], vec)
        if expect_w:
            slots.append(unit)
        terms: dict[GenMonomial, object] = {}
        choices = [[(i, a) for i, a in enumerate(v) if a] for v in slots]
        for combo in itertools.product(*choices):
            coeff = c
            for _, a in combo:
                coeff = coeff * a
            m = GenMonomial(tuple(i for i, _ in combo), tuple(xs))
            terms[m] = terms.get(m, 0) + coeff
        return cls(W, terms, augmented)

    @classmethod
    def ordinary(cls, W: FiniteAlgebra, words: Iterable[tuple[object, Sequence[Var]]]):
        """Ordinary polynomial sum c * x_{i1}...x_{in} with 1_W decorations."""
        out = cls(W)
        for c, xs in words:
            out = out + cls.from_items(W, list(xs), c)
        return out

    @classmethod
    def unit(cls, W: FiniteAlgebra):
        """1_W as an element of the augmented free algebra."""
        return cls.from_items(W, [find_unity(W)], augmented=True)

    # arithmetic
    def _check(self, other: GenPoly):
        if other.W.mult != self.W.mult:
            raise ValueError("generalized polynomials over different W")

    def __add__(self, other: GenPoly) -> GenPoly:
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return self._new(terms, self.augmented or other.augmented)

    def __neg__(self) -> GenPoly:
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: GenPoly) -> GenPoly:
        return self + (-other)

    def scale(self, c) -> GenPoly:
        return self._new({m: c * v for m, v in self.terms.items()})

    def __rmul__(self, c) -> GenPoly:
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, GenPoly):
            return multiply(self, other)
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, GenPoly) and self.W.mult == other.W.mult and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({format_genpoly(self)!r})"

    def __str__(self):
        return format_genpoly(self)

    # inspection
    def variables(self) -> list[Var]:
        return sorted({v for m in self.terms for v in m.xs}, key=var_key)

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def is_multilinear(self) -> bool:
        vs = self.variables()
        return all(sorted(m.xs, key=var_key) == vs for m in self.terms)

    def multidegree(self) -> dict[Var, int]:
        """Common multidegree; raises if f is not multihomogeneous."""
        degs = {tuple(sorted(m.multidegree().items())) for m in self.terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not multihomogeneous")
        return dict(degs.pop()) if degs else {}

    def rename(self, mapping: Mapping[Var, Var]) -> GenPoly:
        return self._new({GenMonomial(m.ws, tuple(mapping.get(v, v) for v in m.xs)): c for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[GenMonomial, object]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())


def multiply(f: GenPoly, g: GenPoly) -> GenPoly:
    """Product in W<X>: the touching W-slots contract through W's product."""
    f._check(g)
    W = f.W
    terms: dict[GenMonomial, object] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            vec = W.mult[m1.ws[-1]][m2.ws[0]]
            for k, a in enumerate(vec):
                if a:
                    m = GenMonomial(m1.ws[:-1] + (k,) + m2.ws[1:], m1.xs + m2.xs)
                    terms[m] = terms.get(m, 0) + c1 * c2 * a
    return type(f)(W, terms, f.augmented and g.augmented)


def multilinear_basis(n: int, d: int) -> list[GenMonomial]:
    """Basis of gP_n: lexicographic on (variable word, W-index word).

    Position of ``(perm, ws)`` is ``perm_rank * d**(n+1) + ws_rank`` where
    both ranks are lexicographic.
    """
    if n < 1:
        raise ValueError("n must be positive")
    names = [f"x{i + 1}" for i in range(n)]
    out = []
    for perm in itertools.permutations(range(n)):
        xs = tuple(names[i] for i in perm)
        for ws in itertools.product(range(d), repeat=n + 1):
            out.append(GenMonomial(ws, xs))
    return out


def multilinear_dimension(n: int, d: int) -> int:
    return d ** (n + 1) * factorial(n)


def multilinearize(f: GenPoly) -> GenPoly:
    """Full linearization of a multihomogeneous polynomial.

    The variables of f, in sorted order, get consecutive blocks of fresh
    variables ``x1, x2, ...``; each monomial becomes the sum over all ways of
    distributing the block of a variable over its occurrences.
    """
    degs = f.multidegree()
    blocks: dict[Var, list[Var]] = {}
    k = 1
    for v in sorted(degs, key=var_key):
        blocks[v] = [f"x{k + i}" for i in range(degs[v])]
        k += degs[v]
    terms: dict[GenMonomial, object] = {}
    for m, c in f.terms.items():
        positions = {v: [i for i, x in enumerate(m.xs) if x == v] for v in blocks}
        per_var = [list(itertools.permutations(blocks[v])) for v in blocks]
        for choice in itertools.product(*per_var):
            xs = list(m.xs)
            for v, labels in zip(blocks, choice):
                for pos, lab in zip(positions[v], labels):
                    xs[pos] = lab
            mono = GenMonomial(m.ws, tuple(xs))
            terms[mono] = terms.get(mono, 0) + c
    return type(f)(f.W, terms, f.augmented)


# -- Capelli polynomials -------------------------------------------------------------


def capelli_items(m: int, ys: Sequence | None = None) -> list[tuple[int, list]]:
    """(sign, word) pairs of Cap_m with the y-slots given by ``ys``.

    ``ys[i]`` is a variable name or a W-vector; default is ``y1..y_{m+1}``.
    """
    if ys is None:
        ys = [f"y{i + 1}" for i in range(m + 1)]
    out = []
    for perm in itertools.permutations(range(m)):
        word: list = [ys[0]]
        for i in range(m):
            word.append(f"x{perm[i] + 1}")
            word.append(ys[i + 1])
        out.append((sign(perm), word))
    return out


def capelli(m: int, W: FiniteAlgebra | None = None) -> GenPoly:
    """Cap_m(x_1..x_m; y_1..y_{m+1}) with every W-slot equal to 1_W."""
    from .algebra import field_algebra

    if m < 1:
        raise ValueError("m must be positive")
    W = W or field_algebra()
    out = GenPoly(W)
    for s, word in capelli_items(m):
        out = out + GenPoly.from_items(W, word, s)
    return out


def capelli_patterns(m: int, d: int) -> Iterator[tuple[int | None, ...]]:
    """Substitution patterns: per y-slot, None (free) or a W-basis index."""
    return itertools.product([None, *range(d)], repeat=m + 1)


def capelli_substituted(m: int, W: FiniteAlgebra, pattern: Sequence[int | None]) -> GenPoly:
    ys = [f"y{i + 1}" if p is None else unit_vec(W.dim, p) for i, p in enumerate(pattern)]
    out = GenPoly(W)
    for s, word in capelli_items(m, ys):
        out = out + GenPoly.from_items(W, word, s)
    return out


def generalized_capelli_set(m: int, W: FiniteAlgebra) -> Iterator[GenPoly]:
    """Every specialization of the y's of Cap_m to W-basis elements or left free.

    Substituting basis elements suffices: Cap_m is linear in each y_i.
    """
    for pattern in capelli_patterns(m, W.dim):
        yield capelli_substituted(m, W, pattern)


# -- graded polynomials ----------------------------------------------------------------


class GradedGenPoly(GenPoly):
    """Generalized polynomial in even variables y* and odd variables z*."""

    def __init__(self, W, terms=None, augmented: bool = False):
        super().__init__(W, terms, augmented)
        for v in self.variables():
            if var_key(v)[0] not in ("y", "z"):
                raise ValueError(f"graded polynomials use y/z variables, got {v!r}")

    def even_variables(self) -> list[Var]:
        return [v for v in self.variables() if parity(v) == 0]

    def odd_variables(self) -> list[Var]:
        return [v for v in self.variables() if parity(v) == 1]


def _z_sign(xs: Sequence[Var]) -> int:
    zs = [var_key(v)[1] for v in xs if parity(v) == 1]
    order = sorted(zs)
    perm = tuple(order.index(z) for z in zs)
    return sign(perm)


def tilde(f: GenPoly) -> GradedGenPoly:
    """Multiply each monomial by the sign of the order of its odd variables."""
    if not f.is_multilinear():
        raise ValueError("tilde is defined on multilinear graded polynomials")
    return GradedGenPoly(f.W, {m: _z_sign(m.xs) * c for m, c in f.terms.items()}, f.augmented)


# -- text syntax ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_COEF_RE = re.compile(r"^\s*(\d+(?:/\d+)?)\s*\*?\s*")
_W_RE = re.compile(r"^w\[(\d+)\]$")


def parse_genpoly(text: str, W: FiniteAlgebra, graded: bool = False) -> GenPoly:
    """Parse ``"3/2 * w[0] x1 w[2] x2 w[0] - x2 x1"``."""
    cls = GradedGenPoly if graded else GenPoly
    out = cls(W)
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        sgn = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        coef: object = 1
        cm = _COEF_RE.match(body)
        if cm:
            coef = _norm(Fraction(cm.group(1)))
            body = body[cm.end() :]
        items: list = []
        for tok in body.split():
            wm = _W_RE.match(tok)
            if wm:
                i = int(wm.group(1))
                if i >= W.dim:
                    raise ValueError(f"w[{i}] out of range for dim W = {W.dim}")
                items.append(unit_vec(W.dim, i))
            else:
                var_key(tok)
                items.append(tok)
        if not any(isinstance(it, str) for it in items):
            raise ValueError(f"term {body!r} has no variables")
        out = out + cls.from_items(W, items, sgn * coef)
    return out


def format_genpoly(f: GenPoly) -> str:
    if not f.terms:
        return "0"
    parts = []
    for m, c in f.sorted_terms():
        tokens = [f"w[{m.ws[0]}]"]
        for v, w in zip(m.xs, m.ws[1:]):
            tokens += [v, f"w[{w}]"]
        body = " ".join(tokens)
        q = Fraction(c)
        mag = format_rational(abs(q))
        s = "-" if q < 0 else "+"
        parts.append((s, body if mag == "1" else f"{mag} * {body}"))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


# -- evaluation ----------------------------------------------------------------------------


class Evaluator:
    """Memoized evaluation of monomials of W<X> on basis elements of A."""

    def __init__(self, act: WAction):
        self.act = act
        self.da = act.A.dim
        self._cache: dict[tuple, tuple] = {}

    def word(self, ws: Sequence[int], args: Sequence[int]) -> tuple:
        """Value of ``w_{ws0} a_{args0} w_{ws1} ... a_{args[-1]} w_{ws[-1]}``."""
        key = [ws[0]]
        for a, w in zip(args, ws[1:]):
            key += [a, w]
        return self._value(tuple(key))

    def _value(self, key: tuple) -> tuple:
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        act = self.act
        if len(key) == 2:
            val = act.left[key[0]][key[1]]
        else:
            prev = self._value(key[:-1])
            last = key[-1]
            # odd length keys end with a W index, even with an A index
            table = act.right if len(key) % 2 else act.A.mult
            acc = [0] * self.da
            for j, c in enumerate(prev):
                if c:
                    vec = table[j][last]
                    for k, v in enumerate(vec):
                        if v:
                            acc[k] += c * v
            val = tuple(_norm(x) for x in acc)
        self._cache[key] = val
        return val

    def evaluate(self, f: GenPoly, assignment: Mapping[Var, int]) -> tuple:
        """f at basis elements: ``assignment[v]`` is a basis index of A."""
        acc = [0] * self.da
        for m, c in f.terms.items():
            if m.degree == 0:
                raise ValueError("constant monomials need a unital evaluation")
            val = self.word(m.ws, [assignment[v] for v in m.xs])
            for k, v in enumerate(val):
                if v:
                    acc[k] += c * v
        return tuple(_norm(x) for x in acc)


def basis_assignments(variables: Sequence[Var], choices: Mapping[Var, Sequence[int]] | int) -> Iterator[dict]:
    if isinstance(choices, int):
        ranges = [range(choices)] * len(variables)
    else:
        ranges = [choices[v] for v in variables]
    for combo in itertools.product(*ranges):
        yield dict(zip(variables, combo))


def first_nonvanishing(f: GenPoly, act: WAction, choices=None) -> dict | None:
    """A basis assignment where multilinear f is nonzero, or None."""
    ev = Evaluator(act)
    vs = f.variables()
    for assignment in basis_assignments(vs, choices if choices is not None else act.A.dim):
        if any(ev.evaluate(f, assignment)):
            return assignment
    return None
