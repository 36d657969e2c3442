"""Generalized codimensions, cocharacters and Hilbert series of W-algebras.

Everything is computed from the evaluation matrix of the multilinear space
gP_n: one row per monomial of :func:`gpi.gpoly.multilinear_basis`, one
column per (tuple of basis indices of A, output coordinate).  The rank of
that matrix is gc_n and the identities of degree n form its left kernel K.

S_n acts on rows by renaming variables, ``x_i -> x_{sigma(i)}``, and on
columns by ``(sigma u)[j, c] = u[j o sigma, c]``; evaluation intertwines the
two actions.  Character values on the quotient gP_n / K are computed twice:

* kernel route: ``trace(sigma | gP_n) - trace(sigma | K)`` in the nullspace
  basis attached to the greedy choice of independent rows;
* image route: trace of the column action on the row space, read off the
  reduced echelon basis at its pivots.

The two must agree; any disagreement, non-integral multiplicity or broken
dimension identity raises :class:`VerificationError`.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from .algebra import WAction, find_unity, ordinary, semidirect
from .gpoly import Evaluator, GenPoly, basis_assignments, first_nonvanishing, multilinearize, var_key
from .linalg import RowSpace, flint_rank, flint_rref, from_fmpq, to_fmpq_mat
from .partitions import Partition, compositions, enumerate_partitions, sn_dimension, weyl_dimension
from .snrep import CharacterVector, MultiplicityError, class_representative, compose, decompose, inverse, sign
from .symfunc import ExactPoly, SchurExpansion, TruncatedSeries, expand_closed_form, schur_expand, skew_schur_at_ones

try:  # optional exact backend for large matrices
    import flint  # noqa: F401

    HAVE_FLINT = True
except ImportError:  # pragma: no cover - exercised only without python-flint
    HAVE_FLINT = False


class VerificationError(RuntimeError):
    """An internal cross-check that a theorem guarantees has failed."""


def worker_count() -> int:
    """Worker bound from GPI_THREADS; the engine itself runs sequentially."""
    raw = os.environ.get("GPI_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"GPI_THREADS must be an integer, got {raw!r}") from None


def _digits(x: int, base: int, length: int) -> tuple[int, ...]:
    out = [0] * length
    for i in range(length - 1, -1, -1):
        x, out[i] = divmod(x, base)
    return tuple(out)


def _undigits(ds: Sequence[int], base: int) -> int:
    x = 0
    for v in ds:
        x = x * base + v
    return x


# -- models ------------------------------------------------------------------------------


class Model:
    """Row/column description of the evaluation matrices of one W-algebra."""

    name: str
    d: int  # dim W
    backend: str = "auto"

    def __init__(self):
        self._images: dict[int, ImageData] = {}
        self._multidegree: dict[tuple, int] = {}

    def monomial_count(self, n: int) -> int:
        return self.d ** (n + 1) * factorial(n)

    def ncols(self, n: int) -> int:
        raise NotImplementedError

    def row(self, n: int, m: int) -> dict:
        raise NotImplementedError

    def col_perm(self, n: int, sigma: Sequence[int]) -> list[int]:
        """``cp`` with ``(sigma u)[c] = u[cp[c]]``."""
        raise NotImplementedError

    def perms(self, n: int) -> list[tuple[int, ...]]:
        return _perms(n)

    def monomial_action(self, n: int, sigma: Sequence[int], m: int) -> int:
        """Index of sigma applied to monomial ``m`` (variables renamed)."""
        D = self.d ** (n + 1)
        r, wsr = divmod(m, D)
        return _perm_index(n)[compose(tuple(sigma), _perms(n)[r])] * D + wsr

    def image(self, n: int) -> ImageData:
        if n < 1:
            raise ValueError("n must be positive")
        if n not in self._images:
            self._images[n] = ImageData.build(self, n)
        return self._images[n]


_PERM_CACHE: dict[int, list] = {}
_PERM_INDEX: dict[int, dict] = {}


def _perms(n: int) -> list[tuple[int, ...]]:
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = list(itertools.permutations(range(n)))
    return _PERM_CACHE[n]


def _perm_index(n: int) -> dict:
    if n not in _PERM_INDEX:
        _PERM_INDEX[n] = {p: i for i, p in enumerate(_perms(n))}
    return _PERM_INDEX[n]


class AlgebraModel(Model):
    """Evaluation matrices of a finite-dimensional W-algebra."""

    def __init__(self, act: WAction, backend: str = "auto"):
        super().__init__()
        self.act = act
        self.name = act.name or "algebra"
        self.d = act.W.dim
        self.da = act.A.dim
        self.backend = backend
        self._evaluator = Evaluator(act)
        self._values: dict[int, list] = {}
        self._jmaps: dict[int, list] = {}

    def ncols(self, n: int) -> int:
        return self.da ** n * self.da

    def values(self, n: int) -> list[list[tuple]]:
        """``values[ws_rank][t_rank]``: monomial word with arguments in order."""
        if n not in self._values:
            ev = self._evaluator
            table = []
            args = list(itertools.product(range(self.da), repeat=n))
            for ws in itertools.product(range(self.d), repeat=n + 1):
                table.append([ev.word(ws, t) for t in args])
            self._values[n] = table
        return self._values[n]

    def jmaps(self, n: int) -> list[list[int]]:
        """For permutation rank r: tuple rank j -> rank of (j[perm[0]], ...)."""
        if n not in self._jmaps:
            tuples = list(itertools.product(range(self.da), repeat=n))
            self._jmaps[n] = [
                [_undigits([j[p[i]] for i in range(n)], self.da) for j in tuples] for p in _perms(n)
            ]
        return self._jmaps[n]

    def row(self, n: int, m: int) -> dict:
        D = self.d ** (n + 1)
        r, wsr = divmod(m, D)
        vals = self.values(n)[wsr]
        jmap = self.jmaps(n)[r]
        da = self.da
        out = {}
        for jr, tr in enumerate(jmap):
            for c, v in enumerate(vals[tr]):
                if v:
                    out[jr * da + c] = v
        return out

    def col_perm(self, n: int, sigma: Sequence[int]) -> list[int]:
        da = self.da
        cp = []
        for jr in range(da ** n):
            j = _digits(jr, da, n)
            base = _undigits([j[sigma[i]] for i in range(n)], da) * da
            cp.extend(base + c for c in range(da))
        return cp


class FreeModel(Model):
    """The free W-algebra: no identities, gP_n itself is the quotient."""

    def __init__(self, d: int):
        super().__init__()
        if d < 1:
            raise ValueError("dim W must be positive")
        self.d = d
        self.name = f"free({d})"
        self.backend = "python"

    def ncols(self, n: int) -> int:
        return self.monomial_count(n)

    def row(self, n: int, m: int) -> dict:
        return {m: 1}

    def col_perm(self, n: int, sigma: Sequence[int]) -> list[int]:
        inv = inverse(tuple(sigma))
        return [self.monomial_action(n, inv, m) for m in range(self.monomial_count(n))]


def as_model(obj) -> Model:
    if isinstance(obj, Model):
        return obj
    if isinstance(obj, WAction):
        cache = _MODEL_CACHE.get(id(obj))
        if cache is None or cache[0] is not obj:
            cache = (obj, AlgebraModel(obj))
            _MODEL_CACHE[id(obj)] = cache
        return cache[1]
    action = getattr(obj, "action", None)
    if isinstance(action, WAction):
        return as_model(action)
    raise TypeError(f"cannot build an evaluation model from {type(obj).__name__}")


_MODEL_CACHE: dict[int, tuple] = {}


# -- image data ---------------------------------------------------------------------------

_FLINT_THRESHOLD = 128
_CHUNK = 512


@dataclass
class ImageData:
    """Row space of the evaluation matrix plus the greedy independent rows."""

    model: Model
    n: int
    N: int
    ncols: int
    independent: list[int]
    backend: str
    _space: RowSpace | None = None
    _flint: tuple | None = None  # (rref matrix, pivots, independent rows as fmpq_mat, inverse)
    _aug: RowSpace | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.independent)

    @cached_property
    def independent_set(self) -> frozenset:
        return frozenset(self.independent)

    @staticmethod
    def build(model: Model, n: int) -> ImageData:
        N, ncols = model.monomial_count(n), model.ncols(n)
        backend = model.backend
        if backend == "auto":
            backend = "flint" if HAVE_FLINT and ncols >= _FLINT_THRESHOLD else "python"
        if backend == "flint" and not HAVE_FLINT:
            raise RuntimeError("python-flint is not installed")
        if backend == "python":
            space = RowSpace()
            independent = []
            for m in range(N):
                if space.add(model.row(n, m)):
                    independent.append(m)
                    if space.rank == ncols:
                        break
            return ImageData(model, n, N, ncols, independent, "python", _space=space)
        if backend != "flint":
            raise ValueError(f"unknown backend {backend!r}")
        independent: list[int] = []
        rows: list[dict] = []
        for start in range(0, N, _CHUNK):
            chunk = [model.row(n, m) for m in range(start, min(N, start + _CHUNK))]
            stacked = rows + chunk
            # pivot columns of the transpose are the greedy independent rows
            t = _transpose(stacked, ncols)
            _, _, piv = flint_rref(t, len(stacked))
            for i in piv:
                if i >= len(rows):
                    independent.append(start + i - len(rows))
            rows = rows + [chunk[i - len(rows)] for i in piv if i >= len(rows)]
            if len(rows) == ncols:
                break
        rref, rk, pivots = flint_rref(rows, ncols)
        assert rk == len(rows)
        mb = to_fmpq_mat(rows, ncols)
        sq = to_fmpq_mat([{k: r[p] for k, p in enumerate(pivots) if p in r} for r in rows], len(pivots))
        inv = sq.inv() if rows else sq
        return ImageData(model, n, N, ncols, independent, "flint", _flint=(rref, pivots, mb, inv))

    # image route
    def image_trace(self, cp: Sequence[int]) -> Fraction:
        """Trace on the row space of ``(sigma u)[c] = u[cp[c]]``."""
        if self._space is not None:
            return sum((row.get(cp[p], 0) for p, row in self._space.rows.items()), Fraction(0))
        rref, pivots, _, _ = self._flint
        total = Fraction(0)
        for i, p in enumerate(pivots):
            x = rref[i, cp[p]]
            if x != 0:
                total += from_fmpq(x)
        return total

    def basis_rows(self) -> list[dict]:
        if self._space is not None:
            return self._space.basis()
        rref, pivots, _, _ = self._flint
        out = []
        for i in range(len(pivots)):
            row = {}
            for c in range(self.ncols):
                x = rref[i, c]
                if x != 0:
                    row[c] = from_fmpq(x)
            out.append(row)
        return out

    # kernel route
    def coordinates(self, ms: Sequence[int]) -> list[dict[int, object]]:
        """Coordinates of rows ``ms`` in terms of the independent rows."""
        model, n = self.model, self.n
        if self._space is not None:
            if self._aug is None:
                aug = RowSpace()
                for k, b in enumerate(self.independent):
                    vec = dict(model.row(n, b))
                    vec[self.ncols + k] = 1
                    aug.add(vec)
                self._aug = aug
            out = []
            for m in ms:
                red = self._aug.reduce(model.row(n, m))
                if any(c < self.ncols for c in red):
                    raise VerificationError("row outside the span of the independent rows")
                out.append({self.independent[c - self.ncols]: -v for c, v in red.items()})
            return out
        if not ms:
            return []
        _, pivots, _, inv = self._flint
        rows = [model.row(n, m) for m in ms]
        sub = to_fmpq_mat([{k: r[p] for k, p in enumerate(pivots) if p in r} for r in rows], len(pivots))
        coords = sub * inv
        out = []
        for i in range(len(ms)):
            out.append({b: from_fmpq(coords[i, k]) for k, b in enumerate(self.independent) if coords[i, k] != 0})
        return out

    def kernel_trace(self, sigma: Sequence[int]) -> Fraction:
        """Trace of sigma on K in the nullspace basis ``k_f = e_f - sum c_{f,b} e_b``."""
        n = self.n
        if tuple(sigma) == tuple(range(n)):
            return Fraction(self.N - self.rank)
        # k_f[sigma^-1 f] is nonzero only when sigma^-1 f is independent
        pairs = []
        for b in self.independent:
            f = self.model.monomial_action(n, sigma, b)
            if f not in self.independent_set:
                pairs.append((b, f))
        coords = self.coordinates([f for _, f in pairs])
        return -sum((c.get(b, 0) for (b, _), c in zip(pairs, coords)), Fraction(0))


def _transpose(vecs: Sequence[dict], ncols: int) -> list[dict]:
    out: list[dict] = [{} for _ in range(ncols)]
    for i, v in enumerate(vecs):
        for c, x in v.items():
            out[c][i] = x
    return out


def rank_of(vecs: Sequence[dict], ncols: int, backend: str = "auto") -> int:
    if backend == "auto":
        backend = "flint" if HAVE_FLINT and ncols >= _FLINT_THRESHOLD and len(vecs) >= _FLINT_THRESHOLD else "python"
    if backend == "flint":
        return flint_rank(list(vecs), ncols)
    space = RowSpace()
    space.extend(vecs, stop_at=ncols)
    return space.rank


# -- identities and codimensions ---------------------------------------------------------


def is_identity(f: GenPoly, act: WAction) -> bool:
    """True iff f vanishes on A; non-multilinear f is fully linearized first."""
    if f.W.mult != act.W.mult:
        raise ValueError("polynomial and algebra use different W")
    if not f.terms:
        return True
    if not f.is_multilinear():
        f = multilinearize(f)
    ev = Evaluator(act)
    for assignment in basis_assignments(f.variables(), act.A.dim):
        if any(ev.evaluate(f, assignment)):
            return False
    return True


def first_nonvanishing_basis(f: GenPoly, act: WAction) -> dict[str, str] | None:
    """Basis labels where (the linearization of) f is nonzero, or None."""
    if not f.is_multilinear():
        f = multilinearize(f)
    hit = first_nonvanishing(f, act)
    if hit is None:
        return None
    return {v: act.A.basis[i] for v, i in hit.items()}


def codimension(act, n: int) -> int:
    return as_model(act).image(n).rank


def evaluation_matrix(act, n: int) -> list[dict]:
    """Rows of the evaluation matrix, in multilinear_basis order."""
    model = as_model(act)
    return [model.row(n, m) for m in range(model.monomial_count(n))]


@dataclass
class CocharacterResult:
    n: int
    multiplicities: SchurExpansion
    gc: int
    gl: int
    name: str = ""
    characters: dict = field(default_factory=dict)

    def render(self) -> str:
        lines = [f"cocharacter of {self.name or 'algebra'}, n = {self.n}"]
        width = max((len(_fmt(l)) for l in self.multiplicities), default=6)
        width = max(width, len("lambda"))
        lines.append(f"{'lambda':<{width}}  m_lambda  d_lambda")
        for lam, m in self.multiplicities.items():
            lines.append(f"{_fmt(lam):<{width}}  {int(m):>8}  {sn_dimension(lam):>8}")
        lines.append(f"gc_{self.n} = {self.gc}")
        lines.append(f"gl_{self.n} = {self.gl}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "algebra": self.name,
            "n": self.n,
            "multiplicities": [[list(lam), int(m)] for lam, m in self.multiplicities.items()],
            "gc": self.gc,
            "gl": self.gl,
        }


def _fmt(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def character_values(act, n: int, method: str = "both") -> dict[Partition, Fraction]:
    """Character of S_n on gP_n modulo identities, one value per cycle type."""
    if method not in ("both", "kernel", "image"):
        raise ValueError(f"unknown method {method!r}")
    model = as_model(act)
    img = model.image(n)
    values = {}
    for mu in enumerate_partitions(n):
        sigma = class_representative(mu)
        ker = img_val = None
        if method in ("both", "kernel"):
            total = img.N if mu == Partition((1,) * n) else 0
            ker = total - img.kernel_trace(sigma)
        if method in ("both", "image"):
            img_val = img.image_trace(model.col_perm(n, sigma))
        if ker is not None and img_val is not None and ker != img_val:
            raise VerificationError(f"trace mismatch at cycle type {mu}: kernel {ker}, image {img_val}")
        values[mu] = ker if ker is not None else img_val
    return values


def cocharacter(act, n: int, method: str = "both") -> CocharacterResult:
    model = as_model(act)
    values = character_values(model, n, method)
    try:
        mult = decompose(CharacterVector(n, values))
    except MultiplicityError as exc:
        raise VerificationError(str(exc)) from exc
    mult = SchurExpansion(n, mult.coeffs)
    gc = model.image(n).rank
    total = sum(int(m) * sn_dimension(lam) for lam, m in mult.items())
    if total != gc:
        raise VerificationError(f"sum m_lambda d_lambda = {total} but gc_{n} = {gc}")
    gl = sum(int(m) for m in mult.values())
    return CocharacterResult(n, mult, gc, gl, model.name, values)


def colength(act, n: int) -> int:
    return cocharacter(act, n).gl


# -- multidegrees, homogeneous codimensions, Hilbert series -------------------------------


def _young_subgroup(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    blocks, start = [], 0
    for a in alpha:
        blocks.append(range(start, start + a))
        start += a
    n = start
    out = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        p = list(range(n))
        for block, image in zip(blocks, images):
            for src, dst in zip(block, image):
                p[src] = dst
        out.append(tuple(p))
    return out


def multidegree_dimension(act, alpha: Sequence[int], method: str = "symmetrizer") -> int:
    """dim of the homogeneous component of multidegree alpha modulo identities.

    ``symmetrizer``: rank of the Young-subgroup symmetrizer applied to the row
    space (its image is the multilinearization of the component).
    ``explicit``: rank of the evaluation rows of the multilinearized
    monomials of multidegree alpha.
    """
    model = as_model(act)
    alpha = tuple(a for a in alpha if a)
    n = sum(alpha)
    if n < 1:
        raise ValueError("multidegree must have positive total degree")
    if method == "explicit":
        return _multidegree_explicit(model, alpha)
    if method != "symmetrizer":
        raise ValueError(f"unknown method {method!r}")
    key = alpha
    if key in model._multidegree:
        return model._multidegree[key]
    img = model.image(n)
    group = _young_subgroup(alpha)
    if len(group) == 1:
        dim = img.rank
    else:
        # (tau u)[c] = u[cp[c]], so the entry at column c' moves to cp^-1[c']
        invs = []
        for tau in group:
            cp = model.col_perm(n, tau)
            inv = [0] * len(cp)
            for c, c2 in enumerate(cp):
                inv[c2] = c
            invs.append(inv)
        vecs = []
        for row in img.basis_rows():
            acc: dict[int, object] = {}
            for inv in invs:
                for c, v in row.items():
                    k = inv[c]
                    acc[k] = acc.get(k, 0) + v
            vecs.append({c: v for c, v in acc.items() if v})
        dim = rank_of(vecs, img.ncols, "python" if model.backend == "python" else "auto")
    model._multidegree[key] = dim
    return dim


def _multidegree_explicit(model: Model, alpha: tuple[int, ...]) -> int:
    n = sum(alpha)
    letters = [f"x{i + 1}" for i, a in enumerate(alpha) for _ in range(a)]
    words = sorted(set(itertools.permutations(letters)), key=lambda w: [var_key(v) for v in w])
    D = model.d ** (n + 1)
    index = _perm_index(n)
    vecs = []
    # linearization sends a word to the sum of the multilinear monomials
    # obtained by distributing each variable's block over its occurrences
    blocks, start = {}, 0
    for i, a in enumerate(alpha):
        blocks[f"x{i + 1}"] = list(range(start, start + a))
        start += a
    for word in words:
        perms = []
        per_var = [list(itertools.permutations(blocks[v])) for v in blocks]
        for choice in itertools.product(*per_var):
            seq = list(word)
            labels = dict(zip(blocks, (list(c) for c in choice)))
            perm = tuple(labels[v].pop(0) for v in seq)
            perms.append(index[perm])
        for wsr in range(D):
            acc: dict[int, object] = {}
            for r in perms:
                for c, v in model.row(n, r * D + wsr).items():
                    acc[c] = acc.get(c, 0) + v
            vecs.append({c: v for c, v in acc.items() if v})
    return rank_of(vecs, model.ncols(n), "python")


def homogeneous_codimension(act, n: int, k: int) -> int:
    """Sum of multidegree dimensions over alpha with |alpha| = n in k variables.

    Cross-checked against sum m_lambda * weyl_dimension(lambda, k).
    """
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    total = sum(multidegree_dimension(act, alpha) for alpha in compositions(n, k))
    mult = cocharacter(act, n).multiplicities
    other = sum(int(m) * weyl_dimension(lam, k) for lam, m in mult.items())
    if total != other:
        raise VerificationError(f"homogeneous codimension {total} != sum m_lambda s_lambda(1^{k}) = {other}")
    return total


def character_polynomial(act, n: int, k: int) -> ExactPoly:
    return ExactPoly(k, {alpha: multidegree_dimension(act, alpha) for alpha in compositions(n, k)})


def gl_pipeline_multiplicities(act, n: int, k: int | None = None) -> SchurExpansion:
    """Multiplicities read off the multigraded dimensions via Schur expansion."""
    k = n if k is None else k
    if k < n:
        raise ValueError("the GL pipeline needs k >= n")
    exp = schur_expand(character_polynomial(act, n, k))
    if not exp.is_nonneg_integral():
        raise VerificationError(f"non-integral Schur expansion {exp!r}")
    return SchurExpansion(n, exp.coeffs)


def pipelines_agree(act, n: int, k: int | None = None) -> bool:
    return gl_pipeline_multiplicities(act, n, k) == cocharacter(act, n).multiplicities


def hilbert_truncated(act, k: int, N: int) -> TruncatedSeries:
    if k < 1 or N < 1:
        raise ValueError("need k, N >= 1")
    terms = {}
    for n in range(1, N + 1):
        for alpha in compositions(n, k):
            terms[alpha] = multidegree_dimension(act, alpha)
    return TruncatedSeries(k, N, terms)


def hilbert_matches(act, k: int, N: int, closed_form: str) -> bool:
    return hilbert_truncated(act, k, N) == expand_closed_form(closed_form, k, N)


# -- multiplicity bound -----------------------------------------------------------------------


@dataclass
class BoundReport:
    n: int
    rows: list[tuple[Partition, int, int]]  # (lambda, m_lambda, bound)
    ordinary: SchurExpansion

    @property
    def holds(self) -> bool:
        return all(m <= b for _, m, b in self.rows)

    def render(self) -> str:
        lines = [f"multiplicity bound, n = {self.n}", "lambda  m_lambda  bound"]
        for lam, m, b in self.rows:
            lines.append(f"{_fmt(lam)}  {m}  {b}")
        lines.append("HOLDS" if self.holds else "VIOLATED")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "rows": [[list(l), m, b] for l, m, b in self.rows],
            "ordinary": [[list(l), int(c)] for l, c in self.ordinary.items()],
            "holds": self.holds,
        }


def multiplicity_bound_check(act: WAction, n: int) -> BoundReport:
    """m_lambda <= sum over mu of 2n+1 containing lambda of a_mu s_{mu/lambda}(1^d)."""
    if find_unity(act.A) is None:
        raise ValueError("the multiplicity bound needs a unital algebra A")
    d = act.W.dim
    a = cocharacter(ordinary(act), 2 * n + 1).multiplicities
    m = cocharacter(act, n).multiplicities
    rows = []
    for lam in enumerate_partitions(n):
        bound = sum(int(c) * skew_schur_at_ones(mu, lam, d) for mu, c in a.items() if mu.contains(lam))
        rows.append((lam, int(m[lam]), bound))
    report = BoundReport(n, rows, a)
    if not report.holds:
        raise VerificationError(f"multiplicity bound violated: {report.rows}")
    return report


# -- Capelli polynomials ----------------------------------------------------------------------


@dataclass
class CapelliReport:
    m: int
    generalized: bool
    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds

    def render(self) -> str:
        kind = "generalized Capelli set" if self.generalized else "Capelli polynomial"
        head = f"{kind} of rank {self.m}: " + ("IDENTITY" if self.holds else "NOT AN IDENTITY")
        if self.witness:
            head += "\nwitness: x = " + ", ".join(self.witness["x"]) + "; y = " + ", ".join(self.witness["y"])
        return head


def _capelli_value(act: WAction, ys: Sequence[tuple[str, int]], xs: Sequence[int]) -> list:
    """sum_sigma sign(sigma) Y_1 x_{sigma 1} Y_2 ... x_{sigma m} Y_{m+1}.

    ``ys`` entries are ("A", i) or ("W", i); DP over the set of used x's with
    the sign accumulated from inversions.
    """
    A = act.A
    da = A.dim
    m = len(xs)

    def times(vec, kind, idx):
        table = A.mult if kind == "A" else act.right
        acc = [0] * da
        for j, c in enumerate(vec):
            if c:
                for k, v in enumerate(table[j][idx]):
                    if v:
                        acc[k] += c * v
        return acc

    states: dict[int, list] = {}
    kind0, i0 = ys[0]
    for pos, x in enumerate(xs):
        if kind0 == "A":
            vec = list(A.mult[i0][x])
        else:
            vec = list(act.left[i0][x])
        states[1 << pos] = vec
    for step in range(1, m):
        new: dict[int, list] = {}
        kind, idx = ys[step]
        for used, vec in states.items():
            base = times(vec, kind, idx)
            if not any(base):
                continue
            for pos, x in enumerate(xs):
                if used >> pos & 1:
                    continue
                inversions = bin(used >> (pos + 1)).count("1")
                s = -1 if inversions % 2 else 1
                val = times(base, "A", x)
                acc = new.setdefault(used | 1 << pos, [0] * da)
                for k, v in enumerate(val):
                    if v:
                        acc[k] += s * v
        states = new
    full = states.get((1 << m) - 1, [0] * da)
    kind, idx = ys[m]
    return times(full, kind, idx)


def capelli_report(act: WAction, m: int, generalized: bool = True) -> CapelliReport:
    """Does Cap_m (every W-specialization of its y's, if generalized) vanish on A?

    Cap_m is linear in every variable and alternating in the x's, so it is
    enough to substitute basis elements, with strictly increasing x's.
    """
    if m < 1:
        raise ValueError("m must be positive")
    da, dw = act.A.dim, act.W.dim
    choices = [("A", i) for i in range(da)]
    if generalized:
        choices += [("W", i) for i in range(dw)]
    for xs in itertools.combinations(range(da), m):
        for ys in itertools.product(choices, repeat=m + 1):
            val = _capelli_value(act, ys, xs)
            if any(val):
                witness = {
                    "x": [act.A.basis[i] for i in xs],
                    "y": [f"w[{act.W.basis[i]}]" if k == "W" else act.A.basis[i] for k, i in ys],
                }
                return CapelliReport(m, generalized, False, witness)
    return CapelliReport(m, generalized, True)


def capelli_landing(act: WAction) -> bool:
    """Cap_{dim W + 1} on the semidirect product lands in the ideal A.

    All arguments run over the canonical basis of A + W; the W-coordinates of
    every value must vanish.
    """
    s = semidirect(act)
    da = act.A.dim
    m = act.W.dim + 1
    sa = s.A
    choices = [("A", i) for i in range(sa.dim)]
    for xs in itertools.combinations(range(sa.dim), m):
        for ys in itertools.product(choices, repeat=m + 1):
            val = _capelli_value(s, ys, xs)
            if any(val[da:]):
                return False
    return True


def gid_contained(big: WAction, small: WAction, n: int) -> bool:
    """Every multilinear identity of ``big`` of degree n is one of ``small``.

    Both must share W.  Equivalent to rank [M_big | M_small] = rank M_big.
    """
    if big.W.mult != small.W.mult:
        raise ValueError("actions over different W")
    mb, ms = as_model(big), as_model(small)
    off = mb.ncols(n)
    space = RowSpace()
    for m in range(mb.monomial_count(n)):
        row = dict(mb.row(n, m))
        for c, v in ms.row(n, m).items():
            row[off + c] = v
        space.add(row)
    return space.rank == mb.image(n).rank


def strip_violations(result: CocharacterResult, height: int) -> list[Partition]:
    """Partitions with nonzero multiplicity and more than ``height`` parts."""
    return [lam for lam, m in result.multiplicities.items() if m and lam.height > height]


__all__ = [
    "AlgebraModel",
    "BoundReport",
    "CapelliReport",
    "CocharacterResult",
    "FreeModel",
    "ImageData",
    "Model",
    "VerificationError",
    "as_model",
    "capelli_landing",
    "capelli_report",
    "character_polynomial",
    "character_values",
    "cocharacter",
    "codimension",
    "colength",
    "evaluation_matrix",
    "first_nonvanishing_basis",
    "gid_contained",
    "gl_pipeline_multiplicities",
    "hilbert_matches",
    "hilbert_truncated",
    "homogeneous_codimension",
    "is_identity",
    "multidegree_dimension",
    "multiplicity_bound_check",
    "pipelines_agree",
    "rank_of",
    "strip_violations",
    "worker_count",
]
