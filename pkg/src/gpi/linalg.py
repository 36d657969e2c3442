"""Exact linear algebra over the rationals.

Vectors are sparse ``dict[int, Fraction | int]`` maps from column index to a
nonzero value.  :class:`RowSpace` keeps a fully reduced row echelon basis of
the span of the vectors fed to it, so the coordinates of any vector of the
span are just its values at the pivot columns.  :func:`bareiss_rank` is an
independent fraction-free rank routine for dense matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

Vector = dict


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return _norm(Fraction(a) / b)


def clean(vec: Mapping[int, object]) -> dict:
    return {c: _norm(v) for c, v in vec.items() if v}


class RowSpace:
    """Incrementally maintained reduced row echelon basis.

    Each stored row has value 1 at its pivot and 0 at every other pivot.
    """

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in self.pivots]

    def reduce(self, vec: Mapping[int, object]) -> dict:
        out = dict(vec)
        hits = [c for c in out if c in self.rows]
        for p in hits:
            f = out.get(p)
            if not f:
                continue
            for c, v in self.rows[p].items():
                nv = out.get(c, 0) - f * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def add(self, vec: Mapping[int, object]) -> bool:
        """Add ``vec`` to the span; True when the rank grew."""
        red = self.reduce(vec)
        if not red:
            return False
        p = min(red)
        lead = red[p]
        red = {c: _div(v, lead) for c, v in red.items()}
        for q, row in self.rows.items():
            f = row.get(p)
            if f:
                for c, v in red.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = _norm(nv)
                    else:
                        row.pop(c, None)
        self.rows[p] = red
        return True

    def extend(self, vecs: Iterable[Mapping[int, object]], stop_at: int | None = None) -> int:
        for v in vecs:
            self.add(v)
            if stop_at is not None and self.rank >= stop_at:
                break
        return self.rank

    def contains(self, vec: Mapping[int, object]) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: Mapping[int, object]) -> dict[int, object]:
        """Coordinates of ``vec`` in the basis, keyed by pivot column."""
        if not self.contains(vec):
            raise ValueError("vector is not in the row space")
        return {p: vec[p] for p in self.rows if vec.get(p)}


def rank(vecs: Iterable[Mapping[int, object]]) -> int:
    space = RowSpace()
    space.extend(vecs)
    return space.rank


def nullspace(rows: Sequence[Mapping[int, object]], ncols: int) -> list[dict]:
    """Basis of ``{x : row . x = 0 for every row}``.

    Basis vector ``k_f`` has value 1 at free column ``f`` and 0 at every other
    free column, so coordinates in this basis are values at free columns.
    """
    space = RowSpace()
    space.extend(rows)
    basis = []
    pivots = space.rows
    for f in range(ncols):
        if f in pivots:
            continue
        vec = {f: 1}
        for p, row in pivots.items():
            v = row.get(f)
            if v:
                vec[p] = -v
        basis.append(vec)
    return basis


def dense_rows(vecs: Iterable[Mapping[int, object]], ncols: int) -> list[list]:
    return [[v.get(c, 0) for c in range(ncols)] for v in vecs]


def bareiss_rank(matrix: Sequence[Sequence[object]]) -> int:
    """Rank by fraction-free Gaussian elimination.

    Rational rows are scaled to integers first; every later division in the
    Bareiss recurrence is exact.
    """
    m = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        m.append([int(x * scale) for x in row])
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                num = m[r][c] * m[i][j] - m[i][c] * m[r][j]
                assert num % prev == 0
                m[i][j] = num // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


# -- python-flint backend --------------------------------------------------------------


def _fmpq(x):
    import flint

    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(x)


def to_fmpq_mat(vecs: Sequence[Mapping[int, object]], ncols: int):
    import flint

    m = flint.fmpq_mat(len(vecs), ncols)
    for i, v in enumerate(vecs):
        for c, x in v.items():
            m[i, c] = _fmpq(x)
    return m


def from_fmpq(x):
    return _norm(Fraction(int(x.p), int(x.q)))


def flint_rref(vecs: Sequence[Mapping[int, object]], ncols: int):
    """(rref matrix, rank, pivot columns) of the stacked vectors."""
    m = to_fmpq_mat(vecs, ncols)
    if not vecs:
        return m, 0, []
    r, rk = m.rref()
    pivots = []
    c = 0
    for i in range(rk):
        while r[i, c] == 0:
            c += 1
        pivots.append(c)
        c += 1
    return r, rk, pivots


def flint_rank(vecs: Sequence[Mapping[int, object]], ncols: int) -> int:
    if not vecs:
        return 0
    return to_fmpq_mat(vecs, ncols).rref()[1]
