"""Characters and group algebra of the symmetric group.

Permutations of ``{0, ..., n-1}`` are tuples ``p`` with ``p[i]`` the image of
``i``.  Composition applies the right factor first::

    compose(p, q)[i] == p[q[i]]

and this is the only place the convention is fixed.  Characters are stored
per cycle type, never per permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .linalg import RowSpace
from .partitions import Partition, branch_down, enumerate_partitions, sn_dimension
from .symfunc import SchurExpansion

Perm = tuple[int, ...]


class MultiplicityError(ArithmeticError):
    """A character decomposed with a negative or fractional multiplicity."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycle_type(p: Perm) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def sign(p: Perm) -> int:
    ct = cycle_type(p)
    return -1 if (len(p) - ct.height) % 2 else 1


def class_representative(mu: Sequence[int]) -> Perm:
    """A permutation of cycle type ``mu`` made of consecutive cycles."""
    mu = Partition(mu)
    perm = []
    start = 0
    for length in mu:
        perm.extend(start + (i + 1) % length for i in range(length))
        start += length
    return tuple(perm)


def z_constant(mu: Sequence[int]) -> int:
    mu = Partition(mu)
    out = 1
    for i in set(mu):
        m = mu.count(i)
        out *= i**m * factorial(m)
    return out


def class_size(mu: Sequence[int]) -> int:
    mu = Partition(mu)
    n = mu.size
    z = z_constant(mu)
    assert factorial(n) % z == 0
    return factorial(n) // z


# -- characters -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r = mu[0]
    rest = Partition(mu[1:])
    ell = lam.height
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = Partition(new_beta[i] - (ell - 1 - i) for i in range(ell))
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def irreducible_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi_lam at the class of cycle type ``mu`` (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


@dataclass
class CharacterVector:
    """Class function on S_n, one value per cycle type."""

    n: int
    values: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.values = {Partition(mu): Fraction(v) for mu, v in self.values.items()}
        for mu in enumerate_partitions(self.n):
            self.values.setdefault(mu, Fraction(0))
        if any(mu.size != self.n for mu in self.values):
            raise ValueError("cycle type of the wrong size")

    def __getitem__(self, mu) -> Fraction:
        return self.values[Partition(mu)]

    def __add__(self, other: CharacterVector) -> CharacterVector:
        _same_n(self, other)
        return CharacterVector(self.n, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __sub__(self, other: CharacterVector) -> CharacterVector:
        _same_n(self, other)
        return CharacterVector(self.n, {mu: v - other.values[mu] for mu, v in self.values.items()})

    def scale(self, c) -> CharacterVector:
        return CharacterVector(self.n, {mu: v * c for mu, v in self.values.items()})


def _same_n(a: CharacterVector, b: CharacterVector) -> None:
    if a.n != b.n:
        raise ValueError(f"characters of S_{a.n} and S_{b.n}")


def character_vector(lam: Sequence[int]) -> CharacterVector:
    lam = Partition(lam)
    n = lam.size
    return CharacterVector(n, {mu: irreducible_character(lam, mu) for mu in enumerate_partitions(n)})


def regular_character(n: int) -> CharacterVector:
    return CharacterVector(n, {Partition((1,) * n): factorial(n)})


def inner_product(phi: CharacterVector, psi: CharacterVector) -> Fraction:
    _same_n(phi, psi)
    total = sum(class_size(mu) * phi.values[mu] * psi.values[mu] for mu in phi.values)
    return Fraction(total, factorial(phi.n))


def decompose(phi: CharacterVector) -> SchurExpansion:
    """Multiplicities of the irreducibles in a module character.

    Raises :class:`MultiplicityError` if any multiplicity is not a
    nonnegative integer.
    """
    coeffs = {}
    for lam in enumerate_partitions(phi.n):
        m = inner_product(phi, character_vector(lam))
        if m.denominator != 1 or m < 0:
            raise MultiplicityError(f"multiplicity of {lam} is {m}")
        if m:
            coeffs[lam] = m
    return SchurExpansion(max(phi.n, 1), coeffs)


def branching_check(lam: Sequence[int]) -> bool:
    """Restriction of chi_lam to S_{n-1} equals the sum over lam minus a box."""
    lam = Partition(lam)
    n = lam.size
    if n < 2:
        return True
    restricted = CharacterVector(
        n - 1,
        {nu: irreducible_character(lam, Partition(tuple(nu) + (1,))) for nu in enumerate_partitions(n - 1)},
    )
    total = CharacterVector(n - 1)
    for mu in branch_down(lam):
        total = total + character_vector(mu)
    return total.values == restricted.values


# -- group algebra -------------------------------------------------------------------


class GroupAlgebraElement:
    """Finitely supported formal combination of permutations of S_n."""

    def __init__(self, n: int, coeffs: Mapping[Perm, object] | None = None):
        self.n = n
        self.coeffs: dict[Perm, Fraction] = {}
        for p, c in (coeffs or {}).items():
            p = tuple(p)
            if sorted(p) != list(range(n)):
                raise ValueError(f"{p} is not a permutation of {n} points")
            if c:
                self.coeffs[p] = self.coeffs.get(p, Fraction(0)) + Fraction(c)
        self.coeffs = {p: c for p, c in self.coeffs.items() if c}

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out: dict[Perm, Fraction] = {}
        for p, a in self.coeffs.items():
            for q, b in other.coeffs.items():
                r = compose(p, q)
                out[r] = out.get(r, 0) + a * b
        return GroupAlgebraElement(self.n, out)

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return GroupAlgebraElement(self.n, out)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"GroupAlgebraElement({self.n}, {self.coeffs!r})"

    def left_translate(self, sigma: Perm) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.n, {compose(sigma, p): c for p, c in self.coeffs.items()})


def _stabilizer(blocks: Iterable[Sequence[int]], n: int) -> list[Perm]:
    blocks = [list(b) for b in blocks]
    perms = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        p = list(range(n))
        for block, image in zip(blocks, images):
            for src, dst in zip(block, image):
                p[src] = dst
        perms.append(tuple(p))
    return perms


def _check_filling(tableau: Sequence[Sequence[int]]) -> tuple[Partition, int]:
    shape = Partition(len(r) for r in tableau)
    n = shape.size
    entries = sorted(v for row in tableau for v in row)
    if entries != list(range(1, n + 1)):
        raise ValueError("tableau must be a bijective filling with 1..n")
    return shape, n


def young_symmetrizer(tableau: Sequence[Sequence[int]]) -> GroupAlgebraElement:
    """sum over sigma in R_T, tau in C_T of sign(tau) * sigma tau."""
    shape, n = _check_filling(tableau)
    rows = [[v - 1 for v in row] for row in tableau]
    cols = [[rows[r][c] for r in range(len(rows)) if c < len(rows[r])] for c in range(shape[0])]
    out: dict[Perm, int] = {}
    row_group = _stabilizer(rows, n)
    col_group = [(tau, sign(tau)) for tau in _stabilizer(cols, n)]
    for sigma in row_group:
        for tau, s in col_group:
            p = compose(sigma, tau)
            out[p] = out.get(p, 0) + s
    return GroupAlgebraElement(n, out)


def _perm_index(n: int) -> dict[Perm, int]:
    return {p: i for i, p in enumerate(itertools.permutations(range(n)))}


def left_ideal_basis(element: GroupAlgebraElement) -> RowSpace:
    """Row-reduced basis of F[S_n] * element, as vectors indexed by permutation."""
    index = _perm_index(element.n)
    space = RowSpace()
    for sigma in index:
        vec = {index[p]: c for p, c in element.left_translate(sigma).coeffs.items()}
        space.add(vec)
    return space


def left_ideal_dimension(element: GroupAlgebraElement) -> int:
    return left_ideal_basis(element).rank


def specht_trace(tableau: Sequence[Sequence[int]], sigma: Perm) -> Fraction:
    """Trace of left multiplication by ``sigma`` on F[S_n] e_T.

    Matrix-model oracle for :func:`irreducible_character`.
    """
    shape, n = _check_filling(tableau)
    space = left_ideal_basis(young_symmetrizer(tableau))
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    sigma_inv = inverse(sigma)
    total = Fraction(0)
    for pivot, row in space.rows.items():
        # (sigma . row)[pivot] = row[sigma^-1 . perms[pivot]]
        total += row.get(index[compose(sigma_inv, perms[pivot])], 0)
    return total


def standard_filling(lam: Sequence[int]) -> list[list[int]]:
    """Row-reading filling 1, 2, ... of the diagram of ``lam``."""
    lam = Partition(lam)
    out, k = [], 1
    for p in lam:
        out.append(list(range(k, k + p)))
        k += p
    return out
