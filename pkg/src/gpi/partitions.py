"""Integer partitions, Young diagrams and tableaux.

A :class:`Partition` is an immutable tuple of positive integers in weakly
decreasing order.  Trailing zeros are stripped on construction so that every
partition has exactly one representation; padding with zeros is done locally
by the functions that need it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> Partition((3, 1, 1)).size, Partition((3, 1, 1)).height
    (5, 3)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part, 0-based, with zero padding."""
        return self[i] if 0 <= i < len(self) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self):
            raise ValueError(f"{self} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> list[tuple[int, int]]:
        """Cells ``(row, col)`` of the Young diagram, English notation, 0-based."""
        return [(r, c) for r, p in enumerate(self) for c in range(p)]

    def contains(self, other: Sequence[int]) -> bool:
        """``other ⊆ self`` as Young diagrams."""
        other = Partition(other)
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition`; ``"-"`` is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    return Partition(int(p) for p in text.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam) if len(lam) else "-"


def enumerate_partitions(n: int, max_height: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if max_height is not None and len(prefix) >= max_height:
            return
        for p in range(min(remaining, largest), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return out


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``k`` parts, lexicographically decreasing."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class HookShape:
    """The hook H(arm, leg): partitions with ``lam[arm] <= leg`` (0-based)."""

    arm: int
    leg: int

    def __contains__(self, lam: Sequence[int]) -> bool:
        return hook_membership(lam, self)


def strip(height: int) -> HookShape:
    return HookShape(height, 0)


def hook_membership(lam: Sequence[int], hook: HookShape) -> bool:
    return Partition(lam).part(hook.arm) <= hook.leg


def hook_lengths(lam: Sequence[int]) -> list[int]:
    lam = Partition(lam)
    conj = lam.conjugate()
    return [lam[r] - c + conj[c] - r - 1 for r, c in lam.cells()]


def sn_dimension(lam: Sequence[int]) -> int:
    """Dimension of the Specht module, by the hook-length formula."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("sn_dimension is undefined for the empty partition")
    return factorial(lam.size) // prod(hook_lengths(lam))


def weyl_dimension(lam: Sequence[int], k: int) -> int:
    """Dimension of the GL_k Weyl module; 0 when ``lam`` has more than k parts."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = Partition(lam)
    if lam.height > k:
        return 0
    p = lam.padded(k)
    num = 1
    den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= p[i] - p[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def branch_up(lam: Sequence[int]) -> list[Partition]:
    """Partitions obtained by adding one box, top row first."""
    lam = Partition(lam)
    out = []
    for i in range(lam.height + 1):
        if i == 0 or lam.part(i) < lam.part(i - 1):
            parts = list(lam.padded(lam.height + 1))
            parts[i] += 1
            out.append(Partition(parts))
    return out


def branch_down(lam: Sequence[int]) -> list[Partition]:
    """Partitions obtained by removing one box, top row first."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("cannot remove a box from the empty partition")
    out = []
    for i in range(lam.height):
        if lam.part(i) > lam.part(i + 1):
            parts = list(lam)
            parts[i] -= 1
            out.append(Partition(parts))
    return out


def interleaves(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Test ``lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...`` with zero padding."""
    lam, mu = Partition(lam), Partition(mu)
    length = max(lam.height, mu.height) + 1
    a, b = lam.padded(length), mu.padded(length)
    return all(a[i] >= b[i] >= a[i + 1] for i in range(length - 1)) and b[-1] == 0


def interleaved_below(lam: Sequence[int]) -> Iterator[Partition]:
    """All ``mu`` with ``interleaves(lam, mu)``, i.e. lam/mu a horizontal strip."""
    lam = Partition(lam)
    ranges = [range(lam.part(i + 1), lam[i] + 1) for i in range(lam.height)]
    for parts in itertools.product(*ranges):
        yield Partition(parts)


def is_horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Cell-level test: mu ⊆ lam and no two cells of lam/mu share a column."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return False
    skew = set(lam.cells()) - set(mu.cells())
    columns = [c for _, c in skew]
    return len(columns) == len(set(columns))


# -- tableaux ------------------------------------------------------------------


def standard_tableaux(lam: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Standard Young tableaux of shape ``lam`` with entries ``1..n``."""
    lam = Partition(lam)
    n = lam.size
    rows: list[list[int]] = [[] for _ in lam]

    def rec(k: int):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(lam.height):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                yield from rec(k + 1)
                rows[i].pop()

    yield from rec(1)


def skew_semistandard_tableaux(
    outer: Sequence[int], inner: Sequence[int], max_entry: int
) -> Iterator[dict[tuple[int, int], int]]:
    """Semistandard fillings of ``outer/inner`` with entries in ``1..max_entry``.

    Rows weakly increase, columns strictly increase.  Each tableau is a dict
    ``(row, col) -> entry`` over the skew cells.
    """
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    cells = [(r, c) for r in range(outer.height) for c in range(inner.part(r), outer[r])]
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        low = 1
        if (r, c - 1) in filling:
            low = filling[(r, c - 1)]
        if (r - 1, c) in filling:
            low = max(low, filling[(r - 1, c)] + 1)
        for v in range(low, max_entry + 1):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def semistandard_tableaux(lam: Sequence[int], max_entry: int):
    return skew_semistandard_tableaux(lam, EMPTY, max_entry)


def count_standard_tableaux(lam: Sequence[int]) -> int:
    return sum(1 for _ in standard_tableaux(lam))


def count_semistandard_tableaux(lam: Sequence[int], max_entry: int) -> int:
    return sum(1 for _ in semistandard_tableaux(lam, max_entry))
