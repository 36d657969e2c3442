"""Exact polynomials, Schur functions and Littlewood-Richardson coefficients.

Everything here works over :class:`fractions.Fraction`; nothing is ever
rounded.  Schur polynomials are computed from semistandard tableaux, with the
Jacobi-Trudi determinant kept as an independent second route.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence, Union

from .partitions import (
    EMPTY,
    Partition,
    compositions,
    enumerate_partitions,
    format_partition,
    interleaved_below,
    semistandard_tableaux,
    skew_semistandard_tableaux,
    weyl_dimension,
)

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ExactPoly:
    """Sparse polynomial in ``k`` variables with rational coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Exponent, Scalar] | None = None):
        if k < 1:
            raise ValueError("number of variables must be positive")
        self.k = k
        self.terms: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != k or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {k} variables")
            if c:
                self.terms[exp] = self.terms.get(exp, Fraction(0)) + Fraction(c)
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def constant(cls, k: int, c: Scalar = 1):
        return cls(k, {(0,) * k: c})

    @classmethod
    def variable(cls, k: int, i: int):
        exp = [0] * k
        exp[i] = 1
        return cls(k, {tuple(exp): 1})

    @classmethod
    def power_sum_one(cls, k: int):
        """t_1 + ... + t_k."""
        return sum((cls.variable(k, i) for i in range(k)), cls(k))

    def _new(self, terms):
        return type(self)(self.k, terms)

    def _coerce(self, other):
        if isinstance(other, ExactPoly):
            if other.k != self.k:
                raise ValueError("polynomials live in different numbers of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPoly.constant(self.k, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._new({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return self._new(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self._new({(0,) * self.k: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPoly.constant(self.k, other)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({self.k}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"t{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e
            )
            c = format_rational(self.terms[exp])
            parts.append(f"{c}*{mono}" if mono else c)
        return " + ".join(parts)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_component(self, d: int) -> ExactPoly:
        return ExactPoly(self.k, {e: c for e, c in self.terms.items() if sum(e) == d})

    def degrees(self) -> list[int]:
        return sorted({sum(e) for e in self.terms})

    def is_symmetric(self) -> bool:
        for i in range(self.k - 1):
            for e, c in self.terms.items():
                swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2 :]
                if self.terms.get(swapped) != c:
                    return False
        return True

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, p in zip(point, e):
                v *= Fraction(x) ** p
            total += v
        return total

    def embed(self, k: int, offset: int) -> ExactPoly:
        """Rename t_i to t_{i+offset} inside a ring of ``k`` variables."""
        if offset + self.k > k:
            raise ValueError("embedding does not fit")
        terms = {}
        for e, c in self.terms.items():
            new = [0] * k
            new[offset : offset + self.k] = e
            terms[tuple(new)] = c
        return ExactPoly(k, terms)

    def to_truncated(self, max_degree: int) -> TruncatedSeries:
        return TruncatedSeries(self.k, max_degree, self.terms)


class TruncatedSeries(ExactPoly):
    """Power series in ``k`` variables known up to total degree ``max_degree``."""

    __slots__ = ("max_degree",)

    def __init__(self, k: int, max_degree: int, terms=None):
        if max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        self.max_degree = max_degree
        terms = {e: c for e, c in (terms or {}).items() if sum(e) <= max_degree}
        super().__init__(k, terms)

    def _new(self, terms):
        return TruncatedSeries(self.k, self.max_degree, terms)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries) and other.max_degree != self.max_degree:
            raise ValueError("series truncated at different degrees")
        return super()._coerce(other)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries) and other.max_degree != self.max_degree:
            return False
        return super().__eq__(other)

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({self.k}, {self.max_degree}, {self.terms!r})"

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self.coefficient((0,) * self.k)
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        rest = (self - c0) * Fraction(-1, c0)
        return geometric(rest) * Fraction(1, c0)

    def render(self) -> str:
        """One ``exponent-vector: coefficient`` line per term, graded order."""
        lines = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            lines.append(f"{','.join(map(str, exp))}: {format_rational(self.terms[exp])}")
        return "\n".join(lines)


def geometric(x: TruncatedSeries) -> TruncatedSeries:
    """1/(1 - x) for a series without constant term."""
    if x.coefficient((0,) * x.k):
        raise ValueError("geometric series needs a zero constant term")
    total = TruncatedSeries(x.k, x.max_degree, {(0,) * x.k: 1})
    power = total
    for _ in range(x.max_degree):
        power = power * x
        if not power:
            break
        total = total + power
    return total


# -- Schur expansions ----------------------------------------------------------


class SchurExpansion(Mapping):
    """Finite linear combination of Schur polynomials in ``k`` variables."""

    def __init__(self, k: int, coeffs: Mapping[Sequence[int], Scalar] | None = None):
        self.k = k
        self.coeffs: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if lam.height > k:
                raise ValueError(f"{lam} has more than {k} parts")
            if c:
                self.coeffs[lam] = self.coeffs.get(lam, Fraction(0)) + Fraction(c)
        self.coeffs = {
            lam: self.coeffs[lam]
            for lam in sorted(self.coeffs, key=lambda p: (p.size, _neg(p)))
            if self.coeffs[lam]
        }

    def __getitem__(self, lam):
        return self.coeffs.get(Partition(lam), Fraction(0))

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self.coeffs == other.coeffs
        if isinstance(other, Mapping):
            return self.coeffs == SchurExpansion(self.k, other).coeffs
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{tuple(l)}: {format_rational(c)}" for l, c in self.coeffs.items())
        return f"SchurExpansion(k={self.k}, {{{inner}}})"

    def is_nonneg_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs.values())

    def to_poly(self) -> ExactPoly:
        total = ExactPoly(self.k)
        for lam, c in self.coeffs.items():
            total = total + schur_poly(lam, self.k) * c
        return total

    def render(self) -> str:
        return "\n".join(
            f"{format_partition(lam)}: {format_rational(c)}" for lam, c in self.coeffs.items()
        )


def _neg(p):
    return tuple(-x for x in p)


@lru_cache(maxsize=None)
def _schur_poly_cached(lam: Partition, k: int) -> ExactPoly:
    terms: dict[Exponent, int] = {}
    for tab in semistandard_tableaux(lam, k):
        exp = [0] * k
        for v in tab.values():
            exp[v - 1] += 1
        exp = tuple(exp)
        terms[exp] = terms.get(exp, 0) + 1
    return ExactPoly(k, terms)


def schur_poly(lam: Sequence[int], k: int) -> ExactPoly:
    """s_lam(t_1..t_k) as the content generating function of SSYT."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = Partition(lam)
    if lam.height > k:
        return ExactPoly(k)
    if not lam:
        return ExactPoly.constant(k, 1)
    return _schur_poly_cached(lam, k)


@lru_cache(maxsize=None)
def complete_homogeneous(r: int, k: int) -> ExactPoly:
    if r < 0:
        return ExactPoly(k)
    return ExactPoly(k, {e: 1 for e in compositions(r, k)})


def schur_poly_jt(lam: Sequence[int], k: int) -> ExactPoly:
    """s_lam(t_1..t_k) as the Jacobi-Trudi determinant det(h_{lam_i - i + j})."""
    lam = Partition(lam)
    ell = lam.height
    if ell == 0:
        return ExactPoly.constant(k, 1)
    entry = [[complete_homogeneous(lam[i] - i + j, k) for j in range(ell)] for i in range(ell)]

    @lru_cache(maxsize=None)
    def minor(row: int, used: frozenset) -> ExactPoly:
        # Laplace expansion along ``row`` over the columns not yet used.
        if row == ell:
            return ExactPoly.constant(k, 1)
        total = ExactPoly(k)
        free = [j for j in range(ell) if j not in used]
        for pos, j in enumerate(free):
            if not entry[row][j]:
                continue
            sub = minor(row + 1, used | {j})
            if not sub:
                continue
            term = entry[row][j] * sub
            total = total - term if pos % 2 else total + term
        return total

    return minor(0, frozenset())


def skew_schur_poly(outer: Sequence[int], inner: Sequence[int], k: int) -> ExactPoly:
    """s_{outer/inner}(t_1..t_k) from skew semistandard tableaux."""
    terms: dict[Exponent, int] = {}
    for tab in skew_semistandard_tableaux(outer, inner, k):
        exp = [0] * k
        for v in tab.values():
            exp[v - 1] += 1
        exp = tuple(exp)
        terms[exp] = terms.get(exp, 0) + 1
    return ExactPoly(k, terms)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^nu_{lam,mu}: number of LR tableaux of shape nu/lam and content mu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    # reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(nu.height) for c in range(nu[r] - 1, lam.part(r) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (mu.height + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        high = filling.get((r, c + 1), mu.height)
        low = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        total = 0
        for v in range(low, high + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_coefficient_by_expansion(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Same coefficient, read off ``schur_expand(s_lam * s_mu)``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size:
        return 0
    k = max(nu.size, 1)
    product = schur_poly(lam, k) * schur_poly(mu, k)
    c = schur_expand(product)[nu]
    assert c.denominator == 1
    return int(c)


def skew_schur(outer: Sequence[int], inner: Sequence[int], k: int) -> SchurExpansion:
    """s_{outer/inner} = sum_nu c^outer_{inner,nu} s_nu, truncated to height <= k."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    coeffs = {}
    for nu in enumerate_partitions(outer.size - inner.size, max_height=k):
        if outer.contains(nu):
            c = lr_coefficient(inner, nu, outer)
            if c:
                coeffs[nu] = c
    return SchurExpansion(k, coeffs)


def skew_schur_at_ones(outer: Sequence[int], inner: Sequence[int], d: int) -> int:
    """s^d_{outer/inner}(1,...,1)."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    total = 0
    for nu in enumerate_partitions(outer.size - inner.size):
        if outer.contains(nu):
            c = lr_coefficient(inner, nu, outer)
            if c:
                total += c * weyl_dimension(nu, d)
    return total


def schur_expand(p: ExactPoly) -> SchurExpansion:
    """Write a symmetric polynomial as a combination of Schur polynomials."""
    if not p.is_symmetric():
        raise ValueError("schur_expand needs a symmetric polynomial")
    k = p.k
    coeffs: dict[Partition, Fraction] = {}
    for d in p.degrees():
        rest = ExactPoly(k, {e: c for e, c in p.terms.items() if sum(e) == d})
        previous = None
        while rest:
            lead = max(rest.terms)
            if previous is not None and lead >= previous:
                raise AssertionError("Schur elimination made no progress")
            previous = lead
            lam = Partition(lead)  # leading exponent of a symmetric poly is a partition
            c = rest.terms[lead]
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
            rest = rest - schur_poly(lam, k) * c
    return SchurExpansion(k, coeffs)


# -- Young-derived sequences -----------------------------------------------------


class YoungDerived:
    """Multiplicities of ``prod 1/(1-t_i) * sum alpha_mu s_mu``.

    ``alpha`` is either a finite mapping partition -> coefficient or a
    callable, so infinite families such as ``{(n): 1 for all n}`` are allowed.
    """

    def __init__(self, alpha: Mapping | Callable[[Partition], Scalar]):
        if isinstance(alpha, Mapping):
            table = {Partition(l): Fraction(c) for l, c in alpha.items()}
            self._alpha = lambda mu: table.get(mu, Fraction(0))
        else:
            self._alpha = lambda mu: Fraction(alpha(mu))

    def __call__(self, lam: Sequence[int]) -> Fraction:
        return sum((self._alpha(mu) for mu in interleaved_below(lam)), Fraction(0))

    def expansion(self, n: int, k: int) -> SchurExpansion:
        return SchurExpansion(k, {lam: self(lam) for lam in enumerate_partitions(n, max_height=k)})


def young_derived(alpha) -> YoungDerived:
    return YoungDerived(alpha)


def young_product_series(alpha: Mapping | Callable, k: int, max_degree: int) -> TruncatedSeries:
    """``prod_i 1/(1-t_i) * sum alpha_mu s_mu`` truncated; the cross-check route."""
    if isinstance(alpha, Mapping):
        items = [(Partition(l), Fraction(c)) for l, c in alpha.items()]
    else:
        items = [
            (mu, Fraction(alpha(mu)))
            for n in range(max_degree + 1)
            for mu in enumerate_partitions(n, max_height=k)
        ]
    base = TruncatedSeries(k, max_degree)
    for mu, c in items:
        if c and mu.size <= max_degree:
            base = base + schur_poly(mu, k).to_truncated(max_degree) * c
    return base * product_of_geometric(k, max_degree)


def product_of_geometric(k: int, max_degree: int, power: int = 1) -> TruncatedSeries:
    """prod_{i<=k} 1/(1-t_i)^power."""
    out = TruncatedSeries(k, max_degree, {(0,) * k: 1})
    for i in range(k):
        g = geometric(ExactPoly.variable(k, i).to_truncated(max_degree))
        for _ in range(power):
            out = out * g
    return out


# -- closed forms of Hilbert series ---------------------------------------------

_FREE_RE = re.compile(r"^free\(?(\d+)\)?$")


def expand_closed_form(name: str, k: int, max_degree: int = 6) -> TruncatedSeries:
    """Truncated expansion of a closed-form Hilbert series.

    ``name`` is one of ``free(d)`` (also ``freeD``), ``ut2``, ``ut2_D``,
    ``ut2_F``.
    """
    if k < 1 or max_degree < 0:
        raise ValueError("need k >= 1 and max_degree >= 0")
    N = max_degree
    one = TruncatedSeries(k, N, {(0,) * k: 1})
    s1 = ExactPoly.power_sum_one(k).to_truncated(N)
    m = _FREE_RE.match(name)
    if m:
        d = int(m.group(1))
        return s1 * (d * d) * geometric(s1 * d)
    P = product_of_geometric(k, N)
    P2 = P * P
    if name in ("ut2", "ut2_self"):
        return one * -3 + P * 2 + (s1 + 1) * P2
    if name == "ut2_D":
        return one * -2 + P * 2 + s1 * P2
    if name == "ut2_F":
        return one * -1 + P * 2 + (s1 - 1) * P2
    raise ValueError(f"unknown closed form {name!r}")


def closed_form_names() -> list[str]:
    return ["free(d)", "ut2", "ut2_D", "ut2_F"]


# -- duplication -------------------------------------------------------------------


def duplication_check(outer: Sequence[int], inner: Sequence[int], l: int, k: int) -> bool:
    """Compare both sides of the skew Schur duplication formula exactly."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    total_vars = l + k
    lhs = skew_schur(outer, inner, total_vars).to_poly()
    rhs = ExactPoly(total_vars)
    for nu in _between(inner, outer):
        left = skew_schur_poly(outer, nu, l).embed(total_vars, 0)
        right = skew_schur_poly(nu, inner, k).embed(total_vars, l)
        rhs = rhs + left * right
    return lhs == rhs


def _between(inner: Partition, outer: Partition) -> Iterator[Partition]:
    ranges = [range(inner.part(i), outer[i] + 1) for i in range(outer.height)]
    seen = set()
    for parts in itertools.product(*ranges):
        if all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            nu = Partition(parts)
            if nu not in seen:
                seen.add(nu)
                yield nu
