"""The acceptance suite: ten exact checks shared by the tests and the CLI."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .algebra import builtin, diagonal, field_algebra, find_unity, semidirect
from .engine import (
    FreeModel,
    VerificationError,
    capelli_landing,
    capelli_report,
    cocharacter,
    codimension,
    hilbert_truncated,
    gl_pipeline_multiplicities,
    multiplicity_bound_check,
)
from .gpoly import format_genpoly
from .partitions import Partition, enumerate_partitions, sn_dimension
from .snrep import (
    branching_check,
    class_representative,
    irreducible_character,
    left_ideal_dimension,
    specht_trace,
    standard_filling,
    young_symmetrizer,
)
from .superalg import desk_cases, graded_polys, tilde_correspondence_check, tilde_roundtrip
from .symfunc import (
    ExactPoly,
    duplication_check,
    expand_closed_form,
    lr_coefficient,
    lr_coefficient_by_expansion,
    schur_poly,
    schur_poly_jt,
    young_derived,
    young_product_series,
)

# built-in W-algebras covered by the whole-catalogue checks
CATALOGUE = ("ut2_self", "ut2_D", "ut2_F", "matrix(2)", "grassmann(3)", "diagonal(2)")


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self, timings: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.seconds:.1f}s)" if timings else ""
        return f"criterion {self.number:>2} {status}  {self.title}{tail}"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


# -- expected tables --------------------------------------------------------------------


def _shape(lam: Partition) -> tuple[str, int, int] | None:
    """Classify lam as (n), (p+q, p) or (p+q, p, 1) with p >= 1; return (kind, p, q)."""
    if lam.height == 1:
        return ("row", 0, lam[0])
    if lam.height == 2:
        return ("two", lam[1], lam[0] - lam[1])
    if lam.height == 3 and lam[2] == 1:
        return ("three", lam[1], lam[0] - lam[1])
    return None


def expected_ut2(n: int, action: str) -> dict[Partition, int]:
    """Multiplicity tables of UT2 with W = UT2, D or F."""
    out = {}
    for lam in enumerate_partitions(n):
        s = _shape(lam)
        if s is None:
            continue
        kind, p, q = s
        if kind == "row":
            m = {"self": 2 * n + 3, "D": n + 2, "F": 1}[action]
        elif kind == "two":
            m = {"self": 3 * (q + 1), "D": 2 * (q + 1), "F": q + 1}[action]
        else:
            m = q + 1
        out[lam] = m
    return out


def _table(result) -> dict[Partition, int]:
    return {lam: int(m) for lam, m in result.multiplicities.items()}


# -- criteria -----------------------------------------------------------------------------------


def _ut2_table_check(name: str, action: str, limit: float, res: CriterionResult) -> bool:
    ok = True
    act = builtin(name)
    for n in range(1, 5):
        t = time.perf_counter()
        got = _table(cocharacter(act, n))
        elapsed = time.perf_counter() - t
        want = expected_ut2(n, action)
        match = got == want
        ok &= match
        res.details.append(f"n={n}: {'match' if match else f'got {got}, expected {want}'} ({elapsed:.2f}s)")
        if elapsed > limit:
            ok = False
            res.details.append(f"n={n}: exceeded {limit:.0f}s")
    return ok


def criterion_1() -> CriterionResult:
    res = CriterionResult(1, "UT2 acting on itself: multiplicity tables n=1..4", False)
    res.passed = _ut2_table_check("ut2_self", "self", 300, res)
    return res


def criterion_2() -> CriterionResult:
    res = CriterionResult(2, "UT2 with W = D: multiplicity tables n=1..4", False)
    res.passed = _ut2_table_check("ut2_D", "D", 120, res)
    return res


def criterion_3() -> CriterionResult:
    res = CriterionResult(3, "Hilbert series against closed forms, k=1,2, N=4", True)
    cases = [(builtin("ut2_self"), "ut2"), (builtin("ut2_D"), "ut2_D"), (builtin("ut2_F"), "ut2_F")]
    cases += [(FreeModel(d), f"free({d})") for d in (1, 2, 3)]
    for act, form in cases:
        for k in (1, 2):
            ok = hilbert_truncated(act, k, 4) == expand_closed_form(form, k, 4)
            res.passed &= ok
            res.details.append(f"{form}, k={k}: {'match' if ok else 'MISMATCH'}")
    return res


def criterion_4() -> CriterionResult:
    res = CriterionResult(4, "S_n and GL pipelines agree on the catalogue, n<=3, k=n", True)
    for name in CATALOGUE:
        act = builtin(name)
        for n in range(1, 4):
            ok = gl_pipeline_multiplicities(act, n, n) == cocharacter(act, n).multiplicities
            res.passed &= ok
            if not ok:
                res.details.append(f"{name}, n={n}: pipelines differ")
        res.details.append(f"{name}: checked n=1..3")
    return res


def criterion_5() -> CriterionResult:
    res = CriterionResult(5, "gc_n = sum m_lambda d_lambda and gl_n = sum m_lambda, n<=4", True)
    for name in CATALOGUE:
        act = builtin(name)
        row = []
        for n in range(1, 5):
            r = cocharacter(act, n)
            rank = codimension(act, n)
            gc_ok = rank == sum(int(m) * sn_dimension(l) for l, m in r.multiplicities.items())
            gl_ok = r.gl == sum(int(m) for m in r.multiplicities.values())
            res.passed &= gc_ok and gl_ok
            row.append(f"gc_{n}={rank} gl_{n}={r.gl}" + ("" if gc_ok and gl_ok else " MISMATCH"))
        res.details.append(f"{name}: " + ", ".join(row))
    return res


def criterion_6() -> CriterionResult:
    res = CriterionResult(6, "multiplicity bound through ordinary cocharacters at 2n+1", True)
    for name in ("ut2_self", "ut2_D"):
        for n in (1, 2):
            try:
                report = multiplicity_bound_check(builtin(name), n)
            except VerificationError as exc:
                res.passed = False
                res.details.append(f"{name}, n={n}: {exc}")
                continue
            res.passed &= report.holds
            cells = ", ".join(f"({l}): {m} <= {b}" for l, m, b in report.rows)
            res.details.append(f"{name}, n={n}: {cells}")
    return res


def criterion_7() -> CriterionResult:
    res = CriterionResult(7, "generalized Capelli set of rank 4 and strip of height 3", True)
    for name in ("ut2_self", "ut2_D", "ut2_F"):
        act = builtin(name)
        ok = capelli_report(act, 4, generalized=True).holds
        res.passed &= ok
        tall = []
        for n in range(1, 5):
            tall += [lam for lam, m in cocharacter(act, n).multiplicities.items() if m and lam.height >= 4]
        res.passed &= not tall
        res.details.append(f"{name}: rank-4 set {'holds' if ok else 'FAILS'}; tall partitions {tall or 'none'}")
    return res


def criterion_8() -> CriterionResult:
    res = CriterionResult(8, "symmetric function cross-checks", True)
    count = 0
    for size in range(7):
        for lam in enumerate_partitions(size):
            for k in range(1, 5):
                if schur_poly(lam, k) != schur_poly_jt(lam, k):
                    res.passed = False
                    res.details.append(f"schur mismatch {lam}, k={k}")
                count += 1
    res.details.append(f"SSYT vs Jacobi-Trudi: {count} pairs")
    count = 0
    for a, b in itertools.product(range(4), repeat=2):
        for lam in enumerate_partitions(a):
            for mu in enumerate_partitions(b):
                for nu in enumerate_partitions(a + b):
                    if lr_coefficient(lam, mu, nu) != lr_coefficient_by_expansion(lam, mu, nu):
                        res.passed = False
                        res.details.append(f"LR mismatch {lam} {mu} {nu}")
                    count += 1
    res.details.append(f"LR tableaux vs expansion: {count} triples")
    count = 0
    for size in range(5):
        for outer in enumerate_partitions(size):
            for s in range(size + 1):
                for inner in enumerate_partitions(s):
                    if not outer.contains(inner):
                        continue
                    for l, k in itertools.product((1, 2), repeat=2):
                        if not duplication_check(outer, inner, l, k):
                            res.passed = False
                            res.details.append(f"duplication fails {outer}/{inner}, l={l}, k={k}")
                        count += 1
    res.details.append(f"duplication formula: {count} cases")
    alphas = {
        "one row": lambda mu: 1 if mu.height <= 1 else 0,
        "finite": {(1,): 2, (1, 1): 1, (2, 1): 3},
        "hooks": lambda mu: 1 if all(p == 1 for p in mu[1:]) else 0,
    }
    for label, alpha in alphas.items():
        for k in (1, 2, 3):
            series = young_product_series(alpha, k, 6)
            y = young_derived(alpha)
            for n in range(7):
                lhs = y.expansion(n, k).to_poly()
                rhs = ExactPoly(k, {e: c for e, c in series.terms.items() if sum(e) == n})
                if lhs != rhs:
                    res.passed = False
                    res.details.append(f"Young-derived mismatch ({label}, k={k}, n={n})")
    res.details.append("Young-derived multiplicities vs product series: degree <= 6, k <= 3")
    return res


def criterion_9() -> CriterionResult:
    res = CriterionResult(9, "symmetric group representation checks", True)
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            tab = standard_filling(lam)
            for mu in enumerate_partitions(n):
                if specht_trace(tab, class_representative(mu)) != irreducible_character(lam, mu):
                    res.passed = False
                    res.details.append(f"character mismatch chi_{lam}({mu})")
            if left_ideal_dimension(young_symmetrizer(tab)) != sn_dimension(lam):
                res.passed = False
                res.details.append(f"ideal dimension mismatch for {lam}")
    res.details.append("Murnaghan-Nakayama vs ideal traces and ideal dimensions: n <= 5")
    for n in range(1, 9):
        if sum(sn_dimension(l) ** 2 for l in enumerate_partitions(n)) != factorial(n):
            res.passed = False
            res.details.append(f"sum of squares fails at n={n}")
    res.details.append("sum d_lambda^2 = n!: n <= 8")
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            if not branching_check(lam):
                res.passed = False
                res.details.append(f"branching fails for {lam}")
    res.details.append("branching rule: n <= 6")
    return res


def criterion_10() -> CriterionResult:
    res = CriterionResult(10, "tilde involution, envelope correspondence, semidirect products", True)
    count = 0
    for W in (field_algebra(), diagonal(2)):
        for l in range(5):
            for m in range(5 - l):
                if l + m == 0:
                    continue
                for f in graded_polys(l, m, W):
                    if not tilde_roundtrip(f):
                        res.passed = False
                        res.details.append(f"tilde not an involution on {format_genpoly(f)}")
                    count += 1
    res.details.append(f"tilde involution: {count} basis monomials (W = F and W = F^2, l + m <= 4)")
    for label, f, S, m in desk_cases():
        if not tilde_correspondence_check(f, S, m):
            res.passed = False
            res.details.append(f"correspondence fails: {label}")
    res.details.append(f"envelope correspondence: {len(desk_cases())} desk cases")
    for name in ("ut2_self", "ut2_D", "ut2_F"):
        act = builtin(name)
        s = semidirect(act)
        unit = find_unity(s.A)
        want = (0,) * act.A.dim + tuple(act.unit_W)
        if unit != want:
            res.passed = False
            res.details.append(f"{name}: semidirect unity {unit}, expected {want}")
    res.details.append("semidirect unity is (0, 1_W) for the three UT2 actions")
    for name in ("ut2_D", "ut2_F"):
        if not capelli_landing(builtin(name)):
            res.passed = False
            res.details.append(f"{name}: Capelli values leave the ideal A")
    res.details.append("Capelli landing in A for dim W <= 2")
    return res


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run_criterion(number: int) -> CriterionResult:
    t = time.perf_counter()
    try:
        res = CRITERIA[number]()
    except VerificationError as exc:
        res = CriterionResult(number, f"criterion {number}", False, [f"verification error: {exc}"])
    res.seconds = time.perf_counter() - t
    return res


def run_all(numbers=None) -> list[CriterionResult]:
    return [run_criterion(k) for k in (numbers or sorted(CRITERIA))]
