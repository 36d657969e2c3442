"""Command line interface: ``gpi <subcommand> ...``.

Exit status 0 on success, 1 when a verification fails, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import verify
from .algebra import AxiomError, SchemaError, WAction, WSuperAlgebra, builtin, builtin_superalgebra, load_algebra
from .engine import (
    FreeModel,
    VerificationError,
    capelli_report,
    cocharacter,
    codimension,
    first_nonvanishing_basis,
    gl_pipeline_multiplicities,
    hilbert_truncated,
    is_identity,
    multiplicity_bound_check,
    worker_count,
)
from .gpoly import format_genpoly, parse_genpoly
from .partitions import format_partition
from .superalg import desk_cases, graded_is_identity, tilde, tilde_correspondence_check
from .symfunc import expand_closed_form

_FREE_RE = re.compile(r"^free\(?(\d+)\)?$")


class InputError(Exception):
    """Bad algebra document, polynomial or flag combination."""


def _read_text(value: str) -> str:
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    return value


def load_target(spec: str, validate: bool = True):
    """Built-in name, ``free(d)``, or path to an algebra document."""
    m = _FREE_RE.match(spec)
    if m:
        return FreeModel(int(m.group(1)))
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as fh:
            return load_algebra(fh.read(), validate=validate)
    try:
        return builtin_superalgebra(spec)
    except KeyError:
        pass
    try:
        return builtin(spec)
    except KeyError:
        raise InputError(f"unknown algebra {spec!r}: not a built-in name or a readable file") from None


def _action(target) -> WAction:
    if isinstance(target, WSuperAlgebra):
        return target.action
    if isinstance(target, WAction):
        return target
    raise InputError("this subcommand needs a finite-dimensional W-algebra, not the free algebra")


def _superalgebra(target) -> WSuperAlgebra:
    if isinstance(target, WSuperAlgebra):
        return target
    raise InputError("this subcommand needs an algebra document with a parity field")


def _target_name(target) -> str:
    if isinstance(target, WSuperAlgebra):
        return target.action.name
    return getattr(target, "name", "")


def _emit(args, text: str, doc) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _table_doc(exp) -> list:
    return [[list(lam), int(m)] for lam, m in exp.items()]


def _table_text(exp) -> str:
    width = max([len(format_partition(l)) for l in exp] + [6])
    lines = [f"{'lambda':<{width}}  m_lambda"]
    for lam, m in exp.items():
        lines.append(f"{format_partition(lam):<{width}}  {int(m):>8}")
    return "\n".join(lines)


# -- subcommands ----------------------------------------------------------------------------


def cmd_codim(args) -> int:
    target = load_target(args.algebra, not args.no_validate)
    if isinstance(target, WSuperAlgebra):
        target = target.action
    gc = codimension(target, args.n)
    _emit(args, f"gc_{args.n} = {gc}", {"algebra": _target_name(target), "n": args.n, "gc": gc})
    return 0


def cmd_cocharacter(args) -> int:
    target = load_target(args.algebra, not args.no_validate)
    if isinstance(target, WSuperAlgebra):
        target = target.action
    doc = {"algebra": _target_name(target), "n": args.n}
    parts = []
    sn = gl = None
    if args.pipeline in ("sn", "both"):
        res = cocharacter(target, args.n, method=args.method)
        sn = res.multiplicities
        doc.update(gc=res.gc, gl=res.gl, sn=_table_doc(sn))
        parts.append("S_n pipeline\n" + _table_text(sn) + f"\ngc_{args.n} = {res.gc}\ngl_{args.n} = {res.gl}")
    if args.pipeline in ("gl", "both"):
        gl = gl_pipeline_multiplicities(target, args.n, args.n)
        doc["gl_pipeline"] = _table_doc(gl)
        parts.append("GL pipeline\n" + _table_text(gl))
    status = 0
    if sn is not None and gl is not None:
        agree = sn == gl
        doc["pipelines_agree"] = agree
        parts.append("pipelines agree" if agree else "PIPELINES DISAGREE")
        status = 0 if agree else 1
    _emit(args, "\n\n".join(parts), doc)
    return status


def cmd_hilbert(args) -> int:
    target = load_target(args.algebra, not args.no_validate)
    if isinstance(target, WSuperAlgebra):
        target = target.action
    series = hilbert_truncated(target, args.k, args.N)
    doc = {
        "algebra": _target_name(target),
        "k": args.k,
        "N": args.N,
        "series": [[list(e), int(c)] for e, c in sorted(series.terms.items())],
    }
    text = series.render()
    status = 0
    if args.closed_form:
        try:
            expected = expand_closed_form(args.closed_form, args.k, args.N)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        match = expected == series
        doc["closed_form"] = args.closed_form
        doc["match"] = match
        text += "\n" + ("MATCH" if match else "MISMATCH")
        status = 0 if match else 1
    _emit(args, text, doc)
    return status


def cmd_check_identity(args) -> int:
    target = load_target(args.algebra, not args.no_validate)
    text = _read_text(args.poly)
    if args.graded:
        S = _superalgebra(target)
        f = parse_genpoly(text, S.W, graded=True)
        verdict = graded_is_identity(f, S)
    else:
        act = _action(target)
        f = parse_genpoly(text, act.W)
        verdict = is_identity(f, act)
    doc = {"algebra": _target_name(target), "polynomial": format_genpoly(f), "identity": verdict}
    out = "IDENTITY" if verdict else "NOT AN IDENTITY"
    if not verdict and not args.graded:
        witness = first_nonvanishing_basis(f, act)
        if witness:
            doc["witness"] = witness
            out += "\nwitness: " + ", ".join(f"{v} = {b}" for v, b in witness.items())
    _emit(args, out, doc)
    return 0


def cmd_capelli(args) -> int:
    act = _action(load_target(args.algebra, not args.no_validate))
    rep = capelli_report(act, args.m, generalized=args.generalized)
    doc = {"algebra": act.name, "m": args.m, "generalized": args.generalized, "identity": rep.holds}
    if rep.witness:
        doc["witness"] = rep.witness
    _emit(args, rep.render(), doc)
    return 0


def cmd_bound(args) -> int:
    act = _action(load_target(args.algebra, not args.no_validate))
    try:
        rep = multiplicity_bound_check(act, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(args, rep.render(), {"algebra": act.name, **rep.to_dict()})
    return 0


def cmd_verify_paper(args) -> int:
    numbers = None
    if args.criteria:
        try:
            numbers = sorted({int(x) for x in args.criteria.split(",")})
        except ValueError:
            raise InputError("--criteria takes a comma separated list of integers") from None
        bad = [k for k in numbers if k not in verify.CRITERIA]
        if bad:
            raise InputError(f"unknown criteria {bad}")
    results = verify.run_all(numbers)
    if args.json:
        docs = [r.to_dict() for r in results]
        if not args.timings:
            for d in docs:
                d.pop("seconds")
        print(json.dumps({"criteria": docs, "passed": all(r.passed for r in results)}, indent=2, sort_keys=True))
    else:
        for r in results:
            print(r.line(timings=args.timings))
            if args.verbose:
                for d in r.details:
                    print(f"    {d}")
        print("ALL PASS" if all(r.passed for r in results) else "SOME CRITERIA FAILED")
    return 0 if all(r.passed for r in results) else 1


def cmd_envelope_check(args) -> int:
    if args.poly:
        if not args.algebra:
            raise InputError("--poly needs --algebra naming a superalgebra")
        S = _superalgebra(load_target(args.algebra, not args.no_validate))
        f = parse_genpoly(_read_text(args.poly), S.W, graded=True)
        m = args.m or max(f.degree(), 1)
        cases = [("given polynomial", f, S, m)]
    else:
        cases = desk_cases()
    rows = []
    ok_all = True
    for label, f, S, m in cases:
        ok = tilde_correspondence_check(f, S, m)
        ok_all &= ok
        rows.append({"case": label, "polynomial": format_genpoly(f), "tilde": format_genpoly(tilde(f)), "m": m, "holds": ok})
    text = "\n".join(f"{'HOLDS' if r['holds'] else 'FAILS'}  {r['case']}" for r in rows)
    _emit(args, text, {"cases": rows, "passed": ok_all})
    return 0 if ok_all else 1


# -- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default="ut2_self", help="built-in name, free(d), or JSON document path")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--no-validate", action="store_true", help="skip axiom validation of documents")

    p = argparse.ArgumentParser(prog="gpi", description="Generalized polynomial identities of W-algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("codim", parents=[common], help="generalized codimension gc_n")
    s.add_argument("-n", type=_positive, required=True)
    s.set_defaults(func=cmd_codim)

    s = sub.add_parser("cocharacter", parents=[common], help="cocharacter multiplicities")
    s.add_argument("-n", type=_positive, required=True)
    s.add_argument("--pipeline", choices=("sn", "gl", "both"), default="sn")
    s.add_argument("--method", choices=("both", "kernel", "image"), default="both", help="trace computation")
    s.set_defaults(func=cmd_cocharacter)

    s = sub.add_parser("hilbert", parents=[common], help="truncated Hilbert series")
    s.add_argument("-k", type=_positive, required=True)
    s.add_argument("-N", type=_positive, required=True)
    s.add_argument("--closed-form", help="compare with free(d), ut2, ut2_D or ut2_F")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("check-identity", parents=[common], help="test a generalized polynomial")
    s.add_argument("--poly", required=True, help="polynomial text or a file containing it")
    s.add_argument("--graded", action="store_true", help="y even, z odd; needs a superalgebra")
    s.set_defaults(func=cmd_check_identity)

    s = sub.add_parser("capelli", parents=[common], help="Capelli polynomial of rank m")
    s.add_argument("-m", type=_positive, required=True)
    s.add_argument("--generalized", action="store_true", help="include every W-specialization")
    s.set_defaults(func=cmd_capelli)

    s = sub.add_parser("bound", parents=[common], help="multiplicity bound via ordinary cocharacters")
    s.add_argument("-n", type=_positive, required=True)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("verify-paper", help="run the acceptance suite")
    s.add_argument("--json", action="store_true")
    s.add_argument("--criteria", help="comma separated subset, e.g. 1,3")
    s.add_argument("--timings", action="store_true", help="include wall-clock seconds")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_verify_paper)

    s = sub.add_parser("envelope-check", help="Grassmann envelope correspondence")
    s.add_argument("--algebra", help="superalgebra: grassmann(m), ut2_graded_D or a document with parity")
    s.add_argument("--poly", help="graded polynomial in y*/z*; default runs the desk cases")
    s.add_argument("-m", type=_positive, help="number of Grassmann generators")
    s.add_argument("--json", action="store_true")
    s.add_argument("--no-validate", action="store_true")
    s.set_defaults(func=cmd_envelope_check)
    return p


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        worker_count()
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (InputError, SchemaError, AxiomError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
