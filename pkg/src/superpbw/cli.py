"""Command-line front end.

Exit codes: 0 success, 1 domain error (bad table, parse error, failed
check), 2 usage error (argparse).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from .algebra_io import AlgebraFileError, builtin, load_algebra
from .centers import anticenter_basis, center_basis, hcenter_basis
from .exactq import parse_rational
from .expr import ParseError, normal_form, render
from .pbw import growth_degree
from .superlie import AlgebraError, LieSuperalgebra, MatrixElement, dg, is_pi, supertrace, validate
from .verification import format_report, run_suite

DEFAULT_DEGREE = 3


class DomainError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def _source(p: argparse.ArgumentParser, required: bool = True) -> None:
    grp = p.add_mutually_exclusive_group(required=required)
    grp.add_argument("--builtin", metavar="SPEC", help="gl(m,n), sl(m,n), abelian(p|q), or A (+) B")
    grp.add_argument("--file", metavar="PATH", help="algebra definition file")


def _algebra(args) -> LieSuperalgebra:
    try:
        if args.file is not None:
            return load_algebra(args.file)
        return builtin(args.builtin)
    except OSError as exc:
        raise DomainError(f"cannot read {args.file}: {exc.strerror}") from None
    except AlgebraError as exc:
        raise DomainError(str(exc)) from None


def _valid_algebra(args) -> LieSuperalgebra:
    g = _algebra(args)
    rep = validate(g)
    if not rep.ok:
        raise DomainError(f"invalid algebra {g.label}: {rep}")
    return g


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superpbw", description="Exact computations in U(g) and H(g) for Lie superalgebras g.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", help="check the superalgebra axioms of a bracket table")
    _source(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("nf", help="PBW normal form of an expression")
    _source(p)
    p.add_argument("--bosonized", action="store_true", help="work in H(g); 't' is the grouplike")
    p.add_argument("--json", action="store_true")
    p.add_argument("expr")

    for name, hlp in (
        ("center", "basis of the center of U(g) in degree <= d"),
        ("anticenter", "basis of the anticenter of U(g) in degree <= d"),
        ("hcenter", "basis of the center of H(g) in degree <= d"),
    ):
        p = sub.add_parser(name, help=hlp)
        _source(p)
        p.add_argument("--deg", type=_nonneg, default=DEFAULT_DEGREE, help=f"degree bound (default {DEFAULT_DEGREE})")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("dg", help="determinant of the odd bracket matrix over S(g_0)")
    _source(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("growth", help="polynomial growth degree of dim F_n")
    _source(p)
    p.add_argument("--bosonized", action="store_true")
    p.add_argument("--n-max", type=_nonneg, default=None, help="largest n (default dim g + 8)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("ispi", help="whether U(g) satisfies a polynomial identity")
    _source(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("str", help="supertrace of a block matrix")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("matrix", help="rows separated by ';', entries by ',' (e.g. '1,0;0,1')")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the identity suite")
    _source(p, required=False)
    p.add_argument("--deg", type=_nonneg, default=None, help="also include basis reports at this degree")
    return ap


def cmd_validate(args) -> int:
    g = _algebra(args)
    rep = validate(g)
    _emit(args, str(rep), {"algebra": g.label, "ok": rep.ok, "violations": [v.as_dict() for v in rep.violations]})
    return 0 if rep.ok else 1


def cmd_nf(args) -> int:
    g = _valid_algebra(args)
    try:
        e = normal_form(args.expr, g, args.bosonized)
    except ParseError as exc:
        raise DomainError(f"parse error: {exc}") from None
    text = render(e)
    _emit(args, text, {"algebra": g.label, "bosonized": args.bosonized, "input": args.expr, "normal_form": text})
    return 0


def _basis_cmd(fn):
    def run(args) -> int:
        g = _valid_algebra(args)
        rep = fn(g, args.deg)
        _emit(args, str(rep), rep.as_dict())
        return 0

    return run


cmd_center = _basis_cmd(center_basis)
cmd_anticenter = _basis_cmd(anticenter_basis)
cmd_hcenter = _basis_cmd(hcenter_basis)


def cmd_dg(args) -> int:
    g = _valid_algebra(args)
    d = dg(g)
    _emit(args, str(d), {"algebra": g.label, "variables": list(d.vars), "dg": str(d), "nonzero": not d.is_zero()})
    return 0


def cmd_growth(args) -> int:
    g = _valid_algebra(args)
    n_max = args.n_max if args.n_max is not None else g.dim + 8
    try:
        rep = growth_degree(g, n_max, bosonized=args.bosonized)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    data = {
        "algebra": g.label,
        "bosonized": args.bosonized,
        "n_max": rep.n_max,
        "degree": rep.degree,
        "window": list(rep.window) if rep.window else None,
        "counts": rep.counts,
    }
    _emit(args, str(rep), data)
    return 0 if rep.conclusive else 1


def cmd_ispi(args) -> int:
    g = _valid_algebra(args)
    ans = is_pi(g)
    _emit(args, "true" if ans else "false", {"algebra": g.label, "pi": ans})
    return 0


def _parse_matrix(text: str) -> list[list[Fraction]]:
    try:
        return [[parse_rational(c.strip()) for c in row.split(",")] for row in text.split(";")]
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad matrix entry: {exc}") from None


def cmd_str(args) -> int:
    try:
        X = MatrixElement(_parse_matrix(args.matrix), args.m, args.n)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    s = supertrace(X)
    _emit(args, str(s), {"m": args.m, "n": args.n, "supertrace": str(s)})
    return 0


def cmd_verify(args) -> int:
    g = _valid_algebra(args) if (args.builtin or args.file) else None
    start = time.perf_counter()
    checks = run_suite(g, args.deg)
    print(format_report(checks))
    # timing goes to stderr so stdout stays byte-identical between runs
    print(f"runtime {time.perf_counter() - start:.2f} s", file=sys.stderr)
    failed = [c.name for c in checks if not c.ok]
    if failed:
        print("failed: " + "; ".join(failed), file=sys.stderr)
        return 1
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "nf": cmd_nf,
    "center": cmd_center,
    "anticenter": cmd_anticenter,
    "hcenter": cmd_hcenter,
    "dg": cmd_dg,
    "growth": cmd_growth,
    "ispi": cmd_ispi,
    "str": cmd_str,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AlgebraFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
