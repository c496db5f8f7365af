"""Command-line front end: ``sturm-inertia {chain,matrix,count,isolate,verify}``.

Errors are reported on stderr as a single line ``E_<CODE>: message``.
Exit status: 0 success, 1 usage or parse error, 2 mathematical precondition
violated, 3 a theorem check disagreed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .chain import SturmChain, build_chain, refine, variation_at
from .matrix import build_matrix, trailing_minor_polys
from .parsing import ParseError, parse_poly, parse_rational
from .poly import Polynomial, cauchy_bound
from .roots import MultipleRootError, count_roots, count_roots_variation, isolate_roots, q_of_matrix

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_DISAGREEMENT = 3


class CliError(Exception):
    def __init__(self, code: str, message: str, status: int):
        super().__init__(message)
        self.code = code
        self.status = status


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("E_USAGE", message, EXIT_USAGE)


def rat(a: Fraction) -> str:
    return f"{a.numerator}/{a.denominator}"


def poly_doc(p: Polynomial) -> dict[str, Any]:
    return {"text": str(p), "coefficients": [rat(c) for c in p.coeffs]}


def _poly_arg(text: str, what: str) -> Polynomial:
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise CliError("E_PARSE", f"{what}: {exc}", EXIT_USAGE) from None


def _rational_arg(text: str, what: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise CliError("E_PARSE", f"{what}: {exc}", EXIT_USAGE) from None


def _chain_args(args) -> tuple[Polynomial, Polynomial, SturmChain]:
    f = _poly_arg(args.f, "f")
    g = _poly_arg(args.g, "--g") if args.g is not None else f.derivative()
    try:
        return f, g, build_chain(f, g)
    except ValueError as exc:
        raise CliError("E_PRECONDITION", str(exc), EXIT_PRECONDITION) from None


def cmd_chain(args) -> tuple[dict[str, Any], list[str], int]:
    f, g, c = _chain_args(args)
    doc = {
        "m": c.m,
        "chain": [poly_doc(p) for p in c.chain],
        "quotients": [poly_doc(d) for d in c.quotients],
    }
    lines = [f"f{i} = {p}" for i, p in enumerate(c.chain)]
    lines += [f"d{i} = {d}" for i, d in enumerate(c.quotients, start=1)]
    return doc, lines, EXIT_OK


def cmd_matrix(args) -> tuple[dict[str, Any], list[str], int]:
    f, g, c = _chain_args(args)
    S = build_matrix(c)
    minors = trailing_minor_polys(S)
    doc = {
        "m": S.m,
        "diagonal": [poly_doc(d) for d in S.diag],
        "trailing_minors": [poly_doc(D) for D in minors],
    }
    lines = [f"m = {S.m}"]
    lines += [f"d{i} = {d}" for i, d in enumerate(S.diag, start=1)]
    lines += [f"D{i} = {D}" for i, D in enumerate(minors, start=1)]
    return doc, lines, EXIT_OK


def _require_nonconstant(f: Polynomial) -> None:
    if f.is_constant():
        raise CliError("E_PRECONDITION", f"f must be non-constant, got {f}", EXIT_PRECONDITION)


def cmd_count(args) -> tuple[dict[str, Any], list[str], int]:
    f = _poly_arg(args.f, "f")
    _require_nonconstant(f)
    a = _rational_arg(args.lo, "--from")
    b = _rational_arg(args.hi, "--to")
    if not a < b:
        raise CliError("E_PRECONDITION", f"need --from < --to, got {a} and {b}", EXIT_PRECONDITION)
    doc: dict[str, Any] = {"method": args.method}
    lines: list[str] = []
    status = EXIT_OK
    if args.method == "variation":
        try:
            n = count_roots_variation(f, a, b)
        except MultipleRootError as exc:
            raise CliError("E_MULTIPLE_ROOT", str(exc), EXIT_PRECONDITION) from None
        doc["count_variation"] = n
        lines.append(f"variation: {n}")
        return doc, lines, status

    report = count_roots(f, a, b, variation=args.method == "both")
    doc.update(count_inertia=report.count_inertia, qa=report.qa, qb=report.qb)
    lines.append(f"inertia: {report.count_inertia} (q(a) = {report.qa}, q(b) = {report.qb})")
    if args.method == "both":
        doc["count_variation"] = report.count_variation
        doc["agreement"] = report.agreement
        if report.count_variation is None:
            lines.append("variation: n/a (an endpoint is a multiple root)")
            lines.append("agreement: n/a")
        else:
            lines.append(f"variation: {report.count_variation}")
            lines.append(f"agreement: {str(report.agreement).lower()}")
        if report.agreement is False:
            status = EXIT_DISAGREEMENT
    return doc, lines, status


def cmd_isolate(args) -> tuple[dict[str, Any], list[str], int]:
    f = _poly_arg(args.f, "f")
    _require_nonconstant(f)
    intervals = isolate_roots(f)
    doc = {"intervals": [{"lo": rat(iv.lo), "hi": rat(iv.hi)} for iv in intervals]}
    return doc, [str(iv) for iv in intervals], EXIT_OK


def _sample_points(rng: random.Random, bound: Fraction, n: int) -> list[Fraction]:
    span = int(bound) + 2
    pts = []
    for _ in range(n):
        den = rng.randint(1, 16)
        pts.append(Fraction(rng.randint(-span * den, span * den), den))
    return pts


def cmd_verify(args) -> tuple[dict[str, Any], list[str], int]:
    f, g, c = _chain_args(args)
    if args.samples < 0:
        raise CliError("E_USAGE", "--samples must be nonnegative", EXIT_USAGE)
    S = build_matrix(c)
    rng = random.Random(args.seed)
    points = _sample_points(rng, cauchy_bound(f), args.samples)

    checked = skipped = 0
    mismatches = []
    for a in points:
        if c.last(a) == 0:
            skipped += 1
            continue
        checked += 1
        q = q_of_matrix(S, a, method="congruence")
        v = variation_at(c, a)
        if q != v:
            mismatches.append({"point": rat(a), "q": q, "V": v})

    refined = refine(c)
    minors = trailing_minor_polys(S)
    m = c.m
    bad_minors = [i for i in range(1, m + 1) if minors[i - 1] != refined.chain[m - i]]

    var_ok, minor_ok = not mismatches, not bad_minors
    doc = {
        "seed": args.seed,
        "samples": args.samples,
        "checks": {
            "theorem_var": {
                "passed": var_ok,
                "checked": checked,
                "skipped_common_roots": skipped,
                "mismatches": mismatches,
            },
            "minor_identity": {"passed": minor_ok, "m": m, "failing_indices": bad_minors},
        },
    }
    lines = [
        f"theorem-var: {'PASS' if var_ok else 'FAIL'} "
        f"({checked} points checked, {skipped} skipped as common roots)",
    ]
    lines += [f"  mismatch at x = {d['point']}: q = {d['q']}, V = {d['V']}" for d in mismatches[:5]]
    lines.append(
        f"minor-identity: {'PASS' if minor_ok else 'FAIL'} (m = {m}"
        + (f", failing D_i for i in {bad_minors})" if bad_minors else ")")
    )
    return doc, lines, EXIT_OK if var_ok and minor_ok else EXIT_DISAGREEMENT


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="sturm-inertia",
        description="Count and isolate real roots by Sturm sequences and Sturm-matrix inertia.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def common(p, with_g: bool):
        p.add_argument("f", help="polynomial in x, e.g. '(x-1)^2*(x+2)'")
        if with_g:
            p.add_argument("--g", default=None, help="second polynomial (default: f')")
        p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("chain", help="print the Sturm chain and quotients")
    common(p, True)
    p.set_defaults(handler=cmd_chain)

    p = sub.add_parser("matrix", help="print the Sturm matrix diagonal and trailing minors")
    common(p, True)
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("count", help="count distinct real roots in (from, to]")
    common(p, False)
    p.add_argument("--from", dest="lo", required=True, help="left endpoint p or p/q")
    p.add_argument("--to", dest="hi", required=True, help="right endpoint p or p/q")
    p.add_argument("--method", choices=("variation", "inertia", "both"), default="both")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("isolate", help="one half-open interval per distinct real root")
    common(p, False)
    p.set_defaults(handler=cmd_isolate)

    p = sub.add_parser("verify", help="randomized self-check of q(S(a)) = V(a) and D_i = f~_{m-i}")
    common(p, True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_verify)
    return parser


def _protect_negatives(argv: Sequence[str]) -> list[str]:
    # argparse takes "-x^2" or "-1/2" for an option flag; a leading space makes
    # it a plain value and both parsers skip surrounding whitespace
    return [f" {a}" if a.startswith("-") and not a.startswith("--") and a != "-h" else a for a in argv]


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = build_parser().parse_args(_protect_negatives(argv))
        doc, lines, status = args.handler(args)
    except CliError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return exc.status
    if args.format == "structured":
        inputs = {
            k: v.strip() if isinstance(v, str) else v
            for k, v in vars(args).items()
            if k not in ("handler", "format", "command")
        }
        out = {"command": args.command, "inputs": inputs, "results": doc, "exit_status": status}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    if status == EXIT_DISAGREEMENT:
        print("E_DISAGREEMENT: a theorem check failed", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
