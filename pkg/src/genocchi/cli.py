"""Command-line interface.

    genocchi bernoulli --max-n 12
    genocchi genocchi --a 3 --max-n 10 --method both
    genocchi triangle --max-n 8
    genocchi sigma --n 2 --eval 3
    genocchi ivp-check --poly "0,1/3,-1/2,1/6"
    genocchi verify --suite all
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .bernoulli import bernoulli_numbers, classical_genocchi
from .genocchi import certify, genocchi_by_recurrence, genocchi_by_series
from .ivp import (
    certify_integer_valued,
    newton_expand,
    scaled_reciprocal_probe,
    sigma_brute_force,
    sigma_poly,
    triangle,
)
from .numerics import format_rational
from .polynomial import parse_polynomial
from .verify import SUITES, VerifyConfig, run_suites

FORMATS = ("json", "csv", "markdown-table")


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}:{_cell(x)}" for k, x in v.items())
    return format_rational(v) if isinstance(v, int) or hasattr(v, "denominator") else str(v)


def _jsonable(v: Any) -> Any:
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if hasattr(v, "denominator"):
        return format_rational(v)
    return v


def render(rows: list[dict[str, Any]], columns: list[str], fmt: str) -> str:
    """Render homogeneous records. Missing keys become empty cells."""
    if fmt == "json":
        return json.dumps([{c: _jsonable(r.get(c)) for c in columns if c in r} for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_cell(r.get(c)) for c in columns])
        return buf.getvalue()
    if fmt == "markdown-table":
        lines = ["| " + " | ".join(columns) + " |", "|" + "|".join("---" for _ in columns) + "|"]
        for r in rows:
            lines.append("| " + " | ".join(_cell(r.get(c)) for c in columns) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def cmd_bernoulli(args: argparse.Namespace) -> int:
    b = bernoulli_numbers(args.max_n)
    g = classical_genocchi(args.max_n)
    rows = [{"n": n, "B_n": b[n], "G_n": Fraction(g[n])} for n in range(args.max_n + 1)]
    sys.stdout.write(render(rows, ["n", "B_n", "G_n"], args.format))
    return 0


def cmd_genocchi(args: argparse.Namespace) -> int:
    if args.a < 2:
        raise SystemExit("genocchi: --a must be >= 2")
    if args.certify:
        report = certify(args.a, args.max_n)
        columns = ["a", "n", "value", "den_bound_ok", "valuations"]
        sys.stdout.write(render(report, columns, args.format))
        bad = [r for r in report if not r["den_bound_ok"] or any(v != "inf" and v < 0 for v in r["valuations"].values())]
        return 1 if bad else 0
    status = 0
    if args.method == "both":
        s = genocchi_by_series(args.a, args.max_n)
        r = genocchi_by_recurrence(args.a, args.max_n)
        rows = [{"n": n, "series": s[n], "recurrence": r[n], "agree": s[n] == r[n]} for n in range(args.max_n + 1)]
        columns = ["n", "series", "recurrence", "agree"]
        status = 0 if all(row["agree"] for row in rows) else 1
    else:
        table = genocchi_by_series(args.a, args.max_n) if args.method == "series" else genocchi_by_recurrence(args.a, args.max_n)
        rows = [{"n": n, f"G_n,{args.a}": table[n]} for n in range(args.max_n + 1)]
        columns = ["n", f"G_n,{args.a}"]
    sys.stdout.write(render(rows, columns, args.format))
    return status


def cmd_triangle(args: argparse.Namespace) -> int:
    rows = triangle(args.max_n)
    if args.format == "json":
        out = [{"n": r.n, "entries": [format_rational(e) for e in (r.padded() if args.pad_zeros else r.entries)]} for r in rows]
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
        return 0
    width = max((len(r.padded()) for r in rows), default=0)
    columns = ["n"] + [f"k={k}" for k in range(width)]
    records = []
    for r in rows:
        entries = r.padded() if args.pad_zeros else r.entries
        rec: dict[str, Any] = {"n": r.n}
        rec.update({f"k={k}": e for k, e in enumerate(entries)})
        records.append(rec)
    sys.stdout.write(render(records, columns, args.format))
    return 0


def cmd_sigma(args: argparse.Namespace) -> int:
    p = sigma_poly(args.n)
    rec: dict[str, Any] = {"n": args.n, "sigma_n": str(p), "coefficients": list(p.coeffs)}
    columns = ["n", "sigma_n", "coefficients"]
    status = 0
    if args.eval is not None:
        if args.eval < 0:
            raise SystemExit("sigma: --eval must be a natural number")
        rec["a"] = args.eval
        rec["value"] = p(args.eval)
        rec["brute_force"] = Fraction(sigma_brute_force(args.n, args.eval))
        columns += ["a", "value", "brute_force"]
        status = 0 if rec["value"] == rec["brute_force"] else 1
    sys.stdout.write(render([rec], columns, args.format))
    return status


def cmd_ivp_check(args: argparse.Namespace) -> int:
    try:
        p = parse_polynomial(args.poly)
    except (ValueError, ZeroDivisionError) as exc:
        raise SystemExit(f"ivp-check: {exc}")
    nb = certify_integer_valued(p, "newton_basis")
    cs = certify_integer_valued(p, "consecutive_sampling")
    rec: dict[str, Any] = {
        "poly": str(p),
        "degree": p.degree,
        "newton": list(newton_expand(p).coeffs),
        "newton_basis": nb.is_integer_valued,
        "consecutive_sampling": cs.is_integer_valued,
        "witness": nb.witness,
    }
    columns = list(rec)
    if not p.is_zero():
        probe = scaled_reciprocal_probe(p)
        rec["scaled_reciprocal_ivp"] = probe.scaled_reciprocal_ivp
        rec["scaled_reciprocal_witness"] = probe.witness
        columns += ["scaled_reciprocal_ivp", "scaled_reciprocal_witness"]
    sys.stdout.write(render([rec], columns, args.format))
    return 0 if nb.is_integer_valued == cs.is_integer_valued else 1


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = VerifyConfig(
        max_a=args.max_a,
        max_n=args.max_n,
        poly_max_n=args.poly_max_n,
        instances=args.instances,
        seed=args.seed,
    )
    reports = run_suites(args.suite, cfg)
    rows = []
    for rep in reports:
        row: dict[str, Any] = {"suite": rep.suite, "cases": rep.cases, "failures": len(rep.failures), "status": "pass" if rep.ok else "FAIL"}
        if args.timings:
            row["seconds"] = f"{rep.seconds:.3f}"
        if args.format == "json":
            row["failures"] = rep.failures
        rows.append(row)
    columns = ["suite", "cases", "failures", "status"] + (["seconds"] if args.timings else [])
    sys.stdout.write(render(rows, columns, args.format))
    failed = [rep for rep in reports if not rep.ok]
    if failed and args.format != "json":
        for rep in failed:
            for f in rep.failures[:20]:
                print(f"{rep.suite}: {json.dumps(f)}", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="markdown-table")

    parser = argparse.ArgumentParser(
        prog="genocchi",
        description="Exact generalized Genocchi numbers and integer-valued polynomial certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>", required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="table of B_n and classical Genocchi G_n")
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("genocchi", parents=[common], help="generalized Genocchi numbers G_{n,a}")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--method", choices=("series", "recurrence", "both"), default="series")
    p.add_argument("--certify", action="store_true", help="emit denominator and valuation certificates")
    p.set_defaults(func=cmd_genocchi)

    p = sub.add_parser("triangle", parents=[common], help="Newton coefficients a_{n,k} of G_n(X)")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--pad-zeros", action="store_true", help="show the zero a_{n,n-1} on even rows")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("sigma", parents=[common], help="power-sum polynomial sigma_n(X)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval", type=int)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("ivp-check", parents=[common], help="certify a polynomial integer-valued")
    p.add_argument("--poly", required=True, help='coefficients, lowest degree first, e.g. "0,1/2,1/2"')
    p.set_defaults(func=cmd_ivp_check)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", nargs="+", choices=["all", *SUITES], default=["all"])
    p.add_argument("--max-a", type=int, default=12)
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--poly-max-n", type=int, default=30)
    p.add_argument("--instances", type=int, default=200)
    p.add_argument("--seed", type=int, default=VerifyConfig.seed)
    p.add_argument("--timings", action="store_true", help="include wall time (output no longer deterministic)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("max_n", "n", "poly_max_n", "instances"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
