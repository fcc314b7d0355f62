"""
Command-line front end.

Every subcommand returns a CommandResult; payloads (JSON, CSV or SVG) go
to stdout, diagnostics to stderr through the tagged loggers.

Exit codes: 0 ok, 1 verification failure, 2 usage / config / cap,
3 invalid triple or parameters, 4 pole or singular system.
"""
from __future__ import annotations

import argparse
import io
import json
import random
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath

from app.core.config import MIN_PRECISION_BITS, PRECISION_BITS, Limits, load_limits
from app.core.errors import CapExceededError, InvalidParamsError, SkeinError
from app.core.log import get_logger
from app.gauss import (
    gauss_sum,
    lehmer_scan,
    render_svg,
    sign_pattern_threshold,
    sign_scan,
    van_wamelen_residual,
    write_csv,
)
from app.handlebody import BasisTriple
from app.invariants import Framing, invariant_sum, prop_checks
from app.reduction import Reducer, check_relations, relation_consistency, relation_grid
from app.relations import CASE_IDS, RelationId, relation_vector, verify_case_determinant
from app.tloracle import verify_oracle

logger = get_logger(__name__, "CLI")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_POLE = 4


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: str = ""


@dataclass(frozen=True)
class Context:
    limits: Limits
    precision: int
    rng: random.Random


def _json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _complex_json(z: mpmath.mpc) -> list[str]:
    return [mpmath.nstr(z.real, 30), mpmath.nstr(z.imag, 30)]


# ----- handlers -----

def cmd_reduce(args, ctx: Context) -> CommandResult:
    triple = BasisTriple(args.a, args.b, args.c)
    element = Reducer(ctx.limits).reduce(triple)
    return CommandResult(EXIT_OK, _json({"triple": list(triple.as_tuple()), **element.to_json()}))


def cmd_relation(args, ctx: Context) -> CommandResult:
    rid = RelationId(args.slide, args.alpha, args.beta, args.gamma)
    vector = relation_vector(rid)
    return CommandResult(EXIT_OK, _json({"relation": str(rid), **vector.to_json()}))


def cmd_verify_cases(args, ctx: Context) -> CommandResult:
    cases = [args.case] if args.case else list(CASE_IDS)
    reports = [verify_case_determinant(c, args.max, ctx.limits.unit_search_max) for c in cases]
    exact_ok = all(report.exact_ok for report in reports)
    ok = all(report.ok for report in reports) and (exact_ok or not args.exact)
    payload = {
        "ok": ok,
        "exact_ok": exact_ok,
        "inexact_cases": [report.case_id for report in reports if not report.exact_ok],
        "max": args.max,
        "cases": [report.to_json() for report in reports],
    }
    return CommandResult(EXIT_OK if ok else EXIT_FAILED, _json(payload))


def cmd_verify_oracle(args, ctx: Context) -> CommandResult:
    cap = ctx.limits.oracle_cap if args.cap is None else args.cap
    if cap > ctx.limits.oracle_cap:
        raise CapExceededError(f"--cap {cap} exceeds the configured oracle_cap {ctx.limits.oracle_cap}")
    report = verify_oracle(cap, ctx.limits)
    return CommandResult(EXIT_OK if report.ok else EXIT_FAILED, _json(report.to_json()))


def cmd_verify_relations(args, ctx: Context) -> CommandResult:
    slides = [args.slide] if args.slide else [1, 2, 3, 4, 5, 6]
    reducer = Reducer(ctx.limits)
    if args.sample:
        grid = relation_grid(args.max, slides)
        picked = sorted(ctx.rng.sample(grid, min(args.sample, len(grid))), key=str)
        report = check_relations(picked, reducer)
    else:
        report = relation_consistency(args.max, slides, reducer)
    return CommandResult(EXIT_OK if report.ok else EXIT_FAILED, _json(report.to_json()))


def cmd_invariant(args, ctx: Context) -> CommandResult:
    framing = Framing(args.framing)
    value = invariant_sum(args.r, args.skein, framing)
    payload = {
        "r": args.r,
        "skein": [0, 0, args.skein],
        "framing": framing.value,
        "value": value.to_json(),
        "complex": _complex_json(value.to_complex(ctx.precision)),
    }
    exit_code = EXIT_OK
    if args.check:
        report = prop_checks(args.r, framing)
        payload["checks"] = report.to_json()
        exit_code = EXIT_OK if report.ok else EXIT_FAILED
    return CommandResult(exit_code, _json(payload))


def cmd_scan(args, ctx: Context) -> CommandResult:
    rows = sign_scan(args.rmin, args.rmax, ctx.precision, ctx.limits)
    threshold = sign_pattern_threshold(rows)
    logger.info("mod-16 sign pattern holds from r=%s", threshold)
    disagreeing = [row.r for row in rows if not row.routes_agree]
    if disagreeing:
        logger.error("routes disagree at r in %s", disagreeing)
    exit_code = EXIT_FAILED if disagreeing else EXIT_OK
    if args.out == "svg":
        return CommandResult(exit_code, render_svg(rows))
    out = io.StringIO()
    write_csv(rows, out)
    return CommandResult(exit_code, out.getvalue())


def cmd_gauss(args, ctx: Context) -> CommandResult:
    value = gauss_sum(args.N, args.m, ctx.precision)
    return CommandResult(EXIT_OK, _json({"N": args.N, "m": args.m, "value": _complex_json(value)}))


def cmd_vanwamelen(args, ctx: Context) -> CommandResult:
    if args.rmin % 2 == 0 or args.rmax % 2 == 0 or args.rmin < 3 or args.rmin > args.rmax:
        raise InvalidParamsError(f"need odd 3 <= rmin <= rmax, got {args.rmin}..{args.rmax}")
    tolerance = mpmath.mpf(args.tol)
    rows = []
    for r in range(args.rmin, args.rmax + 1, 2):
        residual = van_wamelen_residual(r, ctx.precision)
        rows.append({"r": r, "residual": mpmath.nstr(residual, 5), "ok": bool(residual < tolerance)})
    ok = all(row["ok"] for row in rows)
    return CommandResult(EXIT_OK if ok else EXIT_FAILED, _json({"ok": ok, "tolerance": args.tol, "rows": rows}))


def cmd_lehmer(args, ctx: Context) -> CommandResult:
    report = lehmer_scan(args.Ns, ctx.precision)
    return CommandResult(EXIT_OK if report.ok else EXIT_FAILED, _json(report.to_json()))


# ----- parser -----

def _odd(value: str) -> int:
    n = int(value)
    if n % 2 == 0:
        raise argparse.ArgumentTypeError(f"{n} is not odd")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skein", description="Exact skein computations for the quaternionic manifold.")
    parser.add_argument("--precision", type=int, default=None, help="binary precision for numerics")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")
    parser.add_argument("--config", default=None, help="TOML file with a [limits] table")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("reduce", cmd_reduce, "rewrite a triple on the five generators")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)

    p = add("relation", cmd_relation, "dump a handle-slide relation")
    p.add_argument("slide", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--gamma", type=int)

    p = add("verify-cases", cmd_verify_cases, "check case determinants against their closed forms")
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--case", type=int, choices=CASE_IDS)
    p.add_argument("--exact", action="store_true", help="also require det == closed form exactly")

    p = add("verify-oracle", cmd_verify_oracle, "check closed forms against diagram expansion")
    p.add_argument("--cap", type=int, default=None)

    p = add("verify-relations", cmd_verify_relations, "check that every relation reduces to zero")
    p.add_argument("--max", type=int, default=4)
    p.add_argument("--slide", type=int, choices=range(1, 7))
    p.add_argument("--sample", type=int, default=0, help="check a seeded random subset of this size")

    p = add("invariant", cmd_invariant, "level-r invariant with skein (0,0,c)")
    p.add_argument("--r", type=_odd, required=True)
    p.add_argument("--skein", type=int, choices=(0, 1, 2), default=0)
    p.add_argument("--framing", choices=[f.value for f in Framing], default=Framing.UNSIGNED.value)
    p.add_argument("--check", action="store_true", help="also verify the level-r identities")

    p = add("scan", cmd_scan, "mod-16 sign scan of (1 - A^4) I_r(M)")
    p.add_argument("--rmin", type=_odd, default=17)
    p.add_argument("--rmax", type=_odd, default=301)
    p.add_argument("--out", choices=("csv", "svg"), default="csv")

    p = add("gauss", cmd_gauss, "incomplete Gauss sum g_N(m)")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("vanwamelen", cmd_vanwamelen, "residual of the van Wamelen identity")
    p.add_argument("--rmin", type=int, default=3)
    p.add_argument("--rmax", type=int, default=301)
    p.add_argument("--tol", default="1e-25")

    p = add("lehmer", cmd_lehmer, "Lehmer disk containment")
    p.add_argument("--Ns", type=int, nargs="+", required=True)
    return parser


def run(argv: Sequence[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(EXIT_OK if exc.code in (0, None) else EXIT_USAGE)

    try:
        precision = PRECISION_BITS if args.precision is None else args.precision
        if precision < MIN_PRECISION_BITS:
            raise InvalidParamsError(f"--precision must be at least {MIN_PRECISION_BITS}")
        ctx = Context(limits=load_limits(args.config), precision=precision, rng=random.Random(args.seed))
        return args.handler(args, ctx)
    except SkeinError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return CommandResult(exc.exit_code)
    except ZeroDivisionError as exc:
        logger.error("division by zero: %s", exc)
        return CommandResult(EXIT_POLE)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(argv)
    if result.payload:
        sys.stdout.write(result.payload)
        sys.stdout.flush()
    return result.exit_code
