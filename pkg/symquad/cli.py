"""Command-line front-end.

Usage:
    symquad represent --family parity --n 4 --mode fix
    symquad represent --k 0,0,0,-1 --mode closed-form --eps 1/3
    symquad quadratize --family t-out-of-n --t 2 --n 3
    symquad quadratize --k 3,-1,4,1,-5,9 --format table
    symquad quadratize --family parity --n 6 | symquad verify --input - --family parity --n 6
    symquad lift --input poly.json --roundtrip
    symquad oracle
    symquad report --n-max 8

Exit codes: 0 success, 1 verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from symquad.config import settings
from symquad.engine import (
    InputError,
    ReportBuilder,
    SymquadError,
    alphas_half,
    closed_form_alphas,
    dedicated_family,
    family_names,
    fix_representation,
    implied_threshold,
    lift_function,
    lift_roundtrip,
    parity_3cube_degree_oracle,
    quadratize_family,
    quadratize_symmetric_fix,
    quadratize_symmetric_general,
    render_table,
    resolve_spec,
    solve_representation,
    verify_quadratization,
)
from symquad.engine.algebra import table_evaluator
from symquad.engine.verify import parity_interpolant, top_coefficient
from symquad.models import (
    LiftSpec,
    MultilinearPoly,
    NegPartRep,
    QuadForm,
    QuadratizationResult,
    SymmetricSpec,
    VerifyReport,
    format_rational,
    parse_rational_list,
)

logger = logging.getLogger("symquad")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

MODES = ("general-eps", "closed-form", "half", "fix")


def _dash(name: str) -> str:
    return name.replace("_", "-")


# ── input helpers ─────────────────────────────────────


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from exc


def _read_json(source: str) -> Any:
    try:
        return json.loads(_read_text(source))
    except json.JSONDecodeError as exc:
        raise InputError(f"{source} is not valid JSON: {exc.msg}") from exc


def _rationals(text: str) -> list[Fraction]:
    try:
        return parse_rational_list(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _spec_from_args(args: argparse.Namespace) -> SymmetricSpec:
    if args.input is not None:
        if args.family is not None or args.k is not None:
            raise InputError("give exactly one of --family, --k or --input")
        return SymmetricSpec.model_validate(_read_json(args.input))
    k = _rationals(args.k) if args.k is not None else None
    return resolve_spec(args.family, args.n, args.t, k)


# ── rendering ─────────────────────────────────────────


def format_terms(terms: dict[tuple, Any], render=lambda mono: "*".join(mono)) -> str:
    if not terms:
        return "0"
    parts = []
    for mono, coef in terms.items():
        body = render(mono)
        parts.append(f"{format_rational(coef)}*{body}" if body else format_rational(coef))
    return " + ".join(parts)


def to_table(obj: Any) -> str:
    if isinstance(obj, NegPartRep):
        lines = [
            f"affine: {format_rational(obj.affine_const)} + {format_rational(obj.affine_linear)}*l"
            f" + {format_rational(obj.affine_quadratic)}*l^2",
            f"{'i':>3}  {'alpha':>12}  {'eps':>6}",
        ]
        lines += [f"{t.i:>3}  {format_rational(t.alpha):>12}  {format_rational(t.eps):>6}" for t in obj.alphas]
        return "\n".join(lines)
    if isinstance(obj, QuadratizationResult):
        labels = ", ".join(f"y{j}<-{label}" for j, label in sorted(obj.g.aux_labels.items()))
        return "\n".join(
            [
                f"family:      {_dash(obj.family.value)}",
                f"n, m:        {obj.g.n}, {obj.g.m}",
                f"bound:       {obj.paper_bound} (within: {'yes' if obj.within_bound else 'no'})",
                f"y-linear:    {'yes' if obj.y_linear else 'no'}",
                f"x-symmetric: {'yes' if obj.x_symmetric else 'no'}",
                f"aux labels:  {labels or '-'}",
                f"g = {format_terms(obj.g.terms)}",
            ]
        )
    if isinstance(obj, VerifyReport):
        lines = [
            f"passed:           {'yes' if obj.passed else 'NO'}",
            f"checked points:   {obj.checked_points}",
            f"y-linear:         {'yes' if obj.y_linear else 'no'}",
            f"x-symmetric:      {'yes' if obj.x_symmetric else 'no'}",
            f"global min match: {'yes' if obj.global_min_match else 'no'}",
        ]
        if obj.counterexample is not None:
            c = obj.counterexample
            lines.append(
                f"counterexample:   x={''.join(map(str, c.x))} expected {format_rational(c.expected)}"
                f" got {format_rational(c.got)}"
            )
        return "\n".join(lines)
    if isinstance(obj, LiftSpec):
        lines = [f"n={obj.n} N={obj.N}", "blocks: " + " ".join(f"[{lo},{hi}]" for lo, hi in obj.block_map)]
        lines += [f"k[{w}] = {format_rational(v)}" for w, v in enumerate(obj.k)]
        return "\n".join(lines)
    if isinstance(obj, dict):
        return "\n".join(f"{key}: {value}" for key, value in obj.items())
    return str(obj)


def _emit(obj: Any, args: argparse.Namespace, default_format: str = "json") -> None:
    fmt = args.format or default_format
    if fmt == "table":
        text = render_table(obj) if isinstance(obj, list) else to_table(obj)
    elif isinstance(obj, BaseModel):
        text = obj.model_dump_json(indent=2)
    elif isinstance(obj, list):
        text = json.dumps([item.model_dump(mode="json") for item in obj], indent=2)
    else:
        text = json.dumps(obj, indent=2)

    if args.output:
        try:
            Path(args.output).write_text(text + "\n", encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from exc
        logger.info("wrote %s", args.output)
    else:
        print(text)


# ── commands ──────────────────────────────────────────


def cmd_represent(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    if args.mode == "half":
        rep = alphas_half(spec)
    elif args.mode == "fix":
        rep = fix_representation(spec)
    else:
        if args.eps is None:
            raise InputError(f"--mode {args.mode} needs --eps")
        eps = _rationals(args.eps)
        if args.mode == "closed-form":
            if len(eps) != 1:
                raise InputError("closed-form takes a single --eps value")
            rep = closed_form_alphas(spec, eps[0])
        else:
            if len(eps) == 1:
                eps = eps * (spec.n + 1)
            rep = solve_representation(spec, eps)
    _emit(rep, args)
    return EXIT_OK


def cmd_quadratize(args: argparse.Namespace) -> int:
    family = dedicated_family(args.family) if args.family is not None else None
    if family is not None:
        if args.k is not None or args.input is not None:
            raise InputError("give exactly one of --family, --k or --input")
        if args.n is None:
            raise InputError("--family needs --n")
        result = quadratize_family(family, n=args.n, t=implied_threshold(args.family, args.n, args.t))
    else:
        spec = _spec_from_args(args)
        route = quadratize_symmetric_fix if args.route == "fix" else quadratize_symmetric_general
        result = route(spec)
    _emit(result, args)
    return EXIT_OK


def _load_form(source: str) -> QuadForm:
    data = _read_json(source)
    # accept a full quadratize result as well as a bare form
    if isinstance(data, dict) and "g" in data:
        data = data["g"]
    return QuadForm.model_validate(data)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.input is None:
        raise InputError("verify needs --input with the form to check")
    g = _load_form(args.input)
    if args.table is not None:
        if args.family is not None or args.k is not None or args.poly is not None:
            raise InputError("give exactly one target: --family, --k, --table or --poly")
        values = _rationals(args.table)
        if len(values) != 2**g.n:
            raise InputError(f"--table needs 2^{g.n} = {2**g.n} values, got {len(values)}")
        target: Any = table_evaluator(values)
    elif args.poly is not None:
        if args.family is not None or args.k is not None:
            raise InputError("give exactly one target: --family, --k, --table or --poly")
        target = MultilinearPoly.model_validate(_read_json(args.poly))
    else:
        # a named family defaults to the form's own n
        n = g.n if args.n is None and args.family is not None else args.n
        target = _spec_from_args(argparse.Namespace(family=args.family, k=args.k, input=None, n=n, t=args.t))
    report = verify_quadratization(g, target)
    _emit(report, args)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_lift(args: argparse.Namespace) -> int:
    if args.input is None:
        raise InputError("lift needs --input with a multilinear polynomial")
    f = MultilinearPoly.model_validate(_read_json(args.input))
    if args.roundtrip:
        report = lift_roundtrip(f)
        _emit(report, args)
        return EXIT_OK if report.passed else EXIT_FAILED
    _emit(lift_function(f), args)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    p = parity_interpolant(3)
    degree = parity_3cube_degree_oracle()
    _emit(
        {
            "function": "parity",
            "n": 3,
            "degree": degree,
            "top_coefficient": format_rational(top_coefficient(p)),
            "interpolant": p.model_dump(mode="json")["terms"],
        },
        args,
    )
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    n_max = args.n_max if args.n_max is not None else settings.report_n_max
    if not 1 <= n_max <= settings.max_sweep_vars:
        raise InputError(f"--n-max must lie in 1..{settings.max_sweep_vars}")
    builder = ReportBuilder(settings.catalog_file, seed=settings.report_seed)
    rows = builder.run(n_max)
    _emit(rows, args, default_format="table")
    return EXIT_OK if all(row.verified for row in rows) else EXIT_FAILED


COMMANDS = {
    "represent": cmd_represent,
    "quadratize": cmd_quadratize,
    "verify": cmd_verify,
    "lift": cmd_lift,
    "oracle": cmd_oracle,
    "report": cmd_report,
}


# ── parser ────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symquad", description="Quadratizations of symmetric pseudo-Boolean functions")
    parser.add_argument("--debug", action="store_true", help="log engine details to stderr")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write to this path instead of stdout")
    common.add_argument("--format", choices=("json", "table"), help="output format")

    target = argparse.ArgumentParser(add_help=False)
    target.add_argument("--family", help=f"named function ({', '.join(family_names())})")
    target.add_argument("--n", type=int, help="number of variables")
    target.add_argument("--t", type=int, help="threshold for t-out-of-n / exact-t")
    target.add_argument("--k", help="explicit weight values k_0,...,k_n as rationals")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("represent", parents=[common, target], help="negative-part representation")
    p.add_argument("--input", help="SymmetricSpec JSON file, or - for stdin")
    p.add_argument("--mode", choices=MODES, default="half")
    p.add_argument("--eps", help="eps value, or one per index for general-eps")

    p = sub.add_parser("quadratize", parents=[common, target], help="build a quadratization")
    p.add_argument("--input", help="SymmetricSpec JSON file, or - for stdin")
    p.add_argument("--route", choices=("half", "fix"), default="half", help="representation used for explicit specs")

    p = sub.add_parser("verify", parents=[common, target], help="certify a quadratization exhaustively")
    p.add_argument("--input", help="QuadForm or quadratize-result JSON, or - for stdin")
    p.add_argument("--table", help="target truth table, 2^n rationals indexed by sum 2^(i-1) x_i")
    p.add_argument("--poly", help="target multilinear polynomial JSON file")

    p = sub.add_parser("lift", parents=[common], help="symmetric lift of a multilinear polynomial")
    p.add_argument("--input", help="MultilinearPoly JSON file, or - for stdin")
    p.add_argument("--roundtrip", action="store_true", help="quadratize the lift, project back and verify")

    sub.add_parser("oracle", parents=[common], help="degree of parity on the 3-cube")

    p = sub.add_parser("report", parents=[common], help="sweep every family and tabulate aux counts")
    p.add_argument("--n-max", type=int, help=f"largest n (default {settings.report_n_max})")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.INFO if settings.debug else logging.WARNING,
        format="%(asctime)s [symquad] %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return COMMANDS[args.command](args)
    except (SymquadError, ValidationError) as exc:
        print(f"symquad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
