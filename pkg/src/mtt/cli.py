"""Command-line interface: check programs, evaluate expressions, run the law suite."""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .path import DEFAULT_SEED
from .ring import RINGS


def _default_seed() -> int:
    env = os.environ.get("MTT_SEED")
    if env is not None:
        try:
            return int(env, 0)
        except ValueError:
            print(f"mtt: ignoring malformed MTT_SEED={env!r}", file=sys.stderr)
    return DEFAULT_SEED


def cmd_check(path: str) -> int:
    from .surface import ParseError, TypeCheckError, check_module

    try:
        with open(path, "r", encoding="utf-8") as handle:
            source = handle.read()
    except OSError as err:
        print(f"mtt: cannot read {path}: {err.strerror or err}", file=sys.stderr)
        return 2
    try:
        module = check_module(source)
    except (ParseError, TypeCheckError) as err:
        print(f"{path}:{err.span.line}:{err.span.col}: {err.message}", file=sys.stderr)
        return 1
    print(f"{path}: {len(module.definitions)} definitions ok")
    return 0


def cmd_eval(expression: str) -> int:
    from .surface import ParseError, TypeCheckError, parse_term_text
    from .surface.check import Env, format_value, infer

    try:
        term = parse_term_text(expression)
        ty, value = infer(Env(), term)
    except (ParseError, TypeCheckError) as err:
        print(f"<expr>:{err.span.line}:{err.span.col}: {err.message}", file=sys.stderr)
        return 1
    print(format_value(value, ty))
    return 0


def cmd_laws(
    seed: int,
    count: Optional[int],
    law_filter: Optional[str],
    ring_name: str,
    figures: Optional[str],
    stable_timing: bool,
) -> int:
    from .laws import reports_to_json, run_laws

    ring = RINGS[ring_name]
    reports = run_laws(
        seed=seed, count=count, law_filter=law_filter, ring=ring, stable_timing=stable_timing
    )
    print(reports_to_json(reports))
    if figures:
        from .report import render_figures

        for written in render_figures(reports, figures):
            print(f"mtt: wrote {written}", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtt",
        description="Type-check and evaluate programs over the Moore-path kernel, "
        "and run its equational law suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="type-check a .mtt module")
    p_check.add_argument("file", help="path to the module")

    p_eval = sub.add_parser("eval", help="evaluate a closed expression")
    p_eval.add_argument("expr", help="expression source text")

    p_laws = sub.add_parser("laws", help="run the equational law suite, JSON report on stdout")
    p_laws.add_argument("--seed", type=lambda s: int(s, 0), default=None, help="generator seed")
    p_laws.add_argument("--count", type=int, default=None, help="override instances per law")
    p_laws.add_argument("--filter", default=None, help="run only laws whose id contains this substring")
    p_laws.add_argument("--ring", choices=sorted(RINGS), default="rationals", help="scalar instance")
    p_laws.add_argument("--figures", default=None, metavar="DIR", help="also render PNG/JSON summaries into DIR")
    p_laws.add_argument(
        "--stable-timing",
        action="store_true",
        help="report elapsed_ms as 0 so identical inputs give byte-identical output",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check(args.file)
    if args.command == "eval":
        return cmd_eval(args.expr)
    if args.command == "laws":
        seed = args.seed if args.seed is not None else _default_seed()
        return cmd_laws(seed, args.count, args.filter, args.ring, args.figures, args.stable_timing)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
