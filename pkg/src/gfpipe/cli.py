"""Command-line front end.

Subcommands:

  eval EXPR [--order N] [--set r=p/q] [--format table|csv|json]
  triangle EXPR --rows N [--mode ogf|egf] [--set r=p/q] [--format F]
  fixtures [--list | --run [ID ...]] [--format F]

Exit codes: 0 success, 1 mathematical error, 2 usage or expression error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import fixtures as fixtures_mod
from .dsl import Env, evaluate, parse
from .errors import EngineError, ExprError, ParseError
from .formats import format_value
from .triangles import triangle_from_gf


def _parse_set(text: str) -> Fraction:
    name, _, value = text.partition("=")
    if name.strip() != "r" or not value:
        raise argparse.ArgumentTypeError("expected r=p/q")
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {value!r}: {exc}")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gfpipe",
        description="exact generating-function transformation engine",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "csv", "json"),
                       default="table")
        p.add_argument("--set", dest="set_r", type=_parse_set, default=None,
                       metavar="r=p/q",
                       help="substitute an exact rational for r afterwards")

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expr")
    p_eval.add_argument("--order", type=int, default=8)
    common(p_eval)

    p_tri = sub.add_parser("triangle", help="expand an expression to a triangle")
    p_tri.add_argument("expr")
    p_tri.add_argument("--rows", type=int, required=True)
    p_tri.add_argument("--mode", choices=("ogf", "egf"), default="ogf")
    common(p_tri)

    p_fix = sub.add_parser("fixtures", help="list or run the golden fixtures")
    group = p_fix.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true", dest="list_only")
    group.add_argument("--run", nargs="*", metavar="ID", default=None)
    common(p_fix)
    return top


def _diagnose(exc: Exception, expr: str = "") -> None:
    if isinstance(exc, ParseError) and expr and 0 <= exc.position <= len(expr):
        print(expr, file=sys.stderr)
        print(" " * exc.position + "^", file=sys.stderr)
    print(f"error: {exc}", file=sys.stderr)


def cli_main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", 1) < 1:
        parser.error("--order must be at least 1")
    if getattr(args, "rows", 1) < 1:
        parser.error("--rows must be at least 1")

    try:
        if args.command == "eval":
            env = Env(order=args.order, r_value=args.set_r, format=args.format)
            value = evaluate(parse(args.expr), env)
            print(format_value(value, args.format))
            return 0

        if args.command == "triangle":
            env = Env(order=max(args.rows, 1), r_value=None, format=args.format)
            gf = evaluate(parse(args.expr), env)
            tri = triangle_from_gf(gf, args.rows, args.mode)
            if args.set_r is not None:
                tri = tri.substitute(args.set_r)
            print(format_value(tri, args.format))
            return 0

        # fixtures
        if args.list_only:
            for fx in fixtures_mod.all_fixtures():
                print(f"{fx.id}\t{fx.source}")
            return 0
        ids = args.run if args.run else None
        report = fixtures_mod.run_fixtures(ids)
        print(fixtures_mod.render_report(report, args.format))
        return 0 if report.all_passed else 1

    except ExprError as exc:
        _diagnose(exc, getattr(args, "expr", ""))
        return 2
    except EngineError as exc:
        _diagnose(exc)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        _diagnose(exc)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
