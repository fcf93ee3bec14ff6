"""Command-line front end: ``weylpi {verify,solve,eval,linearize,normal-form,repro}``.

Exit codes: 0 success (``verify``: Identity), 1 ``verify`` NotIdentity or a
``repro`` mismatch, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import repro
from .catalog import NAMES, UnknownName, named
from .freealg import ExprSyntaxError, FreePoly, NotMultihomogeneous, parse, render
from .idsolve import solve
from .linearize import DegreeMismatch, lin, lin_complete
from .scalar import Char, NotPrime
from .weyl import normal_form
from .witt import ArityMismatch, eval_concrete, is_identity


class UsageError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out or any(v < 0 for v in out):
        raise argparse.ArgumentTypeError(f"expected nonnegative integers, got {text!r}")
    return out


def _char(text: str) -> Char:
    try:
        return Char(int(text))
    except (ValueError, NotPrime) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _poly(args) -> FreePoly:
    if args.named and args.expr:
        raise UsageError("give either --expr or --named, not both")
    if args.named:
        return named(args.named, args.char)
    if args.expr:
        return parse(args.expr, args.char)
    raise UsageError("one of --expr or --named is required")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylpi",
        description="Polynomial identities of the subspace span{x^i y} of the Weyl algebra A_1.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, poly=True):
        p.add_argument("--char", type=_char, default=Char(0), help="0 or a prime (default 0)")
        p.add_argument("--output", choices=("text", "json"), default="text")
        if poly:
            p.add_argument("--expr", help='polynomial, e.g. "x1*x2 - x2*x1" or "St3(x1,x2,x3)"')
            p.add_argument("--named", help=f"catalog element ({', '.join(NAMES[:6])}, ...)")

    p = sub.add_parser("verify", help="decide whether a polynomial is an identity")
    common(p)

    p = sub.add_parser("solve", help="identity space of a multidegree")
    common(p, poly=False)
    p.set_defaults(output="json")
    p.add_argument("--mdeg", type=_int_list, required=True, help="e.g. 2,1,1")

    p = sub.add_parser("eval", help="evaluate at basis elements c_i = x^i y")
    common(p)
    p.add_argument("--at", type=_int_list, required=True, help="indices i1,i2,...")

    p = sub.add_parser("linearize", help="partial or complete linearization")
    common(p)
    p.add_argument("--var", type=int, help="variable index to linearize")
    p.add_argument("--parts", type=_int_list, help="composition, e.g. 1,1")
    p.add_argument("--complete", action="store_true", help="complete linearization")

    p = sub.add_parser("normal-form", help="normal-order a word in x and y")
    common(p, poly=False)
    p.add_argument("word", help='e.g. "yyxx"')

    p = sub.add_parser("repro", help="recompute every reference result")
    p.add_argument("--write-golden", action="store_true", help="regenerate golden files")
    return parser


def _emit(args, text: str, payload: dict):
    if getattr(args, "output", "text") == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            report = is_identity(_poly(args), args.char)
            _emit(args, report.to_text(), report.to_dict())
            return 0 if report.is_identity else 1
        if args.command == "solve":
            report = solve(args.mdeg, args.char)
            if args.output == "json":
                print(report.to_json())
            else:
                print(f"mdeg {list(report.mdeg)}, char {args.char.p}: dimension {report.dimension}")
                for f in report.polynomials():
                    print(f"  {render(f)}")
            return 0
        if args.command == "eval":
            f = _poly(args)
            value = eval_concrete(f, args.at)
            _emit(args, str(value), {"polynomial": render(f), "point": args.at,
                                     "char": args.char.p, "value": str(value)})
            return 0
        if args.command == "linearize":
            f = _poly(args)
            if args.complete:
                g = lin_complete(f)
            elif args.var is not None and args.parts:
                g = lin(f, args.var, args.parts)
            else:
                raise UsageError("linearize needs --var and --parts, or --complete")
            _emit(args, render(g), {"polynomial": render(f), "result": render(g)})
            return 0
        if args.command == "normal-form":
            a = normal_form(args.word, args.char)
            _emit(args, str(a), {"word": args.word, "char": args.char.p, "value": str(a)})
            return 0
        if args.command == "repro":
            if args.write_golden:
                for path in repro.write_goldens():
                    print(f"wrote {path}")
            return 0 if repro.run() else 1
    except (UsageError, ExprSyntaxError, UnknownName, ArityMismatch, DegreeMismatch,
            NotMultihomogeneous, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownName) else exc
        print(f"weylpi {args.command}: error: {msg}", file=sys.stderr)
        return 2
    parser.error(f"unknown command {args.command}")  # pragma: no cover


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
