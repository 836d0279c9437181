"""Command-line front end.

    moschext eval  --space s1 --term "iter(s,F)" --input "#3"
    moschext name  --input "(o,`a`)" --count 8
    moschext real  --example rec2 --x -3 --prec 20
    moschext check --suite axioms --cases 500 --seed 7

Exit status: 0 on success, 1 when the result is undefined or fuel runs out
(or a check suite finds a counterexample), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .checks import SUITES, run_suite
from .combinatory import DEFAULT_FUEL, compile_term, space_by_name
from .discrete import decode, denotational_registry, elem_name, realizer_registry
from .errors import (DomainViolation, FuelExhausted, MalformedName, MoschError,
                     TermSyntaxError, Undefined, UnknownSymbol)
from .mosch_core import is_basic
from .names import Name
from .realizers import IterLog, compile_realizer
from .reals_demo import (closed_form, demo_alpha, demo_alpha1, demo_beta, join_functions,
                         parse_rational, rec1_eval, rec2_eval)
from .terms import format_elem, parse_elem, parse_term

__all__ = ["main", "build_parser", "SYMBOLS"]

# symbol -> (where it is available, description)
SYMBOLS = {
    "I, L, R, T, F": ("s1, s2", "identity, projections, constants (o,o) and o"),
    "swap": ("s1, s2", "exchanges base points `a` and `b`, identity elsewhere"),
    "s": ("s1, s2", "z -> (o, z); maps #n to #(n+1)"),
    "b": ("s2", "the multi-valued test with value {o, (o,o)} everywhere"),
    "alpha": ("real", "(x - x^2)/2 as an interval evaluator"),
    "beta": ("real", "(x, y) -> x + y as an interval evaluator"),
    "sigma": ("real", "x -> x + 1 on Cauchy names"),
    "chi": ("real", "rec1: strict test x < 0; rec2: soft test (either answer on (0, 1))"),
}


class _Usage(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--space", choices=("s1", "s2"), default="s1")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--term", metavar="EXPR")
    src.add_argument("--term-file", metavar="PATH")
    p.add_argument("--input", metavar="ELEM")
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    p.add_argument("--prec", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--list-symbols", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moschext", description=__doc__.split("\n\n")[0])
    parser.add_argument("--list-symbols", action="store_true", help="list the compiled-in symbols")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("eval", help="evaluate a term at an element")
    _common(p)
    p.add_argument("--realizer", action="store_true",
                   help="run the realizer on a name of the input and decode the result")

    p = sub.add_parser("name", help="print a prefix of a name of an element")
    _common(p)
    p.add_argument("--count", type=int, default=10)

    p = sub.add_parser("real", help="run a real-recursion demo")
    _common(p)
    p.add_argument("--example", choices=("rec1", "rec2", "join"), required=True)
    p.add_argument("--x", required=True, help="rational input, p/q or decimal")
    p.add_argument("--branch", choices=("high", "low"), default="high",
                   help="preferred answer of the soft test on its overlap band (rec2)")

    p = sub.add_parser("check", help="run a randomized property suite")
    _common(p)
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    return parser


def _emit(args, status: str, result, steps: int, text: Optional[str] = None) -> int:
    if args.json:
        print(json.dumps({"result": result, "steps": steps, "status": status}))
    elif text is not None:
        print(text)
    return 0 if status == "ok" else 1


def _fail(args, err: MoschError, steps: int = 0) -> int:
    status = "fuel" if isinstance(err, FuelExhausted) else "undefined"
    if args.json:
        print(json.dumps({"result": None, "steps": steps, "status": status}))
    else:
        print(f"{status}: {err}", file=sys.stderr)
    return 1


def _term_text(args) -> str:
    if args.term_file:
        try:
            return Path(args.term_file).read_text(encoding="utf-8")
        except OSError as e:
            raise _Usage(f"cannot read term file: {e}") from None
    if args.term is None:
        raise _Usage("--term or --term-file is required")
    return args.term


def _format_value(v) -> object:
    if isinstance(v, frozenset):
        return sorted(format_elem(u) for u in v)
    return format_elem(v)


def _cmd_eval(args) -> int:
    term = parse_term(_term_text(args))
    if args.input is None:
        raise _Usage("--input is required")
    z = parse_elem(args.input)
    space = space_by_name(args.space)

    if args.realizer:
        log = IterLog()
        rz = compile_realizer(term, realizer_registry(args.space), args.space, args.fuel, log)
        try:
            out = decode(rz(elem_name(z)))
        except MoschError as e:
            return _fail(args, e, log.total())
        return _emit(args, "ok", format_elem(out), log.total(), format_elem(out))

    steps = 0

    def trace(*a):
        nonlocal steps
        steps += 1
        if not args.trace:
            return
        if len(a) == 2:
            u, c = a
            print(f"step {steps}: u = {format_elem(u)}  chi -> {'basic' if is_basic(c) else 'pair'}",
                  file=sys.stderr)
        else:
            dep, u, c = a
            tag = "undefined" if c is None else "{" + ", ".join(
                "basic" if is_basic(w) else "pair" for w in sorted(c, key=str)) + "}"
            print(f"{'  ' * dep}{format_elem(u)}  chi -> {tag}", file=sys.stderr)

    f = compile_term(term, denotational_registry(args.space), space, args.fuel, trace)
    try:
        v = f(z)
    except (Undefined, FuelExhausted) as e:
        return _fail(args, e, steps)
    shown = _format_value(v)
    text = shown if isinstance(shown, str) else "{" + ", ".join(shown) + "}"
    return _emit(args, "ok", shown, steps, text)


def _cmd_name(args) -> int:
    if args.input is None:
        raise _Usage("--input is required")
    if args.count < 0:
        raise _Usage("--count must be >= 0")
    p: Name = elem_name(parse_elem(args.input))
    log = IterLog()
    if args.term is not None or args.term_file is not None:
        rz = compile_realizer(parse_term(_term_text(args)), realizer_registry(args.space),
                              args.space, args.fuel, log)
        p = rz(p)
    try:
        values = p.prefix(args.count)
    except MoschError as e:
        return _fail(args, e, log.total())
    return _emit(args, "ok", values, log.total(), str(values))


def _cmd_real(args) -> int:
    try:
        x = parse_rational(args.x)
    except ValueError as e:
        raise _Usage(str(e)) from None
    try:
        if args.example == "rec1":
            r = rec1_eval(demo_alpha(0, closed=False), demo_beta(0), 0, x, args.prec, args.fuel)
            value, steps = r.value, r.loops
        elif args.example == "rec2":
            r = rec2_eval(demo_alpha(0), demo_beta(1), 0, x, args.prec, args.fuel, args.branch)
            value, steps = r.value, r.loops
        else:
            joined = join_functions(demo_alpha(0), demo_alpha1(0), 0)
            # x is an exact rational, so the point enclosure is exact
            value, steps = joined(x).mid, 0
    except (Undefined, FuelExhausted) as e:
        return _fail(args, e)
    except DomainViolation as e:
        return _fail(args, Undefined(x, str(e)))
    text = f"{value}  (~{float(value):.12g}; closed form {closed_form(x)})"
    return _emit(args, "ok", str(value), steps, text)


def _cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    summary = {}
    for name in names:
        rep = run_suite(name, args.cases, args.seed)
        ok &= rep.ok
        summary[name] = {prop: {"passed": p, "failed": f} for prop, (p, f) in rep.counts.items()}
        if not args.json:
            print(f"[{name}] {'ok' if rep.ok else 'FAILED'}")
            for line in rep.lines():
                print(f"  {line}")
    total = sum(c["passed"] + c["failed"] for s in summary.values() for c in s.values())
    if args.json:
        print(json.dumps({"result": summary, "steps": total, "status": "ok" if ok else "failed"}))
    return 0 if ok else 1


def _list_symbols() -> int:
    width = max(map(len, SYMBOLS))
    for sym, (where, desc) in SYMBOLS.items():
        print(f"{sym:<{width}}  [{where}]  {desc}")
    return 0


def _glue_x(argv: list[str]) -> list[str]:
    """``--x -1/2`` -> ``--x=-1/2``; argparse would read ``-1/2`` as an option."""
    out, it = [], iter(argv)
    for a in it:
        if a == "--x":
            a = "--x=" + next(it, "")
        out.append(a)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_x(sys.argv[1:] if argv is None else list(argv)))
    if args.list_symbols:
        return _list_symbols()
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    if args.fuel < 1 or args.prec < 1 or (args.cases is not None and args.cases < 0):
        print("moschext: error: --fuel and --prec must be >= 1, --cases >= 0", file=sys.stderr)
        return 2
    handler = {"eval": _cmd_eval, "name": _cmd_name, "real": _cmd_real, "check": _cmd_check}
    try:
        return handler[args.command](args)
    except _Usage as e:
        print(f"moschext: error: {e}", file=sys.stderr)
        return 2
    except TermSyntaxError as e:
        print(f"moschext: syntax error: {e}", file=sys.stderr)
        return 2
    except (UnknownSymbol, MalformedName) as e:
        print(f"moschext: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
