"""Command-line front end: ``wminus <subcommand> ...``.

Every subcommand prints canonical text; ``--format machine`` switches to
tab-separated ``key<TAB>value`` lines.  Parse and usage errors exit with 2.
"""

from __future__ import annotations

import argparse
import sys

from .dims import series_coefficients
from .fock import act_env, act_lie, parse_fock, render_fock
from .grammar import ParseError
from .heis import embed_heis, heis_bracket, parse_heis
from .trace import (
    NotExpressible,
    calibrate_phi,
    default_ledger,
    ledger_expand,
    parse_trace,
    phi_image,
    render_trace,
)
from .coeff import render_scalar
from .verify import SUITES, Bounds, exit_code, render_reports, run_suite
from .wenv import parse_env, quotient_reduce, render_env
from .wlie import bracket, parse_lie, render_lie

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _emit(args, pairs):
    """Print ``(key, value)`` pairs; text format shows values only."""
    for key, value in pairs:
        if args.format == "machine":
            print(f"{key}\t{value}")
        else:
            print(value)


def _cmd_bracket(args):
    x, y = parse_lie(args.x), parse_lie(args.y)
    _emit(args, [("bracket", render_lie(bracket(x, y)))])
    return 0


def _cmd_normalize(args):
    e = parse_env(args.expr)
    if args.quotient:
        e = quotient_reduce(e)
    _emit(args, [("normal_form", render_env(e))])
    return 0


def _cmd_act(args):
    v = parse_fock(args.vector)
    try:
        out = act_env(parse_env(args.element), v)
    except ParseError as env_err:
        # elements outside W- act through the Lie action directly
        try:
            out = act_lie(parse_lie(args.element), v)
        except ParseError:
            raise env_err from None
    _emit(args, [("action", render_fock(out))])
    return 0


def _cmd_dims(args):
    table = series_coefficients(args.max_rank, args.max_dot, args.side)
    if args.format == "machine":
        for key, value in table.machine_lines():
            print(f"{key}\t{value}")
    else:
        print(table.render())
    if args.figures:
        from .figures import dims_heatmap

        path = dims_heatmap(table, args.figures)
        print(f"figure\t{path}" if args.format == "machine" else f"wrote {path}", file=sys.stderr)
    return 0


def _cmd_heis(args):
    a = parse_heis(args.x)
    if args.y is None:
        _emit(args, [("embedding", render_lie(embed_heis(a)))])
    else:
        _emit(args, [("bracket", render_scalar(heis_bracket(a, parse_heis(args.y))))])
    return 0


def _cmd_expand(args):
    ledger = default_ledger()
    if args.name not in ledger and args.name not in ("H[-1]", "H2X", "H-2X", "D02"):
        raise UsageError(f"unknown ledger name {args.name!r}; known: {', '.join(ledger.names())}")
    if args.name in ledger:
        e = ledger_expand(args.name, ledger)
    else:
        e = parse_trace(args.name, ledger)
    _emit(args, [("expansion", render_trace(e))])
    return 0


def _cmd_phi(args):
    ledger = default_ledger()
    img = phi_image(parse_trace(args.expr, ledger), ledger=ledger)
    if args.quotient:
        img = quotient_reduce(img)
    _emit(args, [("phi", render_env(img))])
    return 0


def _cmd_calibrate(args):
    rep = calibrate_phi()
    pairs = []
    if rep.calibration is not None:
        for gen, image in rep.calibration.lines():
            pairs.append((f"image/{gen}", f"{gen} -> {image}"))
    for rel_id, unknowns, values in rep.steps:
        solved = ", ".join(f"{u} = {render_scalar(v)}" for u, v in zip(unknowns, values))
        pairs.append((f"step/{rel_id}", f"{rel_id}: {solved}"))
    for r in rep.checks:
        pairs.append((f"check/{r.instance}", f"{r.instance}: {r.status}"))
    for gen, formula, member, direction, exact in rep.variants:
        pairs.append((f"printed/{gen} = {formula}",
                      f"printed {gen} = {formula}: in W- {member}, same direction {direction}, equal {exact}"))
    for msg in rep.inconsistent:
        pairs.append(("inconsistent", msg))
    pairs.append(("status", "ok" if rep.ok else "inconsistent"))
    _emit(args, pairs)
    return 0 if rep.ok else 1


def _cmd_verify(args):
    bounds = Bounds(
        seed=args.seed,
        fock_size=args.max_size if args.max_size is not None else Bounds.fock_size,
        max_rank=args.max_rank,
        max_dot=args.max_dot,
    )
    try:
        reports = run_suite(args.suite, bounds, args.manifest)
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None
    print(render_reports(reports, args.format, args.timing))
    if args.figures:
        from .figures import verify_chart

        path = verify_chart(reports, args.figures)
        print(f"wrote {path}", file=sys.stderr)
    return exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    parser = argparse.ArgumentParser(prog="wminus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", parents=[common], help="Lie bracket of two w[k,l] expressions")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("normalize", parents=[common], help="PBW normal form of an enveloping-algebra expression")
    p.add_argument("expr")
    p.add_argument("--quotient", action="store_true", help="also set C = 1 and drop w[0,0]")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("act", parents=[common], help="act on a Fock vector such as '[2,1] + 2*[]'")
    p.add_argument("element")
    p.add_argument("vector")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("dims", parents=[common], help="graded dimension table")
    p.add_argument("--max-rank", type=int, default=9)
    p.add_argument("--max-dot", type=int, default=9)
    p.add_argument("--side", choices=(">", "<"), default=">")
    p.add_argument("--figures", metavar="DIR")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("heis", parents=[common], help="Heisenberg bracket of two elements, or the embedding of one")
    p.add_argument("x")
    p.add_argument("y", nargs="?")
    p.set_defaults(func=_cmd_heis)

    p = sub.add_parser("expand", parents=[common], help="expand a ledger name over the four generators")
    p.add_argument("name")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("phi", parents=[common], help="image of a trace expression")
    p.add_argument("expr")
    p.add_argument("--quotient", action="store_true", help="set C = 1 and drop w[0,0] in the result")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("suite", nargs="?", default="all", choices=SUITES + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-size", type=int, help="largest partition size for the fock suite")
    p.add_argument("--max-rank", type=int, default=9)
    p.add_argument("--max-dot", type=int, default=9)
    p.add_argument("--manifest", metavar="PATH", help="relation manifest overriding the shipped one")
    p.add_argument("--timing", action="store_true", help="include per-report wall time")
    p.add_argument("--figures", metavar="DIR")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("calibrate", parents=[common], help="solve and print the generator scalars")
    p.set_defaults(func=_cmd_calibrate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NotExpressible as exc:
        print(f"not expressible: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
