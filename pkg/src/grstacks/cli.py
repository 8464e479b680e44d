"""Command line front end.

Four subcommands: `verify` runs a named check suite and reports pass/fail,
`eval` parses and evaluates an expression, `bspin` prints the classifying
class of a spin group in atom form, and `delta` summarizes one of the finite
blade groups.  Exit codes: 0 all checks pass, 1 at least one check failed,
2 usage or parse errors.
"""

import argparse
import json
import sys

from . import dsl
from .delta import DeltaGroup
from .lefschetz import LC_ONE, NotAUnit, ZeroInverse, lc_eval_at, render_factors
from .motive import DomainError, bspin, substitute_deltas
from .suites import SUITES


def _cmd_verify(args: argparse.Namespace) -> int:
    rep = SUITES[args.suite](seed=args.seed, samples=args.samples, q=args.q)
    print(rep.to_text())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(rep.to_json())
    return 0 if rep.ok else 1


def _cmd_eval(args: argparse.Namespace) -> int:
    try:
        value = dsl.eval(dsl.parse(args.expr))
        if args.deltas_one:
            cls = substitute_deltas(value, {m: LC_ONE for m in value.support()})
            print(render_factors(cls))
            if args.at is not None:
                print(f"at L={args.at}: {lc_eval_at(cls, args.at)}")
            return 0
        print(dsl.render(value))
        if args.at is not None:
            if not value.is_scalar():
                print("error: atoms remain, evaluate with --deltas-one", file=sys.stderr)
                return 2
            print(f"at L={args.at}: {lc_eval_at(value.scalar, args.at)}")
        return 0
    except (dsl.ParseError, NotAUnit, ZeroInverse, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _cmd_bspin(args: argparse.Namespace) -> int:
    try:
        e = bspin(args.n)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = {
            "scalar": render_factors(e.scalar),
            "atoms": [{"m": m, "coeff": render_factors(c)} for m, c in e.atoms],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(dsl.render(e))
    return 0


def _cmd_delta(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= 12:
        print("error: n must be between 1 and 12", file=sys.stderr)
        return 2
    grp = DeltaGroup(args.n)
    center = grp.center()
    comm = grp.commutator_subgroup()
    print(f"order {grp.order}")
    print(f"center {len(center)}")
    print(f"abelianization {grp.order // len(comm)}")
    if len(center) == grp.order:
        print("abelian")
    if args.table:
        grp.write_table(args.table)
        print(f"table written to {args.table}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grstacks",
        description="exact verification workbench for classifying-stack classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p.add_argument("--samples", type=int, default=100, help="samples per property")
    p.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    p.add_argument(
        "--q",
        type=int,
        default=5,
        choices=(5, 13),
        help="field size for the finite suite",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    p.add_argument(
        "--deltas-one",
        action="store_true",
        help="substitute 1 for every atom before printing",
    )
    p.add_argument("--at", type=int, metavar="Q", help="also specialize L to Q")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("bspin", help="print a classifying class in atom form")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_bspin)

    p = sub.add_parser("delta", help="summarize a finite blade group")
    p.add_argument("n", type=int)
    p.add_argument("--table", metavar="PATH", help="write the full multiplication table as CSV")
    p.set_defaults(func=_cmd_delta)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
