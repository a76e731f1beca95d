"""Command-line front end: parse elements and ordering specs, compare,
sort, tabulate sign vectors, measure distances, search isolation
witnesses, and run the verification suites."""

from __future__ import annotations

import argparse
import os
import sys
from functools import cmp_to_key

from .dyadic import Cmp
from .element import parse_element
from .errors import ThompsonOrdersError
from .forder import (
    IsolatedOrder,
    compare,
    format_order_spec,
    parse_order_spec,
    sign,
    standard_grid,
)
from .orderspace import ball, distance, isolation_witness
from .verify import SUITE_NAMES, run_suites


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompson-orders",
        description="Exact bi-ordering comparators for Thompson's group F",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="canonical breakpoint list of an element")
    p.add_argument("element", help="word ('x0 x1^-1') or breakpoint list ('[(0,0),...,(1,1)]')")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("compare", help="compare two elements under an ordering")
    p.add_argument("--order", required=True)
    p.add_argument("e1")
    p.add_argument("e2")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("sort", help="sort elements ascending under an ordering")
    p.add_argument("--order", required=True)
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=_cmd_sort)

    p = sub.add_parser("sign-table", help="signs of all ball elements under an ordering")
    p.add_argument("--order", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=_cmd_sign_table)

    p = sub.add_parser("distance", help="1/2^n distance between two orderings")
    p.add_argument("--order1", required=True)
    p.add_argument("--order2", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("witness", help="separate an isolated ordering from competitors")
    p.add_argument("--target", required=True)
    p.add_argument("--competitors", required=True, help="spec file (one per line) or 'builtin-grid'")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITE_NAMES)} or 'all'")
    p.add_argument("--seed", type=int, default=0, help="overridden by $THOMPSON_ORDERS_SEED")
    p.add_argument("--radius", type=int, default=4)
    p.set_defaults(func=_cmd_verify)

    return parser


def _cmd_eval(args) -> int:
    print(parse_element(args.element))
    return 0


def _cmd_compare(args) -> int:
    spec = parse_order_spec(args.order)
    outcome = compare(spec, parse_element(args.e1), parse_element(args.e2))
    if outcome == Cmp.EQ:
        print("equal")
    else:
        print(f"{args.e1} {'<' if outcome == Cmp.LT else '>'} {args.e2}")
    return 0


def _cmd_sort(args) -> int:
    spec = parse_order_spec(args.order)
    seen = {}
    for raw in args.elements:
        el = parse_element(raw)
        if el not in seen:
            seen[el] = raw
    items = sorted(seen.items(), key=cmp_to_key(lambda a, b: int(compare(spec, a[0], b[0]))))
    for _, raw in items:
        print(raw)
    return 0


def _cmd_sign_table(args) -> int:
    spec = parse_order_spec(args.order)
    b = ball(args.radius)
    print(f"# sign table: order={format_order_spec(spec)} radius={args.radius}")
    print("# rows ordered by (first word length, breakpoint encoding); identity omitted")
    for e, length in b.nonidentity():
        print(f"{sign(spec, e).name}\tlen={length}\t{e}")
    return 0


def _cmd_distance(args) -> int:
    s1 = parse_order_spec(args.order1)
    s2 = parse_order_spec(args.order2)
    print(f"distance = {distance(s1, s2, args.max_n)}")
    return 0


def _cmd_witness(args) -> int:
    target = parse_order_spec(args.target)
    if not isinstance(target, IsolatedOrder):
        print("error: --target must be one of the eight isolated ordering specs", file=sys.stderr)
        return 2
    if args.competitors == "builtin-grid":
        competitors = [s for s in standard_grid() if s != target]
    else:
        competitors = []
        with open(args.competitors, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    competitors.append(parse_order_spec(line))
    result = isolation_witness(target, competitors, args.max_n)
    for comp, radius in zip(competitors, result.competitor_radii):
        shown = f"separated at radius {radius}" if radius is not None else "UNSEPARATED"
        print(f"{format_order_spec(comp)}\t{shown}")
    print(f"result: {result}")
    return 0 if result.separated else 1


def _cmd_verify(args) -> int:
    env_seed = os.environ.get("THOMPSON_ORDERS_SEED")
    seed = int(env_seed) if env_seed else args.seed
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    try:
        reports = run_suites(names, seed=seed, radius=args.radius)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for rep in reports:
        for line in rep.text_lines():
            print(line)
    print("---")
    print(f"seed={seed} radius={args.radius}")
    for rep in reports:
        print(rep.kv_line())
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except ThompsonOrdersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
