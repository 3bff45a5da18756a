"""Command-line interface: ``superchevalley <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .carriers import Carrier, CarrierError
from .kostant import STRATEGIES, normal_form
from .parsing import ParseError, parse_fraction, parse_group_word, parse_pbw, parse_vector
from .scalars import A, SpecializationError, ScalarA, check_grouplike, specialize
from .superalgebra import (
    Report, bracket, build_structure_table, check_jacobi, verify_chevalley_axioms,
)
from .supergroup import GroupElement, check_lemmas, factorize_big_cell, lie_functor_check


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _reports(args, reports: list[Report]) -> int:
    ok = all(r.ok for r in reports)
    if getattr(args, "json", False):
        print(json.dumps({"schema": 1, "ok": ok, "reports": [r.to_json() for r in reports]},
                         indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
            for v in r.violations[:20]:
                print(f"  {v}")
    return 0 if ok else 1


def _table(args):
    return build_structure_table(getattr(args, "a_value", None))


def cmd_verify_axioms(args) -> int:
    return _reports(args, [verify_chevalley_axioms(_table(args))])


def cmd_jacobi(args) -> int:
    return _reports(args, [check_jacobi(_table(args))])


def cmd_table(args) -> int:
    t = _table(args)
    data = t.to_json()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for x, row in data["brackets"].items():
            for y, v in row.items():
                print(f"[{x}, {y}] = {v}")
    return 0


def cmd_bracket(args) -> int:
    t = _table(args)
    x, y = parse_vector(args.x), parse_vector(args.y)
    if t.a0 is not None:
        x, y = (v.map(lambda c: ScalarA(specialize(c, t.a0))) for v in (x, y))
    z = bracket(x, y, t)
    _emit(args, {"schema": 1, "x": args.x, "y": args.y, "result": z.render()}, z.render())
    return 0


def cmd_straighten(args) -> int:
    e = normal_form(parse_pbw(args.word), args.strategy)
    _emit(args, {"schema": 1, "input": args.word, "normal_form": e.render()}, e.render())
    return 0


def cmd_factorize(args) -> int:
    car = Carrier.grassmann(args.odd_vars)
    word = parse_group_word(args.word, car)
    fac = factorize_big_cell(GroupElement.from_records(car, word))
    if args.json:
        print(json.dumps(fac.to_json(), indent=2, sort_keys=True))
    else:
        print("g0:     " + ("; ".join(r.render() for r in fac.g0) or "1"))
        print("oddNeg: " + ("; ".join(f"xO({r.name()}; {t.render()})" for r, t in fac.oddNeg) or "-"))
        print("oddPos: " + ("; ".join(f"xO({r.name()}; {t.render()})" for r, t in fac.oddPos) or "-"))
        print("roundtrip: exact")
    return 0


def cmd_check_lemmas(args) -> int:
    return _reports(args, check_lemmas(args.odd_vars))


def cmd_grouplike(args) -> int:
    ok = check_grouplike(A ** args.k, args.trunc)
    _emit(args, {"schema": 1, "exponent": f"a^{args.k}", "truncation": args.trunc, "group_like": ok},
          f"group-like: {'true' if ok else 'false'}")
    return 0 if ok else 1


def cmd_lie_check(args) -> int:
    rep = lie_functor_check()
    code = _reports(args, [rep])
    if not args.json:
        print(f"dimension: {rep.even_dim}|{rep.odd_dim}")
    return code


def _fraction(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(exc.message) from None


def _add_table_commands(sub, parents) -> None:
    p = sub.add_parser("verify-axioms", parents=parents, help="check the Chevalley basis axioms")
    p.set_defaults(func=cmd_verify_axioms)
    p = sub.add_parser("jacobi", parents=parents, help="check super-Jacobi on all basis triples")
    p.set_defaults(func=cmd_jacobi)
    p = sub.add_parser("table", parents=parents, help="print the bracket table")
    p.set_defaults(func=cmd_table)
    p = sub.add_parser("bracket", parents=parents, help="bracket of two elements of g")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_bracket)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(
        prog="superchevalley",
        description="Exact computations with D(2,1;a), its Kostant form and Chevalley supergroup.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_table_commands(sub, [common])

    p = sub.add_parser("straighten", parents=[common], help="PBW normal form of a Kostant word")
    p.add_argument("word")
    p.add_argument("--strategy", choices=STRATEGIES, default="leftmost")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("factorize", parents=[common], help="big-cell factorization of a group word")
    p.add_argument("word")
    p.add_argument("--odd-vars", type=int, default=4)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("check-lemmas", parents=[common], help="commutator and torus identities")
    p.add_argument("--odd-vars", type=int, default=4)
    p.set_defaults(func=cmd_check_lemmas)

    p = sub.add_parser("grouplike", parents=[common], help="group-like test for l^(a^k)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--trunc", type=int, default=8)
    p.set_defaults(func=cmd_grouplike)

    p = sub.add_parser("lie-check", parents=[common], help="Lie functor via dual numbers")
    p.set_defaults(func=cmd_lie_check)

    p = sub.add_parser("specialize", help="rerun a table command at a rational value of a")
    p.add_argument("--a", dest="a_value", type=_fraction, required=True, metavar="P/Q")
    spec_sub = p.add_subparsers(dest="inner", required=True)
    _add_table_commands(spec_sub, [common])
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "a_value", None) is not None:
            specialize(ScalarA(0), args.a_value)
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SpecializationError, CarrierError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
