"""
Command line front end.

Subcommands: quiver, nf, mul, basis, dims, verify <suite>.
Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
All output is deterministic for fixed arguments and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import suites
from .exprs import ExprError, element_to_json_obj, element_to_text, normal_form
from .quiver import (InvalidQuiverError, Root, UnsupportedParameterError,
                     make_root, parse_quiver_arg)
from .scalars import DomainError, domain_from_flag


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quiver", default="cycle(3)",
                   help="family like cycle(3)/path(2), inline JSON, or @file.json")
    p.add_argument("--n", type=int, default=2, help="number of strands")
    p.add_argument("--field", default="Q", help="Q or Fp:p (odd prime)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--tau", default=None,
                   help="inline JSON overriding the reversal map, e.g. '{\"0\":0,\"1\":2,\"2\":1}'")


def _parse_block(quiver, text: str) -> Root:
    """A block is named by any residue sequence with its content, e.g. '0,1'."""
    labels = []
    for part in text.split(","):
        part = part.strip()
        try:
            labels.append(int(part))
        except ValueError:
            labels.append(part)
    content: dict = {}
    for v in labels:
        content[v] = content.get(v, 0) + 1
    return make_root(quiver, content)


def _tau_mapping(quiver, arg):
    if arg is None:
        return None
    raw = json.loads(arg)
    by_str = {str(v): v for v in quiver.vertices}
    return {by_str[k]: v for k, v in raw.items()}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="klrcalc",
                                 description=__doc__.strip().splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quiver", help="validate and print a quiver")
    _add_common(p)

    p = sub.add_parser("nf", help="normal form of an element expression")
    _add_common(p)
    p.add_argument("expr")

    p = sub.add_parser("mul", help="product of two element expressions")
    _add_common(p)
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = sub.add_parser("basis", help="truncated basis of a block")
    _add_common(p)
    p.add_argument("--block", required=True, help="content as comma list, e.g. 0,1")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--tags", default="G", choices=("G", "both"))

    p = sub.add_parser("dims", help="graded dimension tables and halving")
    _add_common(p)
    p.add_argument("--bound", type=int, default=3)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p)
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--block", default=None)
    p.add_argument("--fuzz", type=int, default=100,
                   help="fuzz count for the klr-relations suite")
    p.add_argument("--max-pairs", type=int, default=400,
                   help="product pairs sampled per parity combination (clifford)")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except (InvalidQuiverError, UnsupportedParameterError, DomainError,
            ExprError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    quiver = parse_quiver_arg(args.quiver)
    dom = domain_from_flag(args.field)
    tau_mapping = _tau_mapping(quiver, args.tau)

    if args.command == "quiver":
        obj = quiver.to_json_obj()
        if args.format == "json":
            print(json.dumps(obj, sort_keys=True, indent=2))
        else:
            print(json.dumps(obj, sort_keys=True))
            print("cartan:", json.dumps([list(r) for r in quiver.cartan_matrix()]))
        return 0

    if args.command in ("nf", "mul"):
        ctx = suites.make_context(quiver, args.n, dom, tau_mapping)
        if args.command == "nf":
            x = normal_form(args.expr, ctx)
        else:
            x = normal_form(args.lhs, ctx) * normal_form(args.rhs, ctx)
        if args.format == "json":
            print(json.dumps(element_to_json_obj(x), indent=2))
        else:
            print(element_to_text(x))
        return 0

    if args.command == "basis":
        ctx = suites.make_context(quiver, args.n, dom, tau_mapping)
        root = _parse_block(quiver, args.block)
        tags = ("G",) if args.tags == "G" else ("G", "G'")
        monos, table = ctx.enumerate_basis(root, args.bound, tags)
        if args.format == "json":
            from .algebra import Element
            obj = {
                "block": str(root),
                "count": len(monos),
                "monomials": [element_to_json_obj(
                    Element(ctx, {m: ctx.dom.one}))[0] for m in monos],
                "degree_table": {str(d): c for d, c in table.items()},
            }
            print(json.dumps(obj, sort_keys=True, indent=2))
        else:
            for m in monos:
                from .algebra import Element
                print(element_to_text(Element(ctx, {m: ctx.dom.one})))
            print(f"count: {len(monos)}")
            for d, c in table.items():
                print(f"deg {d}: {c}")
        return 0

    if args.command == "dims":
        report = suites.run_dims(quiver, args.n, dom, bound=args.bound,
                                 seed=args.seed, tau_mapping=tau_mapping)
        print(suites.emit_report(report, args.format))
        return report.exit_code

    # verify
    name = args.suite
    kwargs = {"seed": args.seed, "tau_mapping": tau_mapping}
    if name == "klr-relations":
        kwargs["bound"] = args.bound if args.bound is not None else 2
        kwargs["fuzz_triples"] = args.fuzz
        kwargs["fuzz_words"] = args.fuzz
    elif name == "clifford":
        kwargs["bound"] = args.bound if args.bound is not None else 1
        kwargs["max_pairs"] = args.max_pairs
        if args.block:
            kwargs["block"] = _parse_block(quiver, args.block)
    elif name == "dims":
        kwargs["bound"] = args.bound if args.bound is not None else 3
    else:
        kwargs["bound"] = args.bound if args.bound is not None else 1
    report = suites.SUITES[name](quiver, args.n, dom, **kwargs)
    print(suites.emit_report(report, args.format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
