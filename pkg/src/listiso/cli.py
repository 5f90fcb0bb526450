"""Command-line front end.

Subcommands: solve, verify, count, classify, gen (planted | sat), reduce.
Exit codes mirror answers so shell pipelines can branch: 0 yes, 1 no,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .basic import reduce_aut_to_iso, reduce_iso_to_aut
from .core import InstanceError, UsageError, classify_instance, verify_list_iso
from .dispatch import ALGORITHMS, solve_with
from .generate import PLANTED_SHAPES, gen_planted, gen_sat_formula
from .hardness import cnf_1in3_to_listaut, lift_bipartite_subdivision, lift_split_clique
from .serialize import (
    ParseError,
    emit_formula,
    emit_instance,
    emit_result,
    parse_formula,
    parse_instance,
    parse_mapping,
)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as handle:
        return handle.read()


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="listiso",
        description="Solve, verify, generate, and reduce list-restricted graph isomorphism instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide an instance file ('-' for stdin)")
    solve.add_argument("--algo", choices=ALGORITHMS, default="auto")
    solve.add_argument("--k", type=int, default=None, help="width bound for --algo treewidth")
    solve.add_argument("--time", action="store_true", help="print elapsed milliseconds to stderr")
    solve.add_argument("file")

    verify = sub.add_parser("verify", help="check a mapping file against an instance file")
    verify.add_argument("file")
    verify.add_argument("mappingfile")

    count = sub.add_parser("count", help="count list-compatible isomorphisms (brute force)")
    count.add_argument("file")

    classify = sub.add_parser("classify", help="report the engine auto-dispatch would pick")
    classify.add_argument("file")

    gen = sub.add_parser("gen", help="generate instances or formulas")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    planted = gen_sub.add_parser("planted", help="instance with a hidden isomorphism")
    planted.add_argument("--shape", choices=PLANTED_SHAPES, required=True)
    planted.add_argument("--n", type=int, required=True)
    planted.add_argument("--seed", type=int, default=0)
    planted.add_argument("--list-width", type=int, default=3)
    planted.add_argument("--noise", type=float, default=0.0)
    planted.add_argument("--out", default=None)
    sat = gen_sub.add_parser("sat", help="random positive 1-in-3 formula")
    sat.add_argument("--vars", type=int, required=True)
    sat.add_argument("--clauses", type=int, required=True)
    sat.add_argument("--seed", type=int, default=0)
    sat.add_argument("--out", default=None)

    reduce_p = sub.add_parser("reduce", help="apply a reduction to a file")
    reduce_p.add_argument(
        "kind",
        choices=("iso2aut", "aut2iso", "sat-gadget", "lift-bipartite", "lift-split"),
    )
    reduce_p.add_argument("file")
    reduce_p.add_argument("--out", default=None)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return _dispatch(args)
    except (UsageError, InstanceError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "solve":
        inst = parse_instance(_read(args.file))
        started = time.perf_counter()
        result = solve_with(inst, args.algo, args.k)
        if args.time:
            elapsed = (time.perf_counter() - started) * 1000.0
            print(f"{elapsed:.1f} ms", file=sys.stderr)
        text, code = emit_result(result)
        sys.stdout.write(text)
        return code

    if args.command == "verify":
        inst = parse_instance(_read(args.file))
        mapping = parse_mapping(_read(args.mappingfile))
        ok = verify_list_iso(inst, mapping)
        sys.stdout.write(json.dumps({"verified": ok}) + "\n")
        return 0 if ok else 1

    if args.command == "count":
        from .oracle import count_list_isos

        inst = parse_instance(_read(args.file))
        sys.stdout.write(json.dumps({"count": count_list_isos(inst)}) + "\n")
        return 0

    if args.command == "classify":
        inst = parse_instance(_read(args.file))
        sys.stdout.write(json.dumps({"engine": classify_instance(inst)}) + "\n")
        return 0

    if args.command == "gen":
        if args.kind == "planted":
            inst = gen_planted(args.shape, args.n, args.seed, args.list_width, args.noise)
            _write(emit_instance(inst), args.out)
        else:
            formula = gen_sat_formula(args.vars, args.clauses, args.seed)
            _write(emit_formula(formula), args.out)
        return 0

    if args.command == "reduce":
        if args.kind == "sat-gadget":
            formula = parse_formula(_read(args.file))
            gadget = cnf_1in3_to_listaut(formula)
            _write(emit_instance(gadget.instance), args.out)
            return 0
        inst = parse_instance(_read(args.file))
        if args.kind == "iso2aut":
            out = reduce_iso_to_aut(inst)
        elif args.kind == "aut2iso":
            out = reduce_aut_to_iso(inst)
        elif args.kind == "lift-bipartite":
            out = lift_bipartite_subdivision(inst)
        else:
            out = lift_split_clique(inst)
        _write(emit_instance(out), args.out)
        return 0

    raise UsageError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
