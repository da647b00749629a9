"""Command-line front end.

Subcommands: enumerate, count, factor, eval, map, laws, verify.  Every
subcommand takes ``--json`` for a machine-readable envelope
``{"command": ..., "inputs": ..., "result": ...}``.

Exit status: 0 success/verified, 1 refuted or witness found, 2 usage
error, 3 resource bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import binary_trees, cubes, decorated_trees, laws, morphisms, permutations, planar_trees, series
from .errors import BoundExceeded, DuplexError

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

_FILTER_KINDS = {
    "sharp-indec": permutations.IndecKind.SHARP,
    "natural-indec": permutations.IndecKind.NATURAL,
    "s2-indec": permutations.IndecKind.S2,
}

_COUNT_SOURCES = {
    "u": "sharp-indec",
    "d": "s2-indec",
    "super-catalan": "super-catalan",
    "catalan": "catalan",
    "decorated": "dupl",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="duplexes",
        description="Enumerate, factor and evaluate elements of the two-operation "
        "structures on permutations, trees and cube vertices; audit their laws "
        "and verify the counting identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list a degree slice in canonical order")
    p.add_argument("--structure", required=True, choices=["perm", "tree", "decorated", "binary", "cube"])
    p.add_argument("--n", required=True, type=int, metavar="N")
    p.add_argument("--filter", choices=sorted(_FILTER_KINDS), help="perm only")
    _json_flag(p)

    p = sub.add_parser("count", help="print 'n value' lines of a counting sequence")
    p.add_argument("--sequence", required=True, choices=["u", "d", "super-catalan", "catalan", "decorated"])
    p.add_argument("--max", required=True, type=int, metavar="N", dest="max_degree")
    _json_flag(p)

    p = sub.add_parser("factor", help="factor a permutation")
    p.add_argument("--perm", required=True, metavar="(...)")
    p.add_argument("--mode", required=True, choices=["sharp", "natural", "duplex"])
    _json_flag(p)

    p = sub.add_parser("eval", help="evaluate a one-generator expression in a target structure")
    p.add_argument("--expr", required=True)
    p.add_argument("--target", required=True, choices=["perm", "binary", "cube"])
    _json_flag(p)

    p = sub.add_parser("map", help="apply one of the canonical homomorphisms")
    p.add_argument("--morphism", required=True, choices=["alpha", "rho", "phi", "leafsigns"])
    p.add_argument("--input", required=True)
    _json_flag(p)

    p = sub.add_parser("laws", help="audit the identities of a variety by exhaustive search")
    p.add_argument("--structure", required=True, choices=[s.value for s in laws.Structure])
    p.add_argument("--variety", required=True, choices=[v.value for v in laws.Variety])
    p.add_argument("--bound", required=True, type=int, metavar="B")
    _json_flag(p)

    p = sub.add_parser("verify", help="check a counting identity coefficient-wise")
    p.add_argument("--check", required=True, choices=list(series.CHECKS))
    p.add_argument("--order", type=int, help="truncation order (default depends on the check)")
    _json_flag(p)

    return parser


def _json_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported on stderr
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _dispatch(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (DuplexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args: argparse.Namespace) -> int:
    handler = {
        "enumerate": _cmd_enumerate,
        "count": _cmd_count,
        "factor": _cmd_factor,
        "eval": _cmd_eval,
        "map": _cmd_map,
        "laws": _cmd_laws,
        "verify": _cmd_verify,
    }[args.command]
    return handler(args)


def _emit(args: argparse.Namespace, inputs: dict, result, lines: list[str]) -> None:
    if args.json:
        print(json.dumps({"command": args.command, "inputs": inputs, "result": result}))
    else:
        for line in lines:
            print(line)


def _cmd_enumerate(args) -> int:
    if args.filter and args.structure != "perm":
        raise ValueError("--filter applies only to --structure perm")
    n = args.n
    if args.structure == "perm":
        if args.filter:
            elements = permutations.enumerate_indecomposable(n, _FILTER_KINDS[args.filter])
        else:
            elements = permutations.enumerate_permutations(n)
        rendered = [permutations.format_permutation(f) for f in elements]
    elif args.structure == "tree":
        rendered = [planar_trees.format_tree(t) for t in planar_trees.enumerate_trees(n)]
    elif args.structure == "decorated":
        rendered = [
            decorated_trees.format_expr(_expr_over_e(t)) for t in decorated_trees.enumerate_decorated(n)
        ]
    elif args.structure == "binary":
        rendered = [binary_trees.format_binary(u) for u in binary_trees.enumerate_binary(n)]
    else:
        rendered = [cubes.format_cube(a) for a in cubes.enumerate_cubes(n)]
    inputs = {"structure": args.structure, "n": n}
    if args.filter:
        inputs["filter"] = args.filter
    _emit(args, inputs, rendered, rendered)
    return EXIT_OK


def _expr_over_e(t: decorated_trees.DecoratedTree) -> decorated_trees.DuplexExpr:
    return decorated_trees.DuplexExpr(t, ("e",) * t.degree, frozenset({"e"}))


def _cmd_count(args) -> int:
    source = _COUNT_SOURCES[args.sequence]
    values = series.from_counts(source, args.max_degree)
    pairs = [[n, values.coefficients[n]] for n in range(1, args.max_degree + 1)]
    lines = [f"{n} {v}" for n, v in pairs]
    _emit(args, {"sequence": args.sequence, "max": args.max_degree}, pairs, lines)
    return EXIT_OK


def _cmd_factor(args) -> int:
    f = permutations.parse_permutation(args.perm)
    inputs = {"perm": permutations.format_permutation(f), "mode": args.mode}
    if args.mode in ("sharp", "natural"):
        factorize = permutations.sharp_factorize if args.mode == "sharp" else permutations.natural_factorize
        factors = [permutations.format_permutation(g) for g in factorize(f)]
        _emit(args, inputs, factors, [" ".join(factors)])
        return EXIT_OK
    expr = permutations.duplex_factorize(f)
    text = decorated_trees.format_expr(expr, permutations.format_permutation)
    tree_text, tag, labels = decorated_trees.expr_to_machine(expr, permutations.format_permutation)
    _emit(args, inputs, {"expr": text, "tree": tree_text, "tag": tag, "labels": labels}, [text])
    return EXIT_OK


_GENERATORS = {
    "perm": permutations.Permutation((1,)),
    "binary": binary_trees.SINGLE_NODE,
    "cube": cubes.SINGLETON,
}

_TARGET_OPS = {
    "perm": permutations.PERM_OPS,
    "binary": binary_trees.BINARY_OPS,
    "cube": cubes.CUBE_OPS,
}

_FORMATTERS = {
    "perm": permutations.format_permutation,
    "binary": binary_trees.format_binary,
    "cube": cubes.format_cube,
}


def _parse_cli_expr(text: str) -> decorated_trees.DuplexExpr:
    # the alphabet is whatever identifiers appear in the text
    alphabet = set(re.findall(r"[a-z][a-z0-9]*", text)) or {"e"}
    return decorated_trees.parse_expr(text, alphabet)


def _cmd_eval(args) -> int:
    expr = _parse_cli_expr(args.expr)
    if len(set(expr.labels)) != 1:
        raise ValueError("eval needs a single-generator expression")
    assignment = {expr.labels[0]: _GENERATORS[args.target]}
    value = decorated_trees.eval_hom(expr, assignment, _TARGET_OPS[args.target])
    rendered = _FORMATTERS[args.target](value)
    _emit(args, {"expr": args.expr, "target": args.target}, rendered, [rendered])
    return EXIT_OK


def _cmd_map(args) -> int:
    inputs = {"morphism": args.morphism, "input": args.input}
    if args.morphism == "phi":
        u = binary_trees.parse_binary(args.input)
        rendered = cubes.format_cube(morphisms.phi(u))
    else:
        expr = _parse_cli_expr(args.input)
        if args.morphism == "alpha":
            rendered = permutations.format_permutation(morphisms.alpha(expr))
        elif args.morphism == "rho":
            rendered = binary_trees.format_binary(morphisms.rho(expr))
        else:
            rendered = cubes.format_cube(morphisms.leaf_sign_vector(expr))
    _emit(args, inputs, rendered, [rendered])
    return EXIT_OK


def _cmd_laws(args) -> int:
    structure = laws.Structure(args.structure)
    report = laws.check_laws(structure, laws.Variety(args.variety), args.bound)
    witness = (
        None
        if report.witness is None
        else [laws.format_element(structure, x) for x in report.witness]
    )
    result = {
        "satisfied": report.satisfied,
        "failing_identity": report.failing_identity,
        "witness": witness,
        "triples_checked": report.triples_checked,
    }
    if report.satisfied:
        lines = [
            f"SATISFIED: {args.variety} on {args.structure} up to total degree "
            f"{args.bound} ({report.triples_checked} triples checked)"
        ]
    else:
        lines = [
            f"REFUTED: {report.failing_identity}",
            f"witness: a={witness[0]} b={witness[1]} c={witness[2]}",
            f"({report.triples_checked} triples checked)",
        ]
    _emit(args, {"structure": args.structure, "variety": args.variety, "bound": args.bound}, result, lines)
    return EXIT_OK if report.satisfied else EXIT_REFUTED


def _cmd_verify(args) -> int:
    report = series.verify_identity(args.check, args.order)
    checks = [
        {
            "label": c.label,
            "ok": c.ok,
            "mismatch": None
            if c.ok
            else {"degree": c.mismatch_degree, "lhs": c.lhs_coefficient, "rhs": c.rhs_coefficient},
        }
        for c in report.checks
    ]
    result = {"ok": report.ok, "order": report.order, "checks": checks}
    if report.ok:
        lines = ["PASS"]
    else:
        failure = report.first_failure()
        lines = [
            f"FAIL {failure.label}: first differing coefficient at degree "
            f"{failure.mismatch_degree}: lhs={failure.lhs_coefficient} rhs={failure.rhs_coefficient}"
        ]
    _emit(args, {"check": args.check, "order": report.order}, result, lines)
    return EXIT_OK if report.ok else EXIT_REFUTED


if __name__ == "__main__":
    sys.exit(main())
