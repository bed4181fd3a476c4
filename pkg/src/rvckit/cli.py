"""Command-line front end.

Exit codes are uniform across subcommands: 0 for success or a yes decision,
1 for a no decision or a failed check, 2 for usage and input-format errors.
Decision subcommands take --expect-yes / --expect-no so shell scripts can
assert either polarity without inspecting stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .gadgets import build_gadget, lift_coloring, pendant_reduction, project_coloring
from .graphs import Graph, PairSet, VertexColoring, graph_from_edges, pair_set
from .harness import SUITE_NAMES, run_suite
from .io import (
    InstanceFormatError,
    emit_dot,
    emit_gadget,
    emit_instance,
    label_text,
    parse_gadget,
    parse_instance,
)
from .rainbow import is_rainbow_vertex_connected, is_subset_rainbow_vc
from .solver import decide_rvc_le_k, decide_subset_rvc, rvc_exact


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _inline_or_file(value: str):
    """Interpret an argument as a file path when one exists, else inline JSON."""
    text = _read_file(value) if os.path.exists(value) else value
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"expected a file path or inline JSON: {e.msg}") from None


def _pairs_arg(value: str, g: Graph) -> PairSet:
    obj = _inline_or_file(value)
    if isinstance(obj, dict):
        obj = obj.get("pairs")
    if not isinstance(obj, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p) for p in obj
    ):
        raise InstanceFormatError("--pairs must supply a list of [a, b] pairs")
    try:
        ps = pair_set(tuple(p) for p in obj)
        ps.check_in_range(g)
    except ValueError as e:
        raise InstanceFormatError(f"bad pair list: {e}") from None
    return ps


def _coloring_arg(value: str, g: Graph) -> VertexColoring:
    obj = _inline_or_file(value)
    declared = None
    if isinstance(obj, dict):
        declared = obj.get("k")
        obj = obj.get("coloring")
    if not isinstance(obj, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in obj
    ):
        raise InstanceFormatError("--coloring must supply a list of integers")
    if len(obj) != g.n:
        raise InstanceFormatError(
            f"coloring has {len(obj)} entries, graph has {g.n} vertices"
        )
    k = declared if isinstance(declared, int) else max(obj, default=1)
    try:
        return VertexColoring(tuple(obj), k)
    except ValueError as e:
        raise InstanceFormatError(f"bad coloring: {e}") from None


def _coloring_line(witness: VertexColoring | None) -> str:
    if witness is None:
        return "coloring = none"
    return f"coloring = {list(witness.colors)}"


def _decision_exit(decision: bool, args) -> int:
    if getattr(args, "expect_no", False):
        return 0 if not decision else 1
    return 0 if decision else 1


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_solve(args) -> int:
    g, _, _ = parse_instance(_read_file(args.input))
    k, witness = rvc_exact(g)
    print(f"rvc = {k}")
    print(_coloring_line(witness))
    if args.out:
        if witness is not None:
            _write_or_print(emit_instance(g, coloring=witness), args.out)
        else:
            _write_or_print(emit_instance(g, k=0), args.out)
    return 0


def _cmd_decide(args) -> int:
    g, _, _ = parse_instance(_read_file(args.input))
    result = decide_rvc_le_k(g, args.k)
    if result.decision:
        print("yes")
        print(_coloring_line(result.witness))
        if args.out and result.witness is not None:
            _write_or_print(emit_instance(g, coloring=result.witness), args.out)
    else:
        print("no")
    return _decision_exit(result.decision, args)


def _cmd_subset(args) -> int:
    g, pairs, _ = parse_instance(_read_file(args.input))
    if args.pairs is not None:
        pairs = _pairs_arg(args.pairs, g)
    if pairs is None:
        raise InstanceFormatError("no requested pairs: give 'pairs' in the file or --pairs")
    result = decide_subset_rvc(g, pairs, args.k)
    if result.decision:
        print("yes")
        print(_coloring_line(result.witness))
        if args.out and result.witness is not None:
            _write_or_print(emit_instance(g, pairs=pairs, coloring=result.witness), args.out)
    else:
        print("no")
    return _decision_exit(result.decision, args)


def _cmd_verify(args) -> int:
    g, pairs, col = parse_instance(_read_file(args.input))
    if args.pairs is not None:
        pairs = _pairs_arg(args.pairs, g)
    if args.coloring is not None:
        col = _coloring_arg(args.coloring, g)
    if col is None:
        raise InstanceFormatError("no coloring: give 'coloring' in the file or --coloring")
    if pairs is None:
        ok = is_rainbow_vertex_connected(g, col)
    else:
        ok = is_subset_rainbow_vc(g, col, pairs)
    print("yes" if ok else "no")
    return _decision_exit(ok, args)


def _cmd_gadget(args) -> int:
    g, pairs, _ = parse_instance(_read_file(args.input))
    if args.pairs is not None:
        pairs = _pairs_arg(args.pairs, g)
    if pairs is None:
        raise InstanceFormatError("no requested pairs: give 'pairs' in the file or --pairs")
    gg = build_gadget(g, pairs, args.k)
    _write_or_print(emit_gadget(gg), args.out)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(emit_dot(gg))
    return 0


def _cmd_lift(args) -> int:
    g, pairs, col = parse_instance(_read_file(args.input))
    if args.pairs is not None:
        pairs = _pairs_arg(args.pairs, g)
    if pairs is None:
        raise InstanceFormatError("no requested pairs: give 'pairs' in the file or --pairs")
    if args.coloring is not None:
        col = _coloring_arg(args.coloring, g)
    if col is None:
        raise InstanceFormatError("no coloring: give 'coloring' in the file or --coloring")
    gg = build_gadget(g, pairs, args.k)
    ck = lift_coloring(g, pairs, args.k, col, gadget=gg)
    labels = [label_text(lab, gg.k) for lab in gg.labels]
    _write_or_print(
        emit_instance(gg.graph, pairs=gg.pairs_k, coloring=ck, labels=labels), args.out
    )
    return 0


def _cmd_project(args) -> int:
    text = _read_file(args.input)
    gg = parse_gadget(text)
    if args.coloring is not None:
        ck = _coloring_arg(args.coloring, gg.graph)
    else:
        _, _, ck = parse_instance(text)
        if ck is None:
            raise InstanceFormatError(
                "project needs a coloring: none in the file and no --coloring given"
            )
    c = project_coloring(gg, ck)
    index = {vid: i for i, vid in enumerate(gg.base)}
    source = graph_from_edges(
        gg.source_n, ((index[u], index[v]) for u, v in gg.base_edges)
    )
    _write_or_print(emit_instance(source, coloring=c), args.out)
    return 0


def _cmd_reduce_lemma1(args) -> int:
    g, _, _ = parse_instance(_read_file(args.input))
    inst = pendant_reduction(g)
    _write_or_print(emit_instance(inst.graph, pairs=inst.pairs), args.out)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(emit_dot(inst.graph, pairs=inst.pairs))
    return 0


def _cmd_claims(args) -> int:
    reports = run_suite(args.suite, cap=args.cap, jobs=args.jobs)
    for r in reports:
        line = f"{r.status.upper():<5} {r.check:<19} {r.instance}"
        if r.detail:
            line += f"  ({r.detail})"
        print(line)
    npass = sum(r.status == "pass" for r in reports)
    nfail = sum(r.status == "fail" for r in reports)
    nskip = sum(r.status == "skip" for r in reports)
    print(f"{len(reports)} checks: {npass} pass, {nfail} fail, {nskip} skip")
    if args.out:
        payload = [
            {"check": r.check, "instance": r.instance, "status": r.status, "detail": r.detail}
            for r in reports
        ]
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 1 if nfail else 0


# ---------------------------------------------------------------------------
# Parser


def _add_io_flags(p, pairs=False, coloring=False, out=True, dot=False):
    p.add_argument("-i", "--input", required=True, help="instance file (JSON)")
    if pairs:
        p.add_argument("--pairs", help="requested pairs: file path or inline JSON")
    if coloring:
        p.add_argument("--coloring", help="vertex coloring: file path or inline JSON")
    if out:
        p.add_argument("-o", "--out", help="write the result file here instead of stdout")
    if dot:
        p.add_argument("--dot", help="also write a Graphviz DOT rendering here")


def _add_expect_flags(p):
    grp = p.add_mutually_exclusive_group()
    grp.add_argument(
        "--expect-yes", action="store_true", help="exit 0 on yes, 1 on no (the default)"
    )
    grp.add_argument(
        "--expect-no", dest="expect_no", action="store_true", help="exit 0 on no, 1 on yes"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rvckit",
        description="Rainbow vertex-connection: solve, verify, and build reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the exact rainbow vertex-connection number")
    _add_io_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("decide", help="decide whether k colors rainbow-connect all pairs")
    _add_io_flags(p)
    p.add_argument("-k", type=int, required=True, help="color budget")
    _add_expect_flags(p)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("subset", help="decide the requested-pairs variant under k colors")
    _add_io_flags(p, pairs=True)
    p.add_argument("-k", type=int, required=True, help="color budget")
    _add_expect_flags(p)
    p.set_defaults(func=_cmd_subset)

    p = sub.add_parser("verify", help="check a given coloring against all or requested pairs")
    _add_io_flags(p, pairs=True, coloring=True, out=False)
    _add_expect_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gadget", help="build the level-k reduction gadget for (graph, pairs)")
    _add_io_flags(p, pairs=True, dot=True)
    p.add_argument("-k", type=int, required=True, help="gadget level, at least 2")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("lift", help="lift a witness coloring onto the level-k gadget")
    _add_io_flags(p, pairs=True, coloring=True)
    p.add_argument("-k", type=int, required=True, help="gadget level, at least 2")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("project", help="restrict a gadget coloring back to the source graph")
    _add_io_flags(p, coloring=True)
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser(
        "reduce-lemma1", help="attach pendants and request their pairs along source edges"
    )
    _add_io_flags(p, dot=True)
    p.set_defaults(func=_cmd_reduce_lemma1)

    p = sub.add_parser("claims", help="run a sweep of construction checks")
    p.add_argument("--suite", choices=SUITE_NAMES, default="core")
    p.add_argument("--cap", type=int, default=18, help="skip exhaustive gadget search above this size")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("-o", "--out", help="also write the reports as JSON here")
    p.set_defaults(func=_cmd_claims)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except InstanceFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
