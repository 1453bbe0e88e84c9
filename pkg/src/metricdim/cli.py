"""Command-line interface: ``gen``, ``dim``, ``check``, ``classes``, ``verify``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 disconnected
graph, 4 solver budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .amalgam import BlockSpec, amalgamate, family_block, format_labels, parse_block_dsl, parse_terminal
from .errors import BudgetExceeded, InvalidParameter, NotConnected, ParseError
from .graph_core import all_pairs_distances, read_edge_list, write_edge_list
from .resolving import (
    class_lower_bound,
    distance_similar_partition,
    find_collision,
    representation,
    vertex_set,
)
from .solver import metric_dimension_exact, metric_dimension_naive
from .verify import run_sweep, summarize, write_csv

EXIT_FAIL, EXIT_INPUT, EXIT_DISCONNECTED, EXIT_BUDGET = 1, 2, 3, 4


def _emit(record: dict) -> None:
    print(json.dumps(record))


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"bad id list {text!r}") from None


def parse_range(text: str) -> list[int]:
    """``"3..6"`` or ``"3,4,6"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return _parse_ids(text)
    except ValueError:
        raise ParseError(f"bad size range {text!r}") from None


def cmd_gen(args) -> int:
    blocks = []
    if args.blocks:
        blocks.extend(family_block(f, s, args.mode) for f, s in parse_block_dsl(args.blocks))
    files = args.block or []
    terminals = args.terminal or []
    if len(files) != len(terminals):
        raise ParseError("each --block file needs exactly one --terminal")
    for path, term in zip(files, terminals):
        blocks.append(BlockSpec(read_edge_list(path), parse_terminal(term)))
    if not blocks:
        raise ParseError("no blocks given")
    g, labeling = amalgamate(blocks, args.mode)
    out = Path(args.output)
    write_edge_list(g, out, comments=[f"{args.mode}-amalgamation of {len(blocks)} block(s)"])
    Path(f"{out}.labels.txt").write_text(format_labels(labeling))
    return 0


def cmd_dim(args) -> int:
    dm = all_pairs_distances(read_edge_list(args.graph))
    start = time.perf_counter()
    solve = metric_dimension_naive if args.naive else metric_dimension_exact
    result = solve(dm, budget=args.budget)
    elapsed = (time.perf_counter() - start) * 1000
    _emit({
        "dim": result.dim,
        "basis": list(result.basis),
        "lower_bound": class_lower_bound(distance_similar_partition(dm)),
        "elapsed_ms": round(elapsed, 3),
    })
    return 0


def cmd_check(args) -> int:
    dm = all_pairs_distances(read_edge_list(args.graph))
    s = vertex_set(dm, _parse_ids(args.set))
    collision = find_collision(dm, s)
    if collision is None:
        _emit({"resolving": True})
    else:
        _emit({
            "resolving": False,
            "collision": list(collision),
            "representations": [list(representation(dm, v, s)) for v in collision],
        })
    return 0


def cmd_classes(args) -> int:
    dm = all_pairs_distances(read_edge_list(args.graph))
    p = distance_similar_partition(dm)
    _emit({"classes": [list(c) for c in p.classes], "lower_bound": class_lower_bound(p)})
    return 0


def cmd_verify(args) -> int:
    rows = run_sweep(
        args.theorem,
        parse_range(args.sizes),
        max_n=args.max_n,
        min_n=args.min_n,
        max_vertices=args.max_vertices,
        budget=args.budget,
        jobs=args.jobs,
    )
    code, lines = summarize(rows)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(rows, fh, timing=not args.no_timing)
        report = sys.stdout
    else:
        write_csv(rows, sys.stdout, timing=not args.no_timing)
        report = sys.stderr
    for line in lines:
        print(line, file=report)
    return code


def _env_budget() -> int | None:
    raw = os.environ.get("METRICDIM_BUDGET")
    return int(raw) if raw else None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metricdim", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=int, default=None,
                        help="cap on solver subset examinations (default: $METRICDIM_BUDGET or none)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build an amalgam and write it as an edge list")
    p.add_argument("blocks", nargs="?", help="block DSL, e.g. K3,K4,Pr5")
    p.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    p.add_argument("--block", action="append", help="edge-list file of an extra block")
    p.add_argument("--terminal", action="append", help="terminal of the matching --block: <v> or <a>:<b>")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dim", help="exact metric dimension of a graph file")
    p.add_argument("graph")
    p.add_argument("--naive", action="store_true", help="use the unpruned enumeration oracle")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("check", help="test whether a vertex set resolves a graph")
    p.add_argument("graph")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classes", help="distance-similar classes and their lower bound")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("verify", help="sweep a theorem against the exact solver")
    p.add_argument("theorem", choices=("cycle-vertex", "cycle-edge", "complete-vertex", "complete-edge", "prism-vertex", "prism-edge"))
    p.add_argument("--sizes", required=True, help="block sizes, e.g. 3..6 or 3,5,7")
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--csv", help="write rows here; default stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for byte-stable output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is None:
        args.budget = _env_budget()
    try:
        return args.func(args)
    except (ParseError, InvalidParameter, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotConnected as exc:
        print(f"error: graph is not connected ({exc})", file=sys.stderr)
        return EXIT_DISCONNECTED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
