"""Command line front end.

Subcommands ``enumerate``, ``count``, and ``bench`` share one option set:
a graph file in the ``n m`` edge-list format, ``--mode alpha|odseq|korient``,
and the mode's parameters.  Solutions stream line by line ('+'/'-' strings
for orientations, space-separated integers for outdegree sequences) and the
final line is ``# count=<N>``.  ``bench`` swaps the solution stream for one
JSON record per inter-solution gap plus a summary record.
"""
from __future__ import annotations

import argparse
import json
import sys

from .alpha import enumerate_alpha
from .kconn import enumerate_k_connected, find_k_connected_orientation
from .metering import DelayMeter
from .multigraph import GraphParseError, Multigraph, Orientation, parse_graph
from .connectivity import is_k_connected
from .sequences import enumerate_outdegree_sequences
from . import oracle

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PARAMS = 2

MODES = ("alpha", "odseq", "korient")


class ParameterError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orientations",
        description="Enumerate alpha-orientations and k-arc-connected orientations of a multigraph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("enumerate", "stream solutions line by line, then a count line"),
        ("count", "run the enumeration and print only the count line"),
        ("bench", "run the enumeration and print delay statistics as JSON lines"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("graph", help="graph file: first line 'n m', then m lines 'u v'")
        cmd.add_argument("--mode", required=True, choices=MODES, help="what to enumerate")
        cmd.add_argument("--k", type=int, help="connectivity parameter for odseq/korient (>= 1)")
        cmd.add_argument("--alpha", help="comma-separated target outdegrees for alpha mode")
        cmd.add_argument(
            "--oracle",
            action="store_true",
            help="use the brute-force reference enumeration (test reproduction)",
        )
        cmd.add_argument(
            "--seed-orientation",
            metavar="FILE",
            help="file holding a '+/-' orientation used as the starting point",
        )
        cmd.add_argument("-o", "--output", help="write to this file instead of stdout")
    return parser


def _parse_alpha(text: str, n: int) -> tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParameterError(f"--alpha must be comma-separated integers, got {text!r}") from None
    if len(values) != n:
        raise ParameterError(f"--alpha has {len(values)} entries, graph has {n} vertices")
    return values


def _load_seed(path: str | None, graph: Multigraph, k: int) -> Orientation | None:
    if path is None:
        return None
    with open(path, encoding="utf-8") as fh:
        seed = Orientation.deserialize(graph, fh.read())
    if not is_k_connected(seed, k):
        raise ParameterError("seed orientation is not k-connected")
    return seed


def _emit(stream, line: str) -> None:
    stream.write(line + "\n")
    stream.flush()


def _run(args, out) -> int:
    graph = parse_graph_file(args.graph)
    # Backtracking depth scales with the edge count.
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * graph.m + graph.n + 200))
    mode = args.mode

    if mode == "alpha":
        if args.alpha is None:
            raise ParameterError("alpha mode requires --alpha")
        alpha = _parse_alpha(args.alpha, graph.n)
    else:
        if args.k is None:
            raise ParameterError(f"{mode} mode requires --k")
        if args.k < 1:
            raise ParameterError("--k must be at least 1")

    emit_solutions = args.command == "enumerate"
    bench = args.command == "bench"
    if bench and args.oracle:
        raise ParameterError("bench does not support --oracle")

    meter = DelayMeter()
    count = 0

    def orientation_sink(d: Orientation) -> None:
        nonlocal count
        count += 1
        if emit_solutions:
            _emit(out, d.serialize())

    def sequence_sink(seq, _witness=None) -> None:
        nonlocal count
        count += 1
        if emit_solutions:
            _emit(out, " ".join(str(x) for x in seq))

    if mode == "alpha":
        if args.oracle:
            for d in oracle.all_orientations(graph):
                if d.outdegrees() == alpha:
                    orientation_sink(d)
        else:
            enumerate_alpha(graph, alpha, orientation_sink, meter=meter)
    elif mode == "korient":
        if args.oracle:
            oracle.enumerate_k_connected_backtrack(graph, args.k, orientation_sink)
        else:
            seed = _load_seed(args.seed_orientation, graph, args.k)
            enumerate_k_connected(graph, args.k, orientation_sink, seed=seed, meter=meter)
    else:
        if args.oracle:
            for seq in sorted(oracle.oracle_sequences(graph, args.k)):
                sequence_sink(seq)
        else:
            seed = _load_seed(args.seed_orientation, graph, args.k)
            if seed is None:
                seed = find_k_connected_orientation(graph, args.k, meter)
            if seed is not None:
                enumerate_outdegree_sequences(graph, args.k, seed, sequence_sink, meter=meter)
            else:
                meter.finished()

    if bench:
        for i, gap in enumerate(meter.gaps):
            record = {"record": "gap", "index": i, "bfs_runs": gap.bfs_runs, "arc_touches": gap.arc_touches, "ops": gap.ops}
            _emit(out, json.dumps(record))
        summary = {"record": "summary", "mode": mode}
        summary.update(meter.summary())
        _emit(out, json.dumps(summary))
    else:
        _emit(out, f"# count={count}")
    return EXIT_OK


def parse_graph_file(path: str) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
        try:
            return _run(args, out)
        finally:
            if args.output:
                out.close()
    except (OSError, GraphParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
