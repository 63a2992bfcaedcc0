"""Orientations with a prescribed outdegree vector: find one, list them all.

Two orientations have the same outdegree vector exactly when one arises from
the other by reversing arc-disjoint directed cycles, which is what both the
initial search (path-reversal rebalancing driven to the target vector) and
the enumeration (fix edges one by one, branching on a completing cycle)
lean on.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Callable, Sequence

from .metering import DelayMeter
from .multigraph import Multigraph, Orientation
from .paths import find_directed_path

__all__ = [
    "find_alpha_orientation",
    "enumerate_alpha",
    "same_alpha_cycle_decomposition",
]


def find_alpha_orientation(
    graph: Multigraph,
    alpha: Sequence[int],
    meter: DelayMeter | None = None,
) -> Orientation | None:
    """An orientation whose outdegree vector equals ``alpha``, or None.

    Starts from the all-forward orientation and repeatedly reverses a
    shortest directed path from a vertex above its target outdegree to one
    below it; each reversal moves one unit of outdegree.  When no such path
    remains while targets are unmet, none exists (the set reachable from the
    overfull vertices certifies infeasibility).
    """
    if len(alpha) != graph.n:
        raise ValueError("alpha length must equal vertex count")
    target = [int(a) for a in alpha]
    if any(a < 0 for a in target) or sum(target) != graph.m:
        return None
    d = Orientation(graph)
    out = list(d.outdegrees())
    while True:
        surplus = [v for v in range(graph.n) if out[v] > target[v]]
        if not surplus:
            return d
        path = _rebalancing_path(d, surplus, lambda w: out[w] < target[w], meter)
        if path is None:
            return None
        src, dst, edge_list = path
        d._flip(edge_list)
        if meter is not None:
            meter.arcs(len(edge_list))
        out[src] -= 1
        out[dst] += 1


def _rebalancing_path(
    d: Orientation,
    sources: list[int],
    is_sink: Callable[[int], bool],
    meter: DelayMeter | None,
) -> tuple[int, int, list[int]] | None:
    # Multi-source BFS along current arcs to the first vertex satisfying is_sink.
    graph = d.graph
    dirs = d._dirs
    if meter is not None:
        meter.bfs()
    parent: dict[int, tuple[int, int]] = {s: (-1, -1) for s in sources}
    queue = deque(sources)
    touched = 0
    found = None
    while queue and found is None:
        x = queue.popleft()
        for e, w, x_is_first in graph.incidence[x]:
            touched += 1
            if (dirs[e] == 1) != x_is_first or w in parent:
                continue
            parent[w] = (x, e)
            if is_sink(w):
                found = w
                break
            queue.append(w)
    if meter is not None:
        meter.arcs(touched)
    if found is None:
        return None
    edge_list: list[int] = []
    w = found
    while True:
        x, e = parent[w]
        if x < 0:
            return (w, found, edge_list[::-1])
        edge_list.append(e)
        w = x


def enumerate_alpha(
    graph: Multigraph,
    alpha: Sequence[int],
    sink: Callable[[Orientation], None],
    *,
    meter: DelayMeter | None = None,
    check_invariants: bool = False,
) -> int:
    """Stream every orientation with outdegree vector ``alpha`` exactly once.

    Depth-first over edges in index order: at each level the current edge is
    first kept as is, then, when a directed path from its head back to its
    tail avoids all already-fixed edges, flipped together with that path
    (a directed cycle, so the outdegree vector is preserved).  Emission
    happens when every edge is fixed.  Returns the number of solutions.
    """
    meter = meter if meter is not None else DelayMeter()
    start = find_alpha_orientation(graph, alpha, meter)
    if start is None:
        meter.finished()
        return 0
    run = AlphaBacktrack(start, tuple(alpha), sink, meter, check_invariants)
    run.recurse(0)
    meter.finished()
    return run.count


class AlphaBacktrack:
    __slots__ = ("d", "alpha", "sink", "meter", "check", "count")

    def __init__(self, d: Orientation, alpha, sink, meter, check):
        self.d = d
        self.alpha = alpha
        self.sink = sink
        self.meter = meter
        self.check = check
        self.count = 0

    def recurse(self, fixed: int) -> None:
        d = self.d
        graph = d.graph
        if fixed == graph.m:
            if self.check and d.outdegrees() != self.alpha:
                raise AssertionError("emitted orientation misses the target outdegrees")
            self.meter.arcs(graph.m)
            self.sink(d.copy())
            self.meter.emitted()
            self.count += 1
            return
        prefix = bytes(d._dirs[:fixed]) if self.check else b""

        self.recurse(fixed + 1)

        e = fixed
        u, v = graph.edges[e]
        tail, head = (u, v) if d.forward(e) else (v, u)
        path = find_directed_path(d, head, tail, range(fixed), self.meter)
        if path.found:
            flips = path.edges + (e,)
            d._flip(flips)
            self.meter.arcs(len(flips))
            self.recurse(fixed + 1)
            d._flip(flips)
            self.meter.arcs(len(flips))

        if self.check and bytes(d._dirs[:fixed]) != prefix:
            raise AssertionError("fixed edge prefix changed within a branch")


def same_alpha_cycle_decomposition(d1: Orientation, d2: Orientation) -> list[list[int]] | None:
    """Arc-disjoint directed cycles of ``d1`` whose reversal yields ``d2``.

    Returns None when the outdegree vectors differ; raises when the two
    orientations belong to different multigraphs.  Cycles are vertex-simple
    and given as edge-index lists in traversal order.
    """
    if d1.graph != d2.graph:
        raise ValueError("orientations have different underlying graphs")
    if d1.outdegrees() != d2.outdegrees():
        return None
    graph = d1.graph
    differing = [e for e in range(graph.m) if d1.forward(e) != d2.forward(e)]
    # The differing arcs form a balanced (Eulerian) subdigraph of d1.
    out_arcs: dict[int, list[tuple[int, int]]] = {}
    for e in differing:
        out_arcs.setdefault(d1.tail(e), []).append((e, d1.head(e)))
    for arcs in out_arcs.values():
        arcs.reverse()  # pop() then takes the lowest edge index first

    cycles: list[list[int]] = []
    for e0 in differing:
        origin = d1.tail(e0)
        if not out_arcs.get(origin):
            continue
        vertex_stack = [origin]
        edge_stack: list[int] = []
        position = {origin: 0}
        while True:
            x = vertex_stack[-1]
            arcs = out_arcs.get(x)
            if not arcs:
                if len(vertex_stack) != 1:
                    raise AssertionError("differing arc set is not balanced")
                break
            e, w = arcs.pop()
            if w in position:
                j = position[w]
                cycles.append(edge_stack[j:] + [e])
                for gone in vertex_stack[j + 1 :]:
                    del position[gone]
                del vertex_stack[j + 1 :]
                del edge_stack[j:]
            else:
                vertex_stack.append(w)
                edge_stack.append(e)
                position[w] = len(vertex_stack) - 1
    return cycles
