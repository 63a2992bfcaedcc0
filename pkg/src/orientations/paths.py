"""Directed path search and arc-disjoint path counting over orientations.

This is the primitive layer under both enumerators.  The search is a plain
BFS that explores out-arcs in edge-index order, so among shortest paths the
one through the lowest-indexed arcs is found first and every caller inherits
that determinism.

The number of pairwise arc-disjoint directed u-to-v paths is tested against
a threshold by the reverse-and-repeat scheme: find a path, reverse it, and
iterate.  Each reversal lowers the u-to-v path count by exactly one, so the
threshold holds iff every iteration finds a path.  All of it happens on a
scratch copy; inputs are never mutated.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .metering import DelayMeter
from .multigraph import Orientation

__all__ = [
    "PathResult",
    "find_directed_path",
    "reverse_path",
    "lambda_at_least",
    "is_flippable_pair",
]


@dataclass(frozen=True)
class PathResult:
    """Outcome of a directed path search.

    ``arcs`` holds ``(edge, forward)`` pairs in traversal order, where
    ``forward`` records whether the edge was traversed from its first listed
    endpoint to its second.  Paths are arc-simple and consecutive arcs chain
    head to tail.
    """

    found: bool
    arcs: tuple[tuple[int, bool], ...] = ()

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)


_NOT_FOUND = PathResult(False)


def find_directed_path(
    orientation: Orientation,
    source: int,
    target: int,
    forbidden=(),
    meter: DelayMeter | None = None,
) -> PathResult:
    """Shortest directed path from ``source`` to ``target`` avoiding ``forbidden`` edges.

    ``forbidden`` is a container of edge indices excluded in both directions.
    Only the part of the digraph reachable from ``source`` is touched.
    """
    if source == target:
        raise ValueError("source and target must differ")
    graph = orientation.graph
    dirs = orientation._dirs
    if meter is not None:
        meter.bfs()
    touched = 0
    parent: dict[int, tuple[int, int]] = {source: (-1, -1)}
    queue = deque([source])
    hit = False
    while queue and not hit:
        x = queue.popleft()
        for e, w, x_is_first in graph.incidence[x]:
            touched += 1
            if e in forbidden or (dirs[e] == 1) != x_is_first or w in parent:
                continue
            parent[w] = (x, e)
            if w == target:
                hit = True
                break
            queue.append(w)
    if meter is not None:
        meter.arcs(touched)
    if not hit:
        return _NOT_FOUND
    arcs: list[tuple[int, bool]] = []
    w = target
    while w != source:
        x, e = parent[w]
        arcs.append((e, dirs[e] == 1))
        w = x
    arcs.reverse()
    return PathResult(True, tuple(arcs))


def reverse_path(orientation: Orientation, path: PathResult) -> Orientation:
    """New orientation with exactly the path's edges flipped.

    Reversing a directed path from ``u`` to ``v`` lowers the outdegree of
    ``u`` by one, raises the outdegree of ``v`` by one, and leaves every
    other vertex unchanged.  Raises if ``path`` is not a directed path in
    the given orientation.
    """
    if not path.found or not path.arcs:
        raise ValueError("path was not found or is empty")
    graph = orientation.graph
    seen: set[int] = set()
    previous_head: int | None = None
    for e, fwd in path.arcs:
        if e in seen:
            raise ValueError(f"edge {e} repeats; not an arc-simple path")
        seen.add(e)
        if orientation.forward(e) != fwd:
            raise ValueError(f"edge {e} is not oriented along the path")
        u, v = graph.edges[e]
        tail, head = (u, v) if fwd else (v, u)
        if previous_head is not None and tail != previous_head:
            raise ValueError("arcs do not chain head to tail")
        previous_head = head
    return orientation.reverse_arcs(path.edges)


def lambda_at_least(
    orientation: Orientation,
    u: int,
    v: int,
    threshold: int,
    meter: DelayMeter | None = None,
) -> bool:
    """True iff there are at least ``threshold`` pairwise arc-disjoint directed u-to-v paths."""
    if u == v:
        raise ValueError("u and v must differ")
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    scratch = orientation.copy()
    if meter is not None:
        meter.arcs(orientation.graph.m)
    for _ in range(threshold):
        path = find_directed_path(scratch, u, v, (), meter)
        if not path.found:
            return False
        scratch._flip(path.edges)
        if meter is not None:
            meter.arcs(len(path.arcs))
    return True


def is_flippable_pair(
    orientation: Orientation,
    u: int,
    v: int,
    k: int,
    meter: DelayMeter | None = None,
) -> bool:
    """True iff reversing any directed u-to-v path keeps the orientation k-connected.

    For a k-connected orientation this is equivalent to the u-to-v
    arc-disjoint path count exceeding ``k``; the same test is applied
    verbatim to any orientation.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return lambda_at_least(orientation, u, v, k + 1, meter)
