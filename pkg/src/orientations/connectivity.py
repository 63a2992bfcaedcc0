"""k-arc-connectivity of orientations and edge connectivity of multigraphs."""
from __future__ import annotations

from collections import deque

from .metering import DelayMeter
from .multigraph import Multigraph, Orientation
from .paths import lambda_at_least

__all__ = ["is_k_connected", "edge_connectivity"]


def is_k_connected(orientation: Orientation, k: int, meter: DelayMeter | None = None) -> bool:
    """True iff every nonempty proper vertex subset has at least ``k`` leaving arcs.

    Checked as: at least ``k`` arc-disjoint directed paths from a fixed root
    to every other vertex and back (every cut separates the root from some
    vertex in one of the two directions).  A single-vertex graph has no
    valid cut and is k-connected for every k.  ``k = 0`` is rejected.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = orientation.graph.n
    if n <= 1:
        return True
    for v in range(1, n):
        if not lambda_at_least(orientation, 0, v, k, meter):
            return False
        if not lambda_at_least(orientation, v, 0, k, meter):
            return False
    return True


def edge_connectivity(graph: Multigraph) -> int:
    """Minimum number of edges crossing any cut of the multigraph.

    Computed as the minimum over all vertices v of the max-flow value from a
    fixed root to v where every edge carries one unit in each direction.
    Returns 0 for disconnected graphs.  Requires at least two vertices.
    """
    if graph.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    return min(_local_edge_connectivity(graph, 0, v) for v in range(1, graph.n))


def _local_edge_connectivity(graph: Multigraph, s: int, t: int) -> int:
    # Unit capacity in each direction per edge; flow[e] is +1 first-to-second,
    # -1 the reverse, 0 unused.  Augmenting along a shortest residual path.
    flow = [0] * graph.m
    value = 0
    while True:
        parent: dict[int, tuple[int, int, int]] = {s: (-1, -1, 0)}
        queue = deque([s])
        reached = False
        while queue and not reached:
            x = queue.popleft()
            for e, w, x_is_first in graph.incidence[x]:
                if w in parent:
                    continue
                delta = 1 if x_is_first else -1
                if flow[e] * delta >= 1:
                    continue
                parent[w] = (x, e, delta)
                if w == t:
                    reached = True
                    break
                queue.append(w)
        if not reached:
            return value
        w = t
        while w != s:
            x, e, delta = parent[w]
            flow[e] += delta
            w = x
        value += 1
