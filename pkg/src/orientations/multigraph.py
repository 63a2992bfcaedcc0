"""Loopless multigraphs with index-identified edges, and their orientations.

Vertices are 0..n-1.  Parallel edges are allowed and are distinguished by
their position in the edge list; that position also fixes the canonical
linear order on edges that every enumerator in this package follows, so
output order is reproducible byte for byte.
"""
from __future__ import annotations

from collections.abc import Iterable

__all__ = [
    "GraphParseError",
    "Multigraph",
    "Orientation",
    "parse_graph",
    "graph_to_text",
]


class GraphParseError(ValueError):
    """Malformed graph or orientation text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Multigraph:
    """Immutable loopless multigraph.

    ``edges[i]`` is the pair of endpoints of edge ``i`` in the order they
    were listed; orientations refer to that order.  ``incidence[v]`` lists
    ``(edge, other_endpoint, v_is_first)`` for every edge at ``v``, in
    edge-index order.
    """

    __slots__ = ("n", "edges", "incidence")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        pairs = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            pairs.append((u, v))
        self.n = n
        self.edges = tuple(pairs)
        rows: list[list[tuple[int, int, bool]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            rows[u].append((e, v, True))
            rows[v].append((e, u, False))
        self.incidence = tuple(tuple(row) for row in rows)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


class Orientation:
    """A direction for every edge of a multigraph.

    Direction ``i`` is stored as 1 when edge ``i`` points from its first
    listed endpoint to its second, 0 otherwise.  The text form is one
    character per edge in index order: ``'+'`` for first-to-second, ``'-'``
    for the reverse.
    """

    __slots__ = ("graph", "_dirs")

    def __init__(self, graph: Multigraph, dirs: Iterable[int] | None = None):
        self.graph = graph
        if dirs is None:
            self._dirs = bytearray([1] * graph.m)
        else:
            self._dirs = bytearray(1 if d else 0 for d in dirs)
            if len(self._dirs) != graph.m:
                raise ValueError("direction vector length must equal edge count")

    def copy(self) -> "Orientation":
        dup = Orientation.__new__(Orientation)
        dup.graph = self.graph
        dup._dirs = bytearray(self._dirs)
        return dup

    def forward(self, e: int) -> bool:
        """True when edge ``e`` points from its first listed endpoint to its second."""
        return self._dirs[e] == 1

    def tail(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return u if self._dirs[e] else v

    def head(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return v if self._dirs[e] else u

    def out_arcs(self, v: int):
        """Yield ``(edge, head)`` for arcs leaving ``v``, in edge-index order."""
        dirs = self._dirs
        for e, w, v_is_first in self.graph.incidence[v]:
            if (dirs[e] == 1) == v_is_first:
                yield e, w

    def outdegree(self, v: int) -> int:
        dirs = self._dirs
        return sum(1 for e, _, v_is_first in self.graph.incidence[v] if (dirs[e] == 1) == v_is_first)

    def outdegrees(self) -> tuple[int, ...]:
        out = [0] * self.graph.n
        for e, d in enumerate(self._dirs):
            u, v = self.graph.edges[e]
            out[u if d else v] += 1
        return tuple(out)

    def cut_outdegree(self, members: Iterable[int]) -> int:
        """Number of arcs leaving the vertex set ``members``.

        ``members`` must be a nonempty proper subset of the vertices.
        """
        inside = set(members)
        if not inside or len(inside) >= self.graph.n:
            raise ValueError("cut must be a nonempty proper subset of the vertices")
        for v in inside:
            if not (0 <= v < self.graph.n):
                raise ValueError(f"cut member out of range: {v}")
        count = 0
        for e, d in enumerate(self._dirs):
            u, v = self.graph.edges[e]
            tail, head = (u, v) if d else (v, u)
            if tail in inside and head not in inside:
                count += 1
        return count

    def reverse_arcs(self, edge_indices: Iterable[int]) -> "Orientation":
        """New orientation with exactly the given edges flipped."""
        dup = self.copy()
        dup._flip(edge_indices)
        return dup

    def reverse_all(self) -> "Orientation":
        dup = self.copy()
        dup._flip(range(self.graph.m))
        return dup

    def _flip(self, edge_indices: Iterable[int]) -> None:
        # In-place; reserved for enumerators that own their scratch copy.
        dirs = self._dirs
        for e in edge_indices:
            dirs[e] ^= 1

    def serialize(self) -> str:
        return "".join("+" if d else "-" for d in self._dirs)

    @classmethod
    def deserialize(cls, graph: Multigraph, text: str) -> "Orientation":
        text = text.strip()
        if len(text) != graph.m:
            raise GraphParseError(1, f"orientation has {len(text)} characters, expected {graph.m}")
        for j, ch in enumerate(text):
            if ch not in "+-":
                raise GraphParseError(1, f"invalid direction character {ch!r} at position {j}")
        return cls(graph, (1 if ch == "+" else 0 for ch in text))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph == other.graph and self._dirs == other._dirs

    def __hash__(self) -> int:
        return hash((self.graph, bytes(self._dirs)))

    def __repr__(self) -> str:
        return f"Orientation({self.serialize()!r})"


def parse_graph(text: str) -> Multigraph:
    """Parse the line-based edge-list format.

    First line is ``n m``; the next ``m`` lines each hold one edge ``u v``
    with ``0 <= u, v < n`` and ``u != v``.  Duplicate lines create parallel
    edges.  Trailing blank lines are tolerated; anything else is an error
    that names the offending line.
    """
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise GraphParseError(1, "missing 'n m' header")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphParseError(1, f"expected 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphParseError(1, f"expected two integers, got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphParseError(1, "n and m must be non-negative")

    edges: list[tuple[int, int]] = []
    for j in range(m):
        lineno = j + 2
        if lineno > len(lines) or not lines[lineno - 1].split():
            raise GraphParseError(lineno, f"expected edge line {j + 1} of {m}")
        tokens = lines[lineno - 1].split()
        if len(tokens) != 2:
            raise GraphParseError(lineno, f"expected 'u v', got {lines[lineno - 1]!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(lineno, f"expected two integers, got {lines[lineno - 1]!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise GraphParseError(lineno, f"loop edge at vertex {u}")
        edges.append((u, v))

    for extra, line in enumerate(lines[m + 1 :], start=m + 2):
        if line.split():
            raise GraphParseError(extra, f"unexpected content after {m} edges: {line!r}")

    return Multigraph(n, edges)


def graph_to_text(graph: Multigraph) -> str:
    """Inverse of :func:`parse_graph`."""
    out = [f"{graph.n} {graph.m}"]
    out.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(out) + "\n"
