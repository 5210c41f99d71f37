"""Undirected simple graphs with integer vertex ids 0..n-1.

The text file format is:

    # optional comment lines
    n m
    u v        (m lines, 0 <= u < v < n, each undirected edge once)

Vertex ids double as the unique identifiers of the LOCAL model; all
tie-breaking in this package is by minimum id.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphParseError(ValueError):
    """Raised on malformed graph or vertex-set files; carries a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: sorted adjacency lists over vertices 0..n-1."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _neighbor_sets: tuple[frozenset[int], ...] = field(
        repr=False, compare=False, default=()
    )

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, validating simplicity."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return Graph._from_sets(n, adj)

    @staticmethod
    def _from_sets(n: int, adj: Sequence[set[int]]) -> "Graph":
        lists = tuple(tuple(sorted(s)) for s in adj)
        sets = tuple(frozenset(s) for s in adj)
        g = Graph(n, lists)
        object.__setattr__(g, "_neighbor_sets", sets)
        return g

    def __post_init__(self):
        if not self._neighbor_sets:
            object.__setattr__(
                self, "_neighbor_sets", tuple(frozenset(a) for a in self.adjacency)
            )

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def closed_neighborhood(self, v: int) -> set[int]:
        return set(self.adjacency[v]) | {v}

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raises GraphParseError naming the bad line."""
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n < 0:
            if len(parts) != 2:
                raise GraphParseError("expected header 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError("expected integer header 'n m'", lineno) from None
            if n < 0 or m < 0:
                raise GraphParseError("n and m must be nonnegative", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError("expected edge line 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("expected integer edge line 'u v'", lineno) from None
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex id out of range [0, {n})", lineno)
        if u > v:
            raise GraphParseError(f"edge endpoints must satisfy u < v, got {u} {v}", lineno)
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if n < 0:
        raise GraphParseError("missing header line 'n m'")
    if len(edges) != m:
        raise GraphParseError(f"header announced {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_edge_list; edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_vertex_set(text: str, n: int | None = None) -> set[int]:
    """Parse a vertex-set file: one id per line, '#' comments allowed."""
    result: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = int(line)
        except ValueError:
            raise GraphParseError("expected a vertex id", lineno) from None
        if n is not None and not (0 <= v < n):
            raise GraphParseError(f"vertex id out of range [0, {n})", lineno)
        result.add(v)
    return result


def serialize_vertex_set(s: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in sorted(s))


def verify_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex is in s or adjacent to a member of s."""
    chosen = set(s)
    for v in chosen:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex id {v} out of range [0, {g.n})")
    dominated = set(chosen)
    for v in chosen:
        dominated.update(g.adjacency[v])
    return len(dominated) == g.n
