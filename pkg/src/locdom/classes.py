"""Graph classes and their per-class algorithm constants.

Each restricted class runs the same three-phase pipeline with different
parameters: the common-red-neighbor threshold of the pair-selection phase
(absent = phase disabled), the residual-degree cap that bounds the greedy
phase, the worst-case size constant of the first two phases, and the
edge-density data defining the class's worst-case linear program.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import inf

from .graph import Graph


class GraphClass(Enum):
    PLANAR = "planar"
    TRIANGLE_FREE_PLANAR = "trifree"
    BIPARTITE_PLANAR = "bipartite"
    GIRTH5_PLANAR = "girth5"
    OUTERPLANAR = "outerplanar"

    @staticmethod
    def from_name(name: str) -> "GraphClass":
        for cls in GraphClass:
            if cls.value == name:
                return cls
        raise ValueError(f"unknown graph class {name!r}")


@dataclass(frozen=True)
class ClassParams:
    pair_threshold: int | None  # None = pair-selection phase disabled
    residual_cap: int
    phase12_constant: int  # worst case |D1 u D2| / gamma at eps = 0
    lp_density_num: int
    lp_density_den: int
    lp_low_index: int  # first index of the d_i upper-bound family
    published_factor: int


CLASS_PARAMS: dict[GraphClass, ClassParams] = {
    GraphClass.PLANAR: ClassParams(10, 30, 4, 3, 1, 7, 20),
    GraphClass.TRIANGLE_FREE_PLANAR: ClassParams(7, 18, 3, 2, 1, 5, 14),
    GraphClass.BIPARTITE_PLANAR: ClassParams(7, 18, 2, 2, 1, 5, 13),
    GraphClass.GIRTH5_PLANAR: ClassParams(None, 3, 3, 5, 3, 4, 7),
    GraphClass.OUTERPLANAR: ClassParams(None, 9, 3, 2, 1, 5, 12),
}


def params_for(cls: GraphClass) -> ClassParams:
    return CLASS_PARAMS[cls]


def is_bipartite(g: Graph) -> bool:
    """BFS 2-coloring over all components."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def has_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if g.neighbor_set(u) & g.neighbor_set(v):
            return True
    return False


def girth(g: Graph) -> float:
    """Length of a shortest cycle, math.inf for forests.

    BFS from every vertex, O(n*m); fine at desk scale.
    """
    best = inf
    for start in range(g.n):
        dist = {start: 0}
        parent = {start: -1}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    # non-tree edge closes a cycle through start of length
                    # at least dist[u] + dist[w] + 1 (exact when it passes start)
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def edge_density(g: Graph) -> Fraction | None:
    return Fraction(g.m, g.n) if g.n else None


def check_class_sanity(g: Graph, cls: GraphClass) -> list[str]:
    """Report violated necessary conditions for membership in cls.

    An empty report means no violation was found; it is not a planarity
    proof (no embedding or minor test is attempted).
    """
    violations: list[str] = []
    n, m = g.n, g.m
    if n >= 3 and m > 3 * n - 6:
        violations.append(f"edge count {m} exceeds planar bound {3 * n - 6}")
    if cls is GraphClass.BIPARTITE_PLANAR:
        if n >= 3 and m > 2 * n - 4:
            violations.append(f"edge count {m} exceeds bipartite planar bound {2 * n - 4}")
        if not is_bipartite(g):
            violations.append("graph is not bipartite")
    if cls in (GraphClass.TRIANGLE_FREE_PLANAR, GraphClass.OUTERPLANAR):
        if n >= 3 and m > 2 * n - 3:
            violations.append(f"edge count {m} exceeds sparse bound {2 * n - 3}")
    if cls is GraphClass.TRIANGLE_FREE_PLANAR and has_triangle(g):
        violations.append("graph contains a triangle")
    if cls is GraphClass.GIRTH5_PLANAR:
        got = girth(g)
        if got < 5:
            violations.append(f"girth {int(got)} is smaller than 5")
    return violations
