"""Deterministic instance generators for the five supported graph classes.

Every generator guarantees class membership by construction:

    grid, subdivided_grid          -> bipartite planar
    triangulated_grid              -> planar
    random_apollonian              -> planar (maximal, 3n-6 edges)
    subdivided_grid, dodecahedron  -> planar with girth >= 5
    maximal_outerplanar_fan        -> outerplanar
    star, path                     -> trees (all classes)
    cycle                          -> outerplanar, girth = n
    complete_bipartite_2n          -> bipartite planar

All generators are pure functions of (kind, params, seed); only
random_apollonian consumes the seed.
"""
from __future__ import annotations

import random
from typing import Any, Callable

from .graph import Graph


class GeneratorError(ValueError):
    pass


def _require(cond: bool, message: str):
    if not cond:
        raise GeneratorError(message)


def grid(rows: int, cols: int) -> Graph:
    _require(rows >= 1 and cols >= 1, "grid dimensions must be positive")
    idx = lambda r, c: r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Graph.from_edges(rows * cols, edges)


def triangulated_grid(rows: int, cols: int) -> Graph:
    """Grid plus one diagonal per cell, all with the same orientation."""
    _require(rows >= 1 and cols >= 1, "grid dimensions must be positive")
    idx = lambda r, c: r * cols + c
    edges = list(grid(rows, cols).edges())
    for r in range(rows - 1):
        for c in range(cols - 1):
            edges.append((idx(r, c), idx(r + 1, c + 1)))
    return Graph.from_edges(rows * cols, edges)


def subdivided_grid(rows: int, cols: int) -> Graph:
    """Grid with every edge subdivided once; girth doubles to >= 8."""
    base = grid(rows, cols)
    n = base.n
    edges = []
    for u, v in base.edges():
        mid = n
        n += 1
        edges.append((u, mid))
        edges.append((mid, v))
    return Graph.from_edges(n, edges)


def random_apollonian(n: int, seed: int) -> Graph:
    """Start from a triangle and repeatedly split a random face.

    The result is a maximal planar graph with 3n-6 edges.
    """
    _require(n >= 3, "random apollonian graph needs n >= 3")
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    faces = [(0, 1, 2)]
    for w in range(3, n):
        k = rng.randrange(len(faces))
        a, b, c = faces[k]
        edges.extend([(a, w), (b, w), (c, w)])
        faces[k] = (a, b, w)
        faces.append((a, c, w))
        faces.append((b, c, w))
    return Graph.from_edges(n, edges)


def star(leaves: int) -> Graph:
    _require(leaves >= 0, "leaf count must be nonnegative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_2n(n: int) -> Graph:
    """K_{2,n}: sides are vertices 0 and 1, middle vertices 2..n+1."""
    _require(n >= 1, "K_{2,n} needs n >= 1")
    edges = [(s, i) for s in (0, 1) for i in range(2, n + 2)]
    return Graph.from_edges(n + 2, edges)


def maximal_outerplanar_fan(n: int) -> Graph:
    """Fan: hub 0 joined to the path 1-2-...-(n-1); 2n-3 edges."""
    _require(n >= 3, "fan needs n >= 3")
    edges = [(0, i) for i in range(1, n)]
    edges.extend((i, i + 1) for i in range(1, n - 1))
    return Graph.from_edges(n, edges)


def dodecahedron() -> Graph:
    """Generalized Petersen graph GP(10, 2): 3-regular, planar, girth 5."""
    edges = []
    for i in range(10):
        edges.append((i, (i + 1) % 10))  # outer 10-cycle
        edges.append((i, i + 10))  # spokes
        edges.append((i + 10, (i + 2) % 10 + 10))  # inner pentagram pair
    return Graph.from_edges(20, edges)


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


_BUILDERS: dict[str, tuple[Callable[..., Graph], tuple[str, ...], bool]] = {
    # name -> (builder, required params, consumes seed)
    "grid": (grid, ("rows", "cols"), False),
    "triangulated_grid": (triangulated_grid, ("rows", "cols"), False),
    "subdivided_grid": (subdivided_grid, ("rows", "cols"), False),
    "random_apollonian": (random_apollonian, ("n",), True),
    "star": (star, ("leaves",), False),
    "complete_bipartite_2n": (complete_bipartite_2n, ("n",), False),
    "maximal_outerplanar_fan": (maximal_outerplanar_fan, ("n",), False),
    "dodecahedron": (dodecahedron, (), False),
    "path": (path, ("n",), False),
    "cycle": (cycle, ("n",), False),
}

GENERATOR_KINDS = tuple(sorted(_BUILDERS))


def generate_graph(kind: str, params: dict[str, Any], seed: int = 0) -> Graph:
    """Dispatch to a named generator; deterministic in (kind, params, seed)."""
    if kind not in _BUILDERS:
        raise GeneratorError(f"unknown generator kind {kind!r}")
    builder, names, takes_seed = _BUILDERS[kind]
    extra = set(params) - set(names)
    if extra:
        raise GeneratorError(f"unexpected parameters for {kind}: {sorted(extra)}")
    missing = set(names) - set(params)
    if missing:
        raise GeneratorError(f"missing parameters for {kind}: {sorted(missing)}")
    args = [int(params[name]) for name in names]
    if takes_seed:
        args.append(int(seed))
    return builder(*args)
