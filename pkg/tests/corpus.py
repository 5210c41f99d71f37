"""Deterministic per-class instance corpora shared across tests.

``corpus(cls)`` yields at least 100 conforming instances per class;
``corpus(cls, small=True)`` at least 50 with n <= 60, all cheap enough for
the exact oracle.
"""
from __future__ import annotations

from locdom import Graph, GraphClass, generate_graph

Labeled = tuple[str, Graph]


def _make(kind: str, seed: int = 0, **params) -> Labeled:
    inner = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
    label = f"{kind}({inner})@{seed}"
    return label, generate_graph(kind, params, seed)


_STAR_SIZES = (1, 2, 3, 4, 5, 7, 9, 13, 17, 25, 33, 40)
_PATH_SIZES = (1, 2, 3, 5, 7, 9, 13, 17, 25, 33, 45, 60)
_SUBDIVIDED = [(2, 2), (2, 3), (3, 3), (2, 5), (3, 4), (2, 7), (4, 4), (3, 6), (4, 5)]
_GRIDS = [
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 7), (3, 3), (3, 4), (3, 5), (3, 6),
    (3, 9), (4, 4), (4, 5), (4, 6), (4, 7), (5, 5), (5, 6), (5, 8), (6, 9),
]


def _stars_and_paths() -> list[Labeled]:
    out = [_make("star", leaves=k) for k in _STAR_SIZES]
    out += [_make("path", n=k) for k in _PATH_SIZES]
    return out


def corpus(cls: GraphClass, small: bool = False) -> list[Labeled]:
    items: list[Labeled] = []
    if cls is GraphClass.PLANAR:
        for n in range(4, 60, 2):
            for seed in (1, 2):
                items.append(_make("random_apollonian", seed=seed, n=n))
        items += [_make("triangulated_grid", rows=r, cols=c) for r, c in _GRIDS[:10]]
        items += [_make("grid", rows=r, cols=c) for r, c in _GRIDS[:8]]
        items += [_make("complete_bipartite_2n", n=k) for k in (1, 4, 8, 10, 12)]
        items += [_make("maximal_outerplanar_fan", n=k) for k in (5, 20, 41)]
        items += [_make("dodecahedron")]
        items += _stars_and_paths()
        items += [_make("cycle", n=k) for k in range(3, 61, 5)]
        if not small:
            items += [_make("random_apollonian", seed=s, n=150) for s in (3, 4)]
            items += [_make("triangulated_grid", rows=10, cols=12)]
    elif cls in (GraphClass.TRIANGLE_FREE_PLANAR, GraphClass.BIPARTITE_PLANAR):
        items += [_make("grid", rows=r, cols=c) for r, c in _GRIDS]
        items += [_make("subdivided_grid", rows=r, cols=c) for r, c in _SUBDIVIDED]
        items += [_make("complete_bipartite_2n", n=k) for k in range(1, 21)]
        if cls is GraphClass.TRIANGLE_FREE_PLANAR:
            items += [_make("cycle", n=k) for k in range(4, 61, 2)]
            items += [_make("cycle", n=k) for k in (5, 9, 15, 21, 35, 49, 59)]
        else:
            items += [_make("cycle", n=k) for k in range(4, 61, 2)]
        items += _stars_and_paths()
        if not small:
            items += [_make("grid", rows=9, cols=13), _make("grid", rows=11, cols=11)]
            items += [_make("subdivided_grid", rows=5, cols=7)]
    elif cls is GraphClass.GIRTH5_PLANAR:
        items += [_make("cycle", n=k) for k in range(5, 61)]
        items += [_make("subdivided_grid", rows=r, cols=c) for r, c in _SUBDIVIDED]
        items += [_make("subdivided_grid", rows=2, cols=c) for c in (4, 6, 8, 9)]
        items += [_make("dodecahedron")]
        items += _stars_and_paths()
        items += [_make("path", n=k) for k in (4, 6, 11, 20, 38, 56)]
        if not small:
            items += [_make("subdivided_grid", rows=6, cols=8)]
            items += [_make("cycle", n=k) for k in (75, 101, 150)]
    elif cls is GraphClass.OUTERPLANAR:
        items += [_make("maximal_outerplanar_fan", n=k) for k in range(3, 61, 2)]
        items += [_make("maximal_outerplanar_fan", n=k) for k in range(4, 41, 4)]
        items += [_make("cycle", n=k) for k in range(3, 61, 2)]
        items += [_make("cycle", n=k) for k in (4, 8, 16, 24, 40, 56)]
        items += _stars_and_paths()
        if not small:
            items += [_make("maximal_outerplanar_fan", n=k) for k in (80, 120)]
            items += [_make("cycle", n=90), _make("path", n=120)]
    else:
        raise AssertionError(cls)
    if small:
        items = [(label, g) for label, g in items if g.n <= 60]
    return items
