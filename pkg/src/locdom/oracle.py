"""Exact minimum dominating set at desk scale.

Two independent routes: subset enumeration (tiny graphs, the reference
oracle) and a branch-and-bound search that handles the n <= 60..80 planar
instances used to measure realized approximation ratios. Both work on
closed-neighborhood bitmasks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, verify_dominating_set


@dataclass(frozen=True)
class OracleResult:
    gamma: int
    witness: frozenset[int]
    nodes_explored: int
    exhausted: bool


def _cover_masks(g: Graph) -> list[int]:
    return [(1 << v) | sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def gamma_bruteforce(g: Graph, max_n: int = 20) -> OracleResult:
    """Exact gamma by enumerating vertex subsets in increasing size."""
    if g.n > max_n:
        raise ValueError(f"brute force limited to n <= {max_n}, got {g.n}")
    if g.n == 0:
        return OracleResult(0, frozenset(), 0, True)
    full = (1 << g.n) - 1
    cover = _cover_masks(g)
    explored = 0
    for size in range(0, g.n + 1):
        for combo in combinations(range(g.n), size):
            explored += 1
            mask = 0
            for v in combo:
                mask |= cover[v]
            if mask == full:
                return OracleResult(size, frozenset(combo), explored, True)
    raise AssertionError("unreachable: V(G) always dominates")


def _greedy_mask(g: Graph, cover: list[int], full: int) -> list[int]:
    """Deterministic max-coverage greedy; provides the initial incumbent."""
    chosen: list[int] = []
    undominated = full
    while undominated:
        best_v, best_gain = -1, -1
        for v in range(g.n):
            gain = (cover[v] & undominated).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        undominated &= ~cover[best_v]
    return chosen


def gamma_branch_bound(g: Graph, node_budget: int = 10**7) -> OracleResult:
    """Branch and bound over which vertex dominates a chosen uncovered one.

    Branch vertex: the uncovered vertex whose closed neighborhood has the
    fewest members outside the current coverage (fail first); the branches
    try every member of its closed neighborhood. Pruning uses the incumbent
    and the bound ceil(undominated / (maxdeg + 1)).
    """
    if node_budget < 1:
        raise ValueError("node_budget must be >= 1")
    if g.n == 0:
        return OracleResult(0, frozenset(), 0, True)

    full = (1 << g.n) - 1
    cover = _cover_masks(g)
    maxdeg1 = max(g.degree(v) for v in range(g.n)) + 1
    best = _greedy_mask(g, cover, full)
    nodes = 0
    truncated = False

    def search(chosen: list[int], undominated: int):
        nonlocal best, nodes, truncated
        nodes += 1
        if nodes >= node_budget:
            truncated = True
            return
        if not undominated:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + -(-undominated.bit_count() // maxdeg1) >= len(best):
            return
        branch_on = min(
            _bits(undominated),
            key=lambda u: ((cover[u] & undominated).bit_count(), u),
        )
        candidates = sorted(
            _bits(cover[branch_on]),
            key=lambda a: (-(cover[a] & undominated).bit_count(), a),
        )
        for a in candidates:
            if truncated:
                return
            chosen.append(a)
            search(chosen, undominated & ~cover[a])
            chosen.pop()

    search([], full)
    assert verify_dominating_set(g, best)
    return OracleResult(len(best), frozenset(best), nodes, not truncated)
