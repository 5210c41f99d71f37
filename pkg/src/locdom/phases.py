"""The three-phase dominating-set pipeline (centralized reference path).

Phase 1 selects every vertex whose open neighborhood cannot be dominated
by three other vertices. Phase 2 selects every pair of vertices sharing at
least ``pair_threshold`` undominated neighbors (skipped for classes whose
parameters disable it). Phase 3 runs the residual-degree greedy from the
class cap down to level 0, where every still-undominated vertex picks
itself. A cleanup set catches inputs that violate their declared class, so
the output is a dominating set for every input graph.

The same computation can be run through the message-passing engine (see
local_program); results are identical vertex for vertex.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .classes import ClassParams, GraphClass, params_for
from .graph import Graph, verify_dominating_set


class Color(Enum):
    RED = "red"  # not yet dominated
    YELLOW = "yellow"  # dominated, not selected
    GREEN = "green"  # selected into the dominating set


@dataclass(frozen=True)
class PhaseTrace:
    d1: frozenset[int]
    w: frozenset[int]
    b: dict[int, frozenset[int]]
    d2: frozenset[int]
    deltas: dict[int, frozenset[int]]
    r_sizes: dict[int, int]
    cleanup: frozenset[int]
    rounds_used: int


@dataclass(frozen=True)
class DomSetResult:
    dominating_set: frozenset[int]
    trace: PhaseTrace
    graph_class: GraphClass
    warnings: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.dominating_set)


def dominable_within(
    targets: frozenset[int], candidate_cover: Mapping[int, frozenset[int]], k: int
) -> bool:
    """Can some <= k candidates cover all targets?

    ``candidate_cover`` maps each allowed candidate to the subset of
    targets it covers. Shared by the centralized path and the node
    programs, which build the cover table from their radius-2 view.
    """
    if not targets:
        return True
    if len(targets) <= k:
        return True  # in the domination setting every target covers itself
    max_cov = 0
    for covered in candidate_cover.values():
        if len(covered) > max_cov:
            max_cov = len(covered)
    coverers: dict[int, list[int]] = {t: [] for t in targets}
    for a, covered in candidate_cover.items():
        for t in covered:
            coverers[t].append(a)

    def branch(uncovered: frozenset[int], budget: int) -> bool:
        if not uncovered:
            return True
        if budget == 0 or len(uncovered) > budget * max_cov:
            return False
        # branch on the hardest target: fewest remaining candidates
        pivot = min(uncovered, key=lambda t: (len(coverers[t]), t))
        options = sorted(
            coverers[pivot],
            key=lambda a: (-len(candidate_cover[a] & uncovered), a),
        )
        for a in options:
            if branch(uncovered - candidate_cover[a], budget - 1):
                return True
        return False

    return branch(targets, k)


def build_candidate_cover(me, nbrs, row_of) -> dict[int, frozenset[int]]:
    """Cover table for the phase-1 test: every a != me that can dominate
    some neighbor of me, mapped to N[a] & N(me). ``row_of(u)`` yields the
    adjacency of neighbor u; only rows of neighbors are consulted, which
    is exactly the radius-2 knowledge a node has."""
    cover: dict[int, set[int]] = {}
    for u in nbrs:
        for a in row_of(u):
            if a != me:
                cover.setdefault(a, set()).add(u)
        cover.setdefault(u, set()).add(u)  # u covers itself
    return {a: frozenset(c) for a, c in cover.items()}


def neighborhood_dominable_within(g: Graph, v: int, k: int) -> bool:
    """True iff some A, |A| <= k, v not in A, has N(v) inside N[A].

    Decided from the radius-2 ball of v: candidates live in N[N(v)].
    """
    if not (0 <= v < g.n):
        raise ValueError(f"vertex id {v} out of range")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.degree(v) <= k:
        return True  # every neighbor dominates itself
    cover = build_candidate_cover(v, g.neighbor_set(v), lambda u: g.adjacency[u])
    return dominable_within(g.neighbor_set(v), cover, k)


def phase1_d1(g: Graph) -> set[int]:
    """Vertices whose neighborhood needs more than 3 other dominators."""
    return {v for v in range(g.n) if not neighborhood_dominable_within(g, v, 3)}


def phase2_d2(
    g: Graph, red: Iterable[int], threshold: int
) -> tuple[set[int], dict[int, set[int]], set[int]]:
    """Pair selection: returns (w, b, d2).

    b[v] holds every z != v sharing at least ``threshold`` red neighbors
    with v (z ranges over all vertices, any color); w is the set of
    vertices with nonempty b; d2 is the union of {v} | b[v] over w.
    """
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    red_set = set(red)
    counts: Counter[tuple[int, int]] = Counter()
    for x in red_set:
        nbrs = g.adjacency[x]
        for ui in range(len(nbrs)):
            for zi in range(ui + 1, len(nbrs)):
                counts[(nbrs[ui], nbrs[zi])] += 1
    b: dict[int, set[int]] = {}
    for (u, z), c in counts.items():
        if c >= threshold:
            b.setdefault(u, set()).add(z)
            b.setdefault(z, set()).add(u)
    w = set(b)
    d2 = set()
    for v in w:
        d2.add(v)
        d2.update(b[v])
    return w, b, d2


def _phase3_trace(
    g: Graph, red: Iterable[int], cap: int
) -> tuple[dict[int, frozenset[int]], frozenset[int], dict[int, int], dict[int, int]]:
    """Greedy levels cap..0; also reports |R_i| and the maximum residual
    degree left after each level (the correctness invariant says <= i-1
    on conforming inputs)."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    red_now = set(red)
    resid = [0] * g.n
    for v in red_now:
        for u in g.adjacency[v]:
            resid[u] += 1
    deltas: dict[int, frozenset[int]] = {}
    r_sizes: dict[int, int] = {}
    post_max_resid: dict[int, int] = {}
    for i in range(cap, -1, -1):
        r_sizes[i] = len(red_now)
        delta = set()
        for v in red_now:
            # minimum-id candidate u in N[v] with residual degree exactly i
            pick = None
            for u in g.adjacency[v]:  # ascending, first hit is the minimum
                if resid[u] == i:
                    pick = u
                    break
            if resid[v] == i and (pick is None or v < pick):
                pick = v
            if pick is not None:
                delta.add(pick)
        deltas[i] = frozenset(delta)
        if delta:
            dominated = set()
            for d in delta:
                if d in red_now:
                    dominated.add(d)
                dominated.update(u for u in g.adjacency[d] if u in red_now)
            for x in dominated:
                red_now.discard(x)
                for u in g.adjacency[x]:
                    resid[u] -= 1
        post_max_resid[i] = max(resid) if g.n else 0
    return deltas, frozenset(red_now), r_sizes, post_max_resid


def phase3_greedy(
    g: Graph, red: Iterable[int], cap: int
) -> tuple[dict[int, frozenset[int]], frozenset[int]]:
    """Residual-degree greedy; returns (deltas, cleanup)."""
    deltas, cleanup, _, _ = _phase3_trace(g, red, cap)
    return deltas, cleanup


def pipeline_rounds(g: Graph, params: ClassParams) -> int:
    """Communication rounds the engine path uses: the schedule is fixed
    per class, so this is a pure function of (class, has any edge)."""
    if g.m == 0:
        return 0
    setup = 5 if params.pair_threshold is not None else 3
    return setup + 3 * params.residual_cap + 1


def run_pipeline_direct(g: Graph, cls: GraphClass) -> DomSetResult:
    """Centralized execution of the full pipeline."""
    params = params_for(cls)
    d1 = phase1_d1(g)
    red = set(range(g.n))
    for v in d1:
        red.discard(v)
        red.difference_update(g.adjacency[v])
    if params.pair_threshold is not None:
        w, b, d2 = phase2_d2(g, red, params.pair_threshold)
        for v in d2:
            red.discard(v)
            red.difference_update(g.adjacency[v])
    else:
        w, b, d2 = set(), {}, set()
    warnings = []
    max_resid = 0
    for v in range(g.n):
        resid = sum(1 for u in g.adjacency[v] if u in red)
        max_resid = max(max_resid, resid)
    if max_resid > params.residual_cap:
        warnings.append(
            "class invariant violated: residual degree "
            f"{max_resid} exceeds cap {params.residual_cap} after pair selection"
        )
    deltas, cleanup, r_sizes, _ = _phase3_trace(g, red, params.residual_cap)
    if cleanup:
        warnings.append(
            f"class invariant violated: {len(cleanup)} vertices reached cleanup"
        )
    dominating = set(d1) | set(d2) | set(cleanup)
    for delta in deltas.values():
        dominating |= delta
    trace = PhaseTrace(
        d1=frozenset(d1),
        w=frozenset(w),
        b={v: frozenset(s) for v, s in sorted(b.items())},
        d2=frozenset(d2),
        deltas=deltas,
        r_sizes=r_sizes,
        cleanup=cleanup,
        rounds_used=pipeline_rounds(g, params),
    )
    result = DomSetResult(frozenset(dominating), trace, cls, tuple(warnings))
    assert verify_dominating_set(g, result.dominating_set)
    return result


def run_pipeline(g: Graph, cls: GraphClass, use_engine: bool = True) -> DomSetResult:
    """Run the pipeline; by default through the LOCAL engine."""
    if use_engine:
        from .local_program import run_pipeline_local

        return run_pipeline_local(g, cls)
    return run_pipeline_direct(g, cls)
