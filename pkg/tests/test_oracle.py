import random

import pytest

from locdom import Graph, gamma_branch_bound, gamma_bruteforce, verify_dominating_set
from locdom.generators import cycle, grid, path, star


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def test_bruteforce_fixtures():
    assert gamma_bruteforce(star(5)).gamma == 1
    assert gamma_bruteforce(star(5)).witness == frozenset({0})
    assert gamma_bruteforce(path(5)).gamma == 2
    assert gamma_bruteforce(cycle(6)).gamma == 2


def test_bruteforce_guard():
    with pytest.raises(ValueError, match="n <= 20"):
        gamma_bruteforce(grid(5, 5))


def test_branch_bound_fixtures():
    assert gamma_branch_bound(path(5)).gamma == 2
    assert gamma_branch_bound(cycle(6)).gamma == 2
    assert gamma_branch_bound(grid(3, 3)).gamma == 3
    assert gamma_branch_bound(grid(4, 4)).gamma == 4


def test_disconnected_components_add_up():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    result = gamma_branch_bound(g)
    assert result.gamma == 2
    assert result.exhausted


def test_empty_and_singleton():
    assert gamma_branch_bound(Graph.from_edges(0, [])).gamma == 0
    assert gamma_branch_bound(Graph.from_edges(1, [])).gamma == 1
    assert gamma_bruteforce(Graph.from_edges(1, [])).gamma == 1


def test_witness_always_dominates():
    for seed in range(30):
        g = random_graph(11, 0.25, seed)
        result = gamma_branch_bound(g)
        assert verify_dominating_set(g, result.witness)


def test_equivalence_on_200_random_instances():
    for seed in range(200):
        n = 4 + seed % 9  # 4..12
        g = random_graph(n, 0.15 + (seed % 5) * 0.15, seed)
        bf = gamma_bruteforce(g)
        bb = gamma_branch_bound(g)
        assert bf.gamma == bb.gamma, f"seed {seed}"
        assert bf.exhausted and bb.exhausted


def test_budget_exhaustion_reports_incumbent():
    g = grid(5, 5)
    result = gamma_branch_bound(g, node_budget=5)
    assert not result.exhausted
    assert verify_dominating_set(g, result.witness)
    exact = gamma_branch_bound(g)
    assert exact.exhausted
    assert exact.gamma <= result.gamma


def test_removing_an_edge_never_decreases_gamma():
    for seed in range(25):
        g = random_graph(9, 0.3, seed)
        base = gamma_bruteforce(g).gamma
        edges = list(g.edges())
        for drop in range(len(edges)):
            remaining = edges[:drop] + edges[drop + 1 :]
            smaller = Graph.from_edges(g.n, remaining)
            assert gamma_bruteforce(smaller).gamma >= base
