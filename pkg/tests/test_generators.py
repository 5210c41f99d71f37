import pytest

from locdom import GraphClass, check_class_sanity, generate_graph, girth
from locdom.generators import GeneratorError

from corpus import corpus


def test_grid_counts():
    g = generate_graph("grid", {"rows": 3, "cols": 3})
    assert g.n == 9 and g.m == 12  # 2rc - r - c


def test_star_counts():
    g = generate_graph("star", {"leaves": 5})
    assert g.n == 6 and g.m == 5
    assert g.degree(0) == 5


def test_random_apollonian_edge_count():
    g = generate_graph("random_apollonian", {"n": 50}, seed=7)
    assert g.n == 50 and g.m == 3 * 50 - 6  # maximal planar


def test_triangulated_grid_counts():
    g = generate_graph("triangulated_grid", {"rows": 3, "cols": 4})
    assert g.n == 12 and g.m == (2 * 12 - 3 - 4) + (2 * 3)


def test_fan_counts():
    g = generate_graph("maximal_outerplanar_fan", {"n": 10})
    assert g.n == 10 and g.m == 2 * 10 - 3


def test_dodecahedron_shape():
    g = generate_graph("dodecahedron", {})
    assert g.n == 20 and g.m == 30
    assert all(g.degree(v) == 3 for v in range(20))
    assert girth(g) == 5


def test_subdivided_grid_girth():
    g = generate_graph("subdivided_grid", {"rows": 3, "cols": 3})
    assert girth(g) == 8


def test_complete_bipartite():
    g = generate_graph("complete_bipartite_2n", {"n": 10})
    assert g.n == 12 and g.m == 20
    assert set(g.neighbors(0)) == set(range(2, 12))


def test_determinism():
    a = generate_graph("random_apollonian", {"n": 40}, seed=11)
    b = generate_graph("random_apollonian", {"n": 40}, seed=11)
    c = generate_graph("random_apollonian", {"n": 40}, seed=12)
    assert a == b
    assert a != c


def test_invalid_params():
    with pytest.raises(GeneratorError):
        generate_graph("grid", {"rows": 0, "cols": 3})
    with pytest.raises(GeneratorError):
        generate_graph("cycle", {"n": 2})
    with pytest.raises(GeneratorError):
        generate_graph("grid", {"rows": 2})
    with pytest.raises(GeneratorError):
        generate_graph("grid", {"rows": 2, "cols": 2, "n": 4})
    with pytest.raises(GeneratorError):
        generate_graph("nonesuch", {})


def test_apollonian_sanity_over_many_seeds():
    for seed in range(120):
        g = generate_graph("random_apollonian", {"n": 25}, seed=seed)
        assert g.m == 3 * 25 - 6
        assert check_class_sanity(g, GraphClass.PLANAR) == []


@pytest.mark.parametrize("cls", list(GraphClass))
def test_corpus_instances_pass_sanity(cls):
    items = corpus(cls)
    assert len(items) >= 100
    for label, g in items:
        assert check_class_sanity(g, cls) == [], label


@pytest.mark.parametrize("cls", list(GraphClass))
def test_small_corpus_sized_for_oracle(cls):
    items = corpus(cls, small=True)
    assert len(items) >= 50
    assert all(g.n <= 60 for _, g in items)
