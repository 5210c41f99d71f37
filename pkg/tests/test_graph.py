import pytest

from locdom import (
    Graph,
    GraphParseError,
    parse_edge_list,
    parse_vertex_set,
    serialize_graph,
    serialize_vertex_set,
    verify_dominating_set,
)
from locdom.generators import path, star


def test_parse_path_on_three_vertices():
    g = parse_edge_list("3 2\n0 1\n1 2")
    assert g.n == 3
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]


def test_parse_isolated_vertex():
    g = parse_edge_list("1 0")
    assert g.n == 1 and g.m == 0


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# a path\n\n3 2\n# edges follow\n0 1\n\n1 2\n")
    assert g.m == 2


def test_parse_self_loop_names_line():
    with pytest.raises(GraphParseError) as err:
        parse_edge_list("2 1\n0 0")
    assert "self-loop" in str(err.value)
    assert err.value.line == 2


def test_parse_duplicate_edge():
    with pytest.raises(GraphParseError, match="duplicate"):
        parse_edge_list("3 2\n0 1\n0 1")


def test_parse_out_of_range():
    with pytest.raises(GraphParseError, match="out of range"):
        parse_edge_list("2 1\n0 5")


def test_parse_requires_increasing_endpoints():
    with pytest.raises(GraphParseError, match="u < v"):
        parse_edge_list("3 1\n2 1")


def test_parse_header_and_count_mismatch():
    with pytest.raises(GraphParseError, match="header"):
        parse_edge_list("3 2\n0 1")
    with pytest.raises(GraphParseError):
        parse_edge_list("not a header")


def test_edge_order_does_not_matter():
    a = parse_edge_list("4 3\n0 1\n1 2\n2 3")
    b = parse_edge_list("4 3\n2 3\n0 1\n1 2")
    assert a == b


def test_serialize_round_trip():
    g = star(5)
    assert parse_edge_list(serialize_graph(g)) == g


def test_graph_invariants_enforced():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="out of range"):
        Graph.from_edges(2, [(0, 2)])


def test_vertex_set_round_trip():
    text = serialize_vertex_set({4, 1, 3})
    assert text == "1\n3\n4\n"
    assert parse_vertex_set("# chosen\n1\n3\n4\n", n=5) == {1, 3, 4}
    with pytest.raises(GraphParseError):
        parse_vertex_set("7\n", n=5)


def test_verify_dominating_set_examples():
    assert verify_dominating_set(star(5), {0})
    assert verify_dominating_set(path(5), {1, 3})
    assert not verify_dominating_set(path(5), {0})


def test_verify_dominating_set_range_check():
    with pytest.raises(ValueError, match="out of range"):
        verify_dominating_set(path(3), {5})


def test_verify_empty_set():
    assert verify_dominating_set(Graph.from_edges(0, []), set())
    assert not verify_dominating_set(Graph.from_edges(1, []), set())
