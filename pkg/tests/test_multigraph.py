import random

import pytest

from orientations import (
    GraphParseError,
    Multigraph,
    Orientation,
    graph_to_text,
    parse_graph,
)


def test_parse_single_edge():
    g = parse_graph("2 1\n0 1")
    assert g.n == 2
    assert g.edges == ((0, 1),)


def test_parse_triangle():
    g = parse_graph("3 3\n0 1\n1 2\n2 0")
    assert g.m == 3
    assert g.edges == ((0, 1), (1, 2), (2, 0))


def test_parse_parallel_edges_stay_distinct():
    g = parse_graph("2 2\n0 1\n0 1")
    assert g.m == 2
    assert g.edges[0] == g.edges[1] == (0, 1)
    assert g.incidence[0] == ((0, 1, True), (1, 1, True))


def test_parse_trailing_blank_lines_ok():
    g = parse_graph("2 1\n0 1\n\n  \n")
    assert g.m == 1


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("2", 1),
        ("2 1 7\n0 1", 1),
        ("a b\n0 1", 1),
        ("2 1\n0", 2),
        ("2 1\nx y", 2),
        ("2 2\n0 1", 3),
        ("2 1\n0 2", 2),
        ("2 1\n1 1", 2),
        ("2 1\n0 1\n0 1", 3),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(GraphParseError) as err:
        parse_graph(text)
    assert err.value.line == line
    assert f"line {line}:" in str(err.value)


def test_round_trip():
    text = "4 5\n0 1\n0 2\n2 1\n0 3\n3 1\n"
    assert graph_to_text(parse_graph(text)) == text


def test_loop_rejected_by_constructor():
    with pytest.raises(ValueError):
        Multigraph(3, [(1, 1)])


def test_outdegree_directed_triangle():
    g = parse_graph("3 3\n0 1\n1 2\n2 0")
    d = Orientation(g)  # 0->1, 1->2, 2->0
    assert [d.outdegree(v) for v in range(3)] == [1, 1, 1]


def test_outdegree_star_all_out_of_center():
    g = parse_graph("4 3\n0 1\n0 2\n0 3")
    d = Orientation(g)
    assert d.outdegree(0) == 3
    assert d.outdegree(1) == d.outdegree(2) == d.outdegree(3) == 0


def test_outdegree_parallel_pair():
    g = parse_graph("2 2\n0 1\n0 1")
    d = Orientation(g)
    assert d.outdegree(0) == 2
    assert d.outdegrees() == (2, 0)


def test_cut_outdegree_directed_triangle():
    g = parse_graph("3 3\n0 1\n1 2\n2 0")
    d = Orientation(g)
    assert d.cut_outdegree({0}) == 1
    assert d.cut_outdegree({0, 1}) == 1


def test_cut_outdegree_four_cycle_opposite_pair():
    g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0")
    d = Orientation(g)  # one directed 4-cycle
    assert d.cut_outdegree({0, 2}) == 2


def test_cut_outdegree_rejects_empty_and_full():
    g = parse_graph("3 3\n0 1\n1 2\n2 0")
    d = Orientation(g)
    with pytest.raises(ValueError):
        d.cut_outdegree(set())
    with pytest.raises(ValueError):
        d.cut_outdegree({0, 1, 2})


def test_serialization_contract():
    g = parse_graph("3 3\n0 1\n1 2\n2 0")
    d = Orientation(g, [1, 1, 0])  # 0->1, 1->2, 0->2
    assert d.serialize() == "++-"
    assert Orientation.deserialize(g, "++-\n") == d
    with pytest.raises(GraphParseError):
        Orientation.deserialize(g, "++")
    with pytest.raises(GraphParseError):
        Orientation.deserialize(g, "++x")


def test_double_reversal_is_identity():
    rng = random.Random(7)
    g = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
    for _ in range(20):
        d = Orientation(g, [rng.randint(0, 1) for _ in range(g.m)])
        subset = [e for e in range(g.m) if rng.random() < 0.5]
        assert d.reverse_arcs(subset).reverse_arcs(subset) == d


def test_outdegree_sum_is_edge_count():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 6)
        m = rng.randint(1, 9)
        edges = []
        while len(edges) < m:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.append((u, v))
        g = Multigraph(n, edges)
        d = Orientation(g, [rng.randint(0, 1) for _ in range(m)])
        assert sum(d.outdegrees()) == m


def test_cut_plus_reversed_cut_counts_crossing_edges():
    rng = random.Random(13)
    g = parse_graph("5 8\n0 1\n0 2\n0 3\n0 4\n1 2\n2 3\n3 4\n4 1")
    for _ in range(40):
        d = Orientation(g, [rng.randint(0, 1) for _ in range(g.m)])
        members = {v for v in range(g.n) if rng.random() < 0.5}
        if not members or len(members) == g.n:
            continue
        crossing = sum(1 for u, v in g.edges if (u in members) != (v in members))
        assert d.cut_outdegree(members) + d.reverse_all().cut_outdegree(members) == crossing
