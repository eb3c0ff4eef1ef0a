import pytest
from hypothesis import given, strategies as st

from italian_block.graph import (Graph, GraphFormatError, assignment_weight, format_assignment,
                                 format_graph, greedy_mis, greedy_mis_bound,
                                 is_independent_italian, parse_assignment, parse_graph)

from conftest import complete, path, small_graphs


def test_parse_single_vertex():
    g = parse_graph("1 0")
    assert g.n == 1 and g.edges == ()


def test_parse_path():
    g = parse_graph("3 2\n0 1\n1 2")
    assert g.edges == ((0, 1), (1, 2))
    assert g.adj == ((1,), (0, 2), (1,))


def test_parse_ignores_comments_and_line_order():
    a = parse_graph("# a comment\n3 2\n1 2\n# another\n0 1\n")
    b = parse_graph("3 2\n0 1\n2 1\n")
    assert a == b


@pytest.mark.parametrize("text, line, fragment", [
    ("3 2\n0 1\n0 1", 3, "duplicate"),
    ("3 2\n0 1\n1 0", 3, "duplicate"),
    ("3 1\n1 1", 2, "self-loop"),
    ("3 1\n0 3", 2, "out of range"),
    ("3 1\n0 1 2", 2, "tokens"),
    ("3 x", 1, "non-integer"),
    ("-1 0", 1, "nonnegative"),
    ("2 1\n0 1\n0 1", 3, "more than"),
])
def test_parse_errors_carry_line(text, line, fragment):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert fragment in str(info.value)


@pytest.mark.parametrize("text", ["", "# only comments\n", "3 2\n0 1\n"])
def test_parse_errors_without_line(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


@given(small_graphs())
def test_round_trip(g):
    h = parse_graph(format_graph(g))
    assert h == g and h.adj == g.adj


@given(small_graphs())
def test_adjacency_consistent(g):
    for u in range(g.n):
        for v in g.adj[u]:
            assert u in g.adj[v]
            assert g.has_edge(u, v) and g.has_edge(v, u)
    assert sum(len(a) for a in g.adj) == 2 * g.m


def test_assignment_text_round_trip():
    assert parse_assignment(format_assignment((0, 2, 1))) == (0, 2, 1)
    with pytest.raises(GraphFormatError):
        parse_assignment("0 3 1")


@pytest.mark.parametrize("a, w", [((0,) * 5, 0), ((2, 0, 1), 3), ((1, 1, 1, 1), 4)])
def test_weight(a, w):
    assert assignment_weight(a) == w


def test_checker_star_center():
    assert is_independent_italian(path(3), (0, 2, 0))


def test_checker_independence_violation():
    res = is_independent_italian(path(2), (1, 1))
    assert not res
    assert res.violation.kind == "not_independent" and res.violation.edge == (0, 1)


def test_checker_p4_mixed():
    assert is_independent_italian(path(4), (0, 2, 0, 1))


def test_checker_undominated():
    res = is_independent_italian(path(4), (0, 2, 0, 0))
    assert not res
    assert res.violation.kind == "undominated" and res.violation.vertex == 3


def test_checker_two_ones_dominate():
    # centre of P_3 has neighbour sum 2 from two 1s
    assert is_independent_italian(path(3), (1, 0, 1))
    assert not is_independent_italian(path(3), (1, 0, 0))


def test_checker_length_mismatch():
    with pytest.raises(ValueError):
        is_independent_italian(path(3), (0, 2))


@pytest.mark.parametrize("g, mis, bound", [
    (complete(5), [0], 2),
    (Graph.from_edges(4, []), [0, 1, 2, 3], 8),
    (path(4), [0, 2], 4),
])
def test_greedy_mis(g, mis, bound):
    assert greedy_mis(g) == mis
    assert greedy_mis_bound(g) == bound


@given(small_graphs(max_n=9))
def test_twos_on_greedy_mis_are_valid(g):
    a = [0] * g.n
    for v in greedy_mis(g):
        a[v] = 2
    assert is_independent_italian(g, a)
    assert assignment_weight(a) == greedy_mis_bound(g)


@given(small_graphs(), st.data())
def test_checker_matches_definition(g, data):
    a = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    independent = all(not (a[u] and a[v]) for u, v in g.edges)
    dominated = all(a[v] or sum(a[u] for u in g.adj[v]) >= 2 for v in range(g.n))
    assert bool(is_independent_italian(g, a)) == (independent and dominated)


def test_components():
    g = Graph.from_edges(6, [(0, 3), (3, 5), (1, 2)])
    assert g.components() == [[0, 3, 5], [1, 2], [4]]
