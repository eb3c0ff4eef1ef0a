import pytest
from hypothesis import given

from italian_block.graph import Graph, is_independent_italian
from italian_block.oracle import FULL_ENUM_MAX, OracleCapError, brute_force, full_enumeration

from conftest import complete, cycle, graph, path, small_graphs


@pytest.mark.parametrize("g, expected", [
    (Graph.from_edges(0, []), 0),
    (complete(1), 1),
    (path(2), 2),
    (path(4), 3),
    (path(5), 3),
    (complete(5), 2),
    (cycle(4), 2),
])
def test_examples(g, expected):
    res = brute_force(g)
    assert res.number == expected
    assert is_independent_italian(g, res.witness) and sum(res.witness) == expected


def test_p2_witness_is_lexicographically_smallest():
    assert brute_force(path(2)).witness == (0, 2)


def test_c4_witness():
    # opposite corners valued 1
    assert brute_force(cycle(4)).witness == (0, 1, 0, 1)


def test_cap():
    with pytest.raises(OracleCapError):
        brute_force(path(20))
    # the cap is inclusive
    assert brute_force(path(16)).number == brute_force(path(16), cap=16).number


def test_full_enumeration_size_limit():
    with pytest.raises(OracleCapError):
        full_enumeration(path(FULL_ENUM_MAX + 1))


@given(small_graphs(max_n=FULL_ENUM_MAX))
def test_search_matches_full_enumeration(g):
    a, b = brute_force(g), full_enumeration(g)
    assert a.number == b.number
    assert a.witness == b.witness


@given(small_graphs(max_n=5), small_graphs(max_n=5))
def test_disjoint_union_adds(g, h):
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    union = Graph.from_edges(g.n + h.n, edges)
    assert brute_force(union).number == brute_force(g).number + brute_force(h).number


@given(small_graphs(max_n=7))
def test_number_bounds(g):
    num = brute_force(g).number
    assert (g.n == 0) == (num == 0)
    assert num <= 2 * g.n


def test_explored_counts_nodes():
    assert brute_force(graph(3, [(0, 1), (1, 2)])).explored >= 1
