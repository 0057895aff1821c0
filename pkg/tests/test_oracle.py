from itertools import combinations

import pytest
from hypothesis import given, settings

from cliquelab.graph import Graph
from cliquelab.oracle import has_k_clique, max_clique, maximal_cliques
from conftest import graphs, seeded_graphs
from oracles import all_cliques, k_clique_exists, max_clique_size, maximal_cliques_naive


def test_max_clique_fixtures(fig2, lap15):
    res = max_clique(fig2)
    assert res.size == 4 and res.witness == fig2.ids("4", "5", "6", "7")
    res = max_clique(lap15)
    assert res.size == 5 and res.witness == lap15.ids(*"12345")
    assert max_clique(Graph()).size == 0
    assert max_clique(Graph()).witness == frozenset()


def test_has_k_clique(fig2):
    assert has_k_clique(fig2, 4) == fig2.ids("4", "5", "6", "7")
    assert has_k_clique(fig2, 5) is None
    assert has_k_clique(fig2, 1) == {0}
    assert has_k_clique(fig2, 0) == frozenset()
    with pytest.raises(ValueError):
        has_k_clique(fig2, -1)


def test_maximal_cliques_fixtures(triangle, lap15, fig2):
    assert maximal_cliques(triangle) == {frozenset({0, 1, 2})}
    lap = maximal_cliques(lap15)
    assert len(lap) == 11
    assert sorted(len(c) for c in lap) == [4] * 10 + [5]
    # {1,2,3} {1,3,4} {1,4,6} {2,3,5} {2,5,7} {3,4,5} {4,5,6,7}; brute force agrees
    assert len(maximal_cliques(fig2)) == 7
    assert maximal_cliques(fig2) == maximal_cliques_naive(fig2)


def test_witness_is_lexicographically_smallest():
    # two disjoint triangles; the lower one must win
    g = Graph(range(6), [(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2)])
    assert max_clique(g).witness == {0, 1, 2}
    for g in seeded_graphs(60, 9, seed=5):
        best = max_clique(g)
        smallest = min(tuple(sorted(c)) for c in all_cliques(g) if len(c) == best.size)
        assert tuple(sorted(best.witness)) == smallest


def test_against_brute_force_100():
    for g in seeded_graphs(100, 8, seed=2024):
        res = max_clique(g)
        assert res.size == max_clique_size(g)
        assert g.is_clique(res.witness) and len(res.witness) == res.size


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=9))
def test_maximal_cliques_property(g):
    found = maximal_cliques(g)
    if g.n:
        assert found == maximal_cliques_naive(g)
        assert max_clique(g).size == max(len(c) for c in found)
    for c in found:
        assert g.is_clique(c)
        assert not any(c | {v} != c and g.is_clique(c | {v}) for v in g.vertices)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=9))
def test_has_k_clique_monotone(g):
    w = max_clique(g).size
    for k in range(g.n + 2):
        present = has_k_clique(g, k) is not None
        assert present == (k <= w) == k_clique_exists(g, k)
        if present:
            assert all(has_k_clique(g, j) is not None for j in range(k + 1))
