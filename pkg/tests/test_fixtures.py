from math import comb

import pytest

from cliquelab.fixtures import (
    fig1_graph, fig2_graph, laplante_15, load_fixture, tamta_family, tamta_parts,
)
from cliquelab.graph import GraphError
from cliquelab.oracle import max_clique, maximal_cliques
from cliquelab.polyclique import init_state
from oracles import max_clique_size


def test_fig1():
    g = fig1_graph()
    assert (g.n, g.m) == (6, 7)
    res = max_clique(g)
    assert res.size == 3 and res.witness == g.ids("1", "2", "5")
    assert g.degree(g.vertex("3")) == 2


def test_fig2():
    g = fig2_graph()
    assert g.m == 15
    cost, pairs = init_state(g, 4).cheapest_pairs()
    assert cost == 7
    group = g.ids("1", "2", "6", "7")
    inside = {e for e in g.edges() if set(e) <= group}
    assert len(inside) == 4 and inside <= set(pairs)
    # vertex 3 also has degree 4, so (1,3) and (2,3) tie at cost 7 too
    deg4 = g.ids("1", "2", "3", "6", "7")
    assert set(pairs) == {e for e in g.edges() if set(e) <= deg4}
    assert max_clique(g).witness == g.ids("4", "5", "6", "7")
    fig3 = g.remove_vertices(g.ids("6", "7"))
    assert (fig3.n, fig3.m) == (5, 8)  # the drawn list repeats 1-2


@pytest.mark.parametrize("k", range(4, 9))
def test_tamta_family_structure(k):
    g = tamta_family(k)
    p = tamta_parts(k)
    assert g.n == 3 * k - 2
    assert g.m == comb(k, 2) + 2 * comb(k - 1, 2) + 2 + (k - 2)
    for x in p.big:
        assert g.degree(x) == (k if x in (p.v, p.v_prime) else k - 1)
    for x in p.left + p.right:
        assert g.degree(x) == k - 1
    assert max_clique(g).size == k
    assert max_clique(g).witness == frozenset(p.big)
    assert len(p.inner_pairs) == comb(k - 2, 2)


def test_tamta_small_against_brute_force():
    assert tamta_family(4).m == 16
    assert max_clique_size(tamta_family(4)) == 4


def test_tamta_rejects_small_k():
    with pytest.raises(GraphError):
        tamta_family(3)


def test_laplante_15():
    g = laplante_15()
    assert (g.n, g.m) == (15, 40)
    numbers = g.ids(*"12345")
    for v in g.vertices:
        assert g.degree(v) == (10 if v in numbers else 3)
    fours = [c for c in maximal_cliques(g) if len(c) == 4]
    assert len(fours) == 10
    assert g.adj(g.vertex("A")) == g.ids("1", "2", "3")
    assert g.adj(g.vertex("J")) == g.ids("3", "4", "5")


def test_rotational_symmetry_of_laplante_15():
    g = laplante_15()
    # rotate number labels 1->2->...->5->1; letters follow their subsets
    rot = {str(i): str(i % 5 + 1) for i in range(1, 6)}
    subsets = {frozenset(g.label(u) for u in g.adj(v)): g.label(v) for v in g.vertices if g.degree(v) == 3}
    for v in g.vertices:
        if g.degree(v) == 3:
            image = frozenset(rot[g.label(u)] for u in g.adj(v))
            assert image in subsets


def test_generators_deterministic():
    for name in ("fig1", "fig2", "laplante15", "tamta-6"):
        a, b = load_fixture(name), load_fixture(name)
        assert a == b and a.labels == b.labels
    with pytest.raises(GraphError):
        load_fixture("fig9")
