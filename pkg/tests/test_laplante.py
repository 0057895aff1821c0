import pytest
from hypothesis import given, settings

from cliquelab import laplante as lp
from cliquelab.choice import ChoicePolicy, Mode, ReplayError
from cliquelab.graph import Graph, GraphError
from cliquelab.oracle import max_clique
from conftest import graphs, seeded_graphs
from oracles import triangles_through


def pair(g, a, b):
    x, y = g.vertex(a), g.vertex(b)
    return (min(x, y), max(x, y))


def test_neighborhood_of_letter(lap15):
    nb = lp.neighborhoods(lap15)[lap15.vertex("A")]
    assert nb.pairs == {pair(lap15, "1", "2"), pair(lap15, "1", "3"), pair(lap15, "2", "3")}


def test_neighborhood_of_number(lap15):
    nb = lp.neighborhoods(lap15)[lap15.vertex("1")]
    numbers = lap15.ids(*"12345")
    both = [p for p in nb.pairs if set(p) <= numbers]
    assert len(nb.pairs) == 18
    assert len(both) == 6


def test_triangle_free():
    path = Graph(range(3), [(0, 1), (1, 2)])
    assert all(not nb.pairs for nb in lp.neighborhoods(path).values())


def test_phase1_against_brute_force():
    for g in seeded_graphs(100, 12, seed=99):
        nbhds, ops = lp.neighbor_introductions(g)
        assert ops <= g.n ** 3
        for v in g.vertices:
            assert set(nbhds[v].pairs) == triangles_through(g, v)


def test_merge_letter_center(lap15):
    nb = lp.neighborhoods(lap15)[lap15.vertex("A")]
    t = lp.merge_around(lap15, nb, pair(lap15, "1", "2"), lap15.vertex("1"))
    assert t.result == lap15.ids("A", "1", "2", "3")
    assert t.merges == (lp.Merge(pair(lap15, "1", "3"), (pair(lap15, "2", "3"),)),)


def test_merge_number_letter_start(lap15):
    nb = lp.neighborhoods(lap15)[lap15.vertex("1")]
    t = lp.merge_around(lap15, nb, pair(lap15, "2", "A"), lap15.vertex("A"))
    assert t.result == lap15.ids("1", "2", "3", "A")
    assert len(t.merges) == 1
    assert t.merges[0].absorbed == pair(lap15, "3", "A")
    assert t.merges[0].checked == (pair(lap15, "2", "3"),)


def test_merge_number_number_start(lap15):
    nb = lp.neighborhoods(lap15)[lap15.vertex("1")]
    two = lap15.vertex("2")
    good = lp.merge_around(lap15, nb, pair(lap15, "2", "3"), two)  # lowest id picks numbers
    assert good.result == lap15.ids(*"12345")
    bad = lp.merge_around(lap15, nb, pair(lap15, "2", "3"), two,
                          ChoicePolicy.scripted([("absorb", lap15.vertex("A"))]))
    assert bad.result == lap15.ids("1", "2", "3", "A")
    assert all(two in m.absorbed for m in good.merges + bad.merges)


def test_merge_preconditions(lap15):
    nb = lp.neighborhoods(lap15)[lap15.vertex("A")]
    with pytest.raises(GraphError):
        lp.merge_around(lap15, nb, pair(lap15, "4", "5"), lap15.vertex("4"))
    with pytest.raises(GraphError):
        lp.merge_around(lap15, nb, pair(lap15, "1", "2"), lap15.vertex("3"))


def test_run_triangle(triangle):
    res = lp.run(triangle)
    assert all(cs == {frozenset({0, 1, 2})} for cs in res.per_vertex.values())
    assert res.global_max.size == 3


def test_search_and_replay_laplante_15(lap15):
    adv = lp.search_traces(lap15, Mode.ADVERSARIAL).found
    assert adv is not None and adv.global_max.size == 4
    assert lp.run(lap15, adv.policy).global_max.size == 4
    opt = lp.search_traces(lap15, Mode.OPTIMISTIC).found
    assert opt.global_max.size == 5
    replayed = lp.run(lap15, opt.policy)
    assert replayed.global_max.witness == lap15.ids(*"12345")


def test_search_triangle(triangle):
    assert lp.search_traces(triangle, Mode.ADVERSARIAL).found is None


def test_bad_script(lap15):
    with pytest.raises(ReplayError):
        lp.run(lap15, ChoicePolicy.scripted([("start", 5, 6)]))


def test_script_file_round_trip(lap15):
    adv = lp.search_traces(lap15, Mode.ADVERSARIAL).found
    text = adv.policy.to_text()
    assert ChoicePolicy.from_text("# replay\n" + text) == adv.policy
    with pytest.raises(ReplayError):
        ChoicePolicy.from_text("absorb x\n")


def coverage_ok(g, res):
    nbhds = lp.neighborhoods(g)
    touched = {}
    for t in res.traces:
        touched.setdefault(t.center, set()).add(t.start_pair)
        touched[t.center].update(m.absorbed for m in t.merges)
    return all(nb.pairs <= touched.get(v, set()) for v, nb in nbhds.items())


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_run_properties(g):
    res = lp.run(g)
    for v, cliques in res.per_vertex.items():
        for c in cliques:
            assert v in c and g.is_clique(c)
    assert res.global_max.size <= max_clique(g).size
    assert coverage_ok(g, res)
    assert lp.run(g, res.policy).to_dict() == res.to_dict()
    for t in res.traces:
        assert all(t.key in m.absorbed for m in t.merges)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_search_results_respect_mode(g):
    target = max_clique(g).size
    adv = lp.search_traces(g, Mode.ADVERSARIAL).found
    assert adv is None or adv.global_max.size < target
    opt = lp.search_traces(g, Mode.OPTIMISTIC).found
    assert opt is None or opt.global_max.size == target
    if adv is not None:
        assert lp.run(g, adv.policy).global_max.size == adv.global_max.size
