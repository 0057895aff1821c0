"""LaPlante's two-phase clique procedure.

Phase 1 ("neighbor introductions") gives every vertex its neighborhood: the
vertex pairs that close a triangle with it. Phase 2 grows cliques inside one
neighborhood from a start pair by absorbing pairs that share a fixed key
vertex, each absorption gated on the cross pairs with every earlier member.
Which start pair, which key and which absorbable pair come next are all left
open by the procedure; they are policy choices here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional

from .choice import (
    ChoiceCursor,
    ChoicePoint,
    ChoicePolicy,
    Mode,
    SearchOutcome,
    explore,
)
from .graph import Graph, GraphError
from .oracle import CliqueResult, max_clique

Pair = tuple[int, int]


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Neighborhood:
    center: int
    pairs: frozenset[Pair]

    def has(self, a: int, b: int) -> bool:
        return _pair(a, b) in self.pairs


def neighbor_introductions(g: Graph) -> tuple[dict[int, Neighborhood], int]:
    """Phase 1 plus a tally of membership tests performed.

    Every vertex u tells each neighbor v about its other neighbors w; v keeps
    {u, w} whenever it is adjacent to w as well.
    """
    found: dict[int, set[Pair]] = {v: set() for v in g.vertices}
    ops = 0
    for u in g.vertices:
        for v in g.adj(u):
            for w in g.adj(u):
                if w == v:
                    continue
                ops += 1
                if g.has_edge(v, w):
                    found[v].add(_pair(u, w))
    return {v: Neighborhood(v, frozenset(ps)) for v, ps in found.items()}, ops


def neighborhoods(g: Graph) -> dict[int, Neighborhood]:
    return neighbor_introductions(g)[0]


@dataclass(frozen=True)
class Merge:
    absorbed: Pair
    checked: tuple[Pair, ...]


@dataclass(frozen=True)
class MergeTrace:
    center: int
    start_pair: Pair
    key: int
    merges: tuple[Merge, ...]
    result: frozenset[int]

    def to_dict(self) -> dict:
        return {
            "center": self.center,
            "start_pair": list(self.start_pair),
            "key": self.key,
            "merges": [
                {"absorbed": list(m.absorbed), "checked": [list(p) for p in m.checked]}
                for m in self.merges
            ],
            "result": sorted(self.result),
        }

    def to_text(self, g: Optional[Graph] = None) -> str:
        name = g.label if g is not None else str
        fp = lambda p: "{" + ",".join(name(x) for x in p) + "}"
        parts = [f"center {name(self.center)} start {fp(self.start_pair)} key {name(self.key)}"]
        for m in self.merges:
            checks = " ".join(fp(p) for p in m.checked) or "-"
            parts.append(f"  absorb {fp(m.absorbed)} checked {checks}")
        parts.append(f"  -> {fp(sorted(self.result))}")
        return "\n".join(parts)


class _Stop(Exception):
    pass


def _merge(
    nbhd: Neighborhood,
    start: Pair,
    key: int,
    cursor: ChoiceCursor,
) -> MergeTrace:
    if start not in nbhd.pairs:
        raise GraphError(f"start pair {start} is not in the neighborhood of {nbhd.center}")
    if key not in start:
        raise GraphError(f"key {key} is not a member of start pair {start}")
    c = nbhd.center
    members = [c, *start]
    merges = []
    while True:
        others = [m for m in members if m not in (c, key)]
        options = []
        for p in sorted(nbhd.pairs):
            if key not in p:
                continue
            r = p[0] if p[1] == key else p[1]
            if r in members:
                continue
            if all(nbhd.has(m, r) for m in others):
                options.append(r)
        if not options:
            break
        _, r = cursor.pick([("absorb", r) for r in options])
        merges.append(Merge(_pair(key, r), tuple(_pair(m, r) for m in others)))
        members.append(r)
    return MergeTrace(c, start, key, tuple(merges), frozenset(members))


def merge_around(
    g: Graph,
    nbhd: Neighborhood,
    start_pair: Pair,
    key: int,
    policy: Optional[ChoicePolicy] = None,
) -> MergeTrace:
    trace = _merge(nbhd, _pair(*start_pair), key, ChoiceCursor(policy or ChoicePolicy.lowest_id()))
    assert g.is_clique(trace.result)
    return trace


@dataclass
class LaplanteResult:
    per_vertex: dict[int, set[frozenset[int]]]
    global_max: CliqueResult
    traces: list[MergeTrace]
    choices: tuple = ()
    operations: int = 0
    points: list[ChoicePoint] = field(default_factory=list, repr=False)
    stopped: bool = False

    @property
    def cliques(self) -> set[frozenset[int]]:
        return set().union(*self.per_vertex.values()) if self.per_vertex else set()

    @property
    def policy(self) -> ChoicePolicy:
        return ChoicePolicy.scripted(self.choices)

    def decide(self, k: int) -> bool:
        return self.global_max.size >= k

    def to_dict(self) -> dict:
        return {
            "global_max": {"size": self.global_max.size, "witness": sorted(self.global_max.witness)},
            "cliques": sorted(sorted(c) for c in self.cliques),
            "traces": [t.to_dict() for t in self.traces],
            "choices": [list(c) for c in self.choices],
            "phase1_operations": self.operations,
        }


def _best(cliques: Iterable[frozenset[int]]) -> tuple[int, frozenset[int]]:
    best: tuple[int, tuple[int, ...]] = (0, ())
    for c in cliques:
        cand = (len(c), tuple(sorted(c)))
        if cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
            best = cand
    return best[0], frozenset(best[1])


def _run(
    g: Graph,
    cursor: ChoiceCursor,
    nbhds: Optional[Mapping[int, Neighborhood]] = None,
    ops: int = 0,
    stop: Optional[Callable[[MergeTrace], bool]] = None,
) -> LaplanteResult:
    if nbhds is None:
        nbhds, ops = neighbor_introductions(g)
    per_vertex: dict[int, set[frozenset[int]]] = {}
    traces: list[MergeTrace] = []
    stopped = False
    try:
        for v in g.vertices:
            nb = nbhds[v]
            found: set[frozenset[int]] = set()
            per_vertex[v] = found
            if not nb.pairs:
                # triangle-free at v: the best it can report is an edge or itself
                adj = g.adj(v)
                found.add(frozenset({v, min(adj)}) if adj else frozenset({v}))
                continue
            unmerged = set(nb.pairs)
            while unmerged:
                _, a, b = cursor.pick([("start", *p) for p in sorted(unmerged)])
                _, key = cursor.pick([("key", a), ("key", b)])
                trace = _merge(nb, (a, b), key, cursor)
                traces.append(trace)
                found.add(trace.result)
                unmerged.discard((a, b))
                unmerged.difference_update(m.absorbed for m in trace.merges)
                if stop is not None and stop(trace):
                    raise _Stop
    except _Stop:
        stopped = True
    size, witness = _best(c for cs in per_vertex.values() for c in cs)
    return LaplanteResult(
        per_vertex=per_vertex,
        global_max=CliqueResult(size, witness, len(traces)),
        traces=traces,
        choices=cursor.choices,
        operations=ops,
        points=list(cursor.points),
        stopped=stopped,
    )


def run(g: Graph, policy: Optional[ChoicePolicy] = None) -> LaplanteResult:
    """Both phases over every vertex; start pairs repeat until each pair of a
    neighborhood has been a start or an absorbed pair at least once."""
    result = _run(g, ChoiceCursor(policy or ChoicePolicy.lowest_id()))
    for c in result.cliques:
        assert g.is_clique(c), c
    return result


def search_traces(g: Graph, mode: Mode, node_cap: Optional[int] = None) -> SearchOutcome:
    """Find a complete script whose global max falls short of (adversarial) or
    matches (optimistic) the exact clique number. ``outcome.found`` is the
    :class:`LaplanteResult`; its ``policy`` replays it.

    Adversarial branches are cut as soon as one merge chain reaches the clique
    number, optimistic ones finish with lowest-id choices once it is reached.
    """
    mode = Mode(mode)
    target = max_clique(g).size
    nbhds, ops = neighbor_introductions(g)

    if mode is Mode.ADVERSARIAL:
        stop = lambda t: len(t.result) >= target
        accept = lambda r: not r.stopped and r.global_max.size < target
    else:
        stop = None
        accept = lambda r: r.global_max.size == target

    def run_prefix(prefix):
        result = _run(g, ChoiceCursor(ChoicePolicy.scripted(prefix)), nbhds, ops, stop)
        return result, result.points

    return explore(run_prefix, accept, node_cap)
