"""The Poly-Clique k-clique decision procedure, run faithfully.

Part 1 interdicts the cheapest adjacent pair while affordable, Part 2 the
cheapest single vertex, Part 3 answers "clique exists" iff exactly k vertices
survive. The budget update includes the +1 of the pair cost and priorities
are recomputed after every removal. Ties among minimum-cost candidates are
resolved by a :class:`ChoicePolicy`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Optional, Union

from .choice import (
    ChoiceCursor,
    ChoicePoint,
    ChoicePolicy,
    Mode,
    SearchOutcome,
    explore,
)
from .graph import Graph, GraphError
from .oracle import has_k_clique


class Decision(str, Enum):
    CLIQUE_EXISTS = "CliqueExists"
    NO_CLIQUE = "NoClique"


@dataclass(frozen=True)
class InterdictPair:
    u: int
    v: int
    cost: int

    def to_dict(self) -> dict:
        return {"event": "InterdictPair", "u": self.u, "v": self.v, "cost": self.cost}


@dataclass(frozen=True)
class InterdictVertex:
    v: int
    cost: int

    def to_dict(self) -> dict:
        return {"event": "InterdictVertex", "v": self.v, "cost": self.cost}


@dataclass(frozen=True)
class EnterPart:
    part: int

    def to_dict(self) -> dict:
        return {"event": f"EnterPart{self.part}"}


Event = Union[InterdictPair, InterdictVertex, EnterPart]


class InterdictionState:
    """T (vertex costs), S (pair costs) and the remaining budget R."""

    def __init__(self, g: Graph, k: int):
        if k < 1:
            raise GraphError("k must be at least 1")
        self.k = k
        self.residual = g
        self.budget = g.m - comb(k, 2)
        self.vertex_cost: dict[int, int] = {}
        self.pair_costs: dict[tuple[int, int], int] = {}
        self.refresh()

    def refresh(self) -> None:
        r = self.residual
        self.vertex_cost = {v: r.degree(v) for v in r.vertices}
        self.pair_costs = {(u, v): r.degree(u) + r.degree(v) - 1 for u, v in r.edges()}

    def pair_cost(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        if key not in self.pair_costs:
            raise GraphError(f"pair {key} is not live")
        return self.pair_costs[key]

    def cheapest_pairs(self) -> tuple[Optional[int], list[tuple[int, int]]]:
        if not self.pair_costs:
            return None, []
        low = min(self.pair_costs.values())
        return low, sorted(p for p, c in self.pair_costs.items() if c == low)

    def cheapest_vertices(self) -> tuple[Optional[int], list[int]]:
        if not self.vertex_cost:
            return None, []
        low = min(self.vertex_cost.values())
        return low, sorted(v for v, c in self.vertex_cost.items() if c == low)

    def remove(self, vertices, cost: int) -> None:
        self.budget -= cost
        self.residual = self.residual.remove_vertices(vertices)
        self.refresh()

    def check(self) -> None:
        """Assert the stored priorities mirror the residual graph."""
        r = self.residual
        assert set(self.vertex_cost) == set(r.vertices)
        assert set(self.pair_costs) == set(r.edges())
        for v, c in self.vertex_cost.items():
            assert c == r.degree(v)
        for (u, v), c in self.pair_costs.items():
            assert c == r.degree(u) + r.degree(v) - 1


def init_state(g: Graph, k: int) -> InterdictionState:
    return InterdictionState(g, k)


def pair_cost(state: InterdictionState, u: int, v: int) -> int:
    return state.pair_cost(u, v)


@dataclass
class PolyCliqueTrace:
    k: int
    initial_R: int
    steps: list[Event]
    decision: Decision
    final_T: frozenset[int]
    final_R: int
    final_T_is_clique: bool
    choices: tuple = ()
    points: list[ChoicePoint] = field(default_factory=list, repr=False, compare=False)

    @property
    def final_T_size(self) -> int:
        return len(self.final_T)

    @property
    def policy(self) -> ChoicePolicy:
        """Script that replays this trace exactly."""
        return ChoicePolicy.scripted(self.choices)

    def to_text(self, g: Optional[Graph] = None) -> str:
        name = g.label if g is not None else str
        lines = [f"k={self.k} R={self.initial_R}"]
        for e in self.steps:
            if isinstance(e, InterdictPair):
                lines.append(f"interdict pair ({name(e.u)},{name(e.v)}) cost={e.cost}")
            elif isinstance(e, InterdictVertex):
                lines.append(f"interdict vertex {name(e.v)} cost={e.cost}")
            else:
                lines.append(f"enter part {e.part}")
        ts = ",".join(name(v) for v in sorted(self.final_T))
        lines.append(f"decision {self.decision.value} |T|={self.final_T_size} R={self.final_R} T={{{ts}}}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "initial_R": self.initial_R,
            "steps": [e.to_dict() for e in self.steps],
            "decision": self.decision.value,
            "final_T": sorted(self.final_T),
            "final_T_size": self.final_T_size,
            "final_R": self.final_R,
            "final_T_is_clique": self.final_T_is_clique,
            "choices": [list(c) for c in self.choices],
        }


def _run(g: Graph, k: int, cursor: ChoiceCursor, check: bool = False) -> PolyCliqueTrace:
    state = InterdictionState(g, k)
    initial = state.budget
    steps: list[Event] = []

    # Part 1; an empty S falls through to Part 2.
    while True:
        cost, pairs = state.cheapest_pairs()
        if cost is None or cost > state.budget:
            break
        _, u, v = cursor.pick([("pair", a, b) for a, b in pairs])
        state.remove((u, v), cost)
        steps.append(InterdictPair(u, v, cost))
        if check:
            state.check()
    steps.append(EnterPart(2))

    # Part 2; an empty T falls through to Part 3.
    while True:
        cost, verts = state.cheapest_vertices()
        if cost is None or cost > state.budget:
            break
        _, v = cursor.pick([("vertex", x) for x in verts])
        state.remove((v,), cost)
        steps.append(InterdictVertex(v, cost))
        if check:
            state.check()
    steps.append(EnterPart(3))

    final = frozenset(state.residual.vertices)
    decision = Decision.CLIQUE_EXISTS if len(final) == k else Decision.NO_CLIQUE
    return PolyCliqueTrace(
        k=k,
        initial_R=initial,
        steps=steps,
        decision=decision,
        final_T=final,
        final_R=state.budget,
        final_T_is_clique=g.is_clique(final),
        choices=cursor.choices,
        points=list(cursor.points),
    )


def run(g: Graph, k: int, policy: Optional[ChoicePolicy] = None, check: bool = False) -> PolyCliqueTrace:
    """Execute Parts 1-3 under `policy`; `check` re-verifies state after each removal."""
    return _run(g, k, ChoiceCursor(policy or ChoicePolicy.lowest_id()), check)


def max_clique_via_decision(g: Graph, policy: Optional[ChoicePolicy] = None) -> int:
    for k in range(g.n, 0, -1):
        if run(g, k, policy).decision is Decision.CLIQUE_EXISTS:
            return k
    return 0


def search_traces(g: Graph, k: int, mode: Mode, node_cap: Optional[int] = None) -> SearchOutcome:
    """Find a tie resolution whose decision disagrees (adversarial) or agrees
    (optimistic) with the exact answer. ``outcome.found`` is the trace or None.
    """
    mode = Mode(mode)
    truth = has_k_clique(g, k) is not None

    def run_prefix(prefix):
        trace = _run(g, k, ChoiceCursor(ChoicePolicy.scripted(prefix)))
        return trace, trace.points

    def accept(trace: PolyCliqueTrace) -> bool:
        agrees = (trace.decision is Decision.CLIQUE_EXISTS) == truth
        return agrees if mode is Mode.OPTIMISTIC else not agrees

    return explore(run_prefix, accept, node_cap)


def replay(g: Graph, trace: PolyCliqueTrace) -> PolyCliqueTrace:
    """Re-run with the trace's own choices; raises if anything differs."""
    again = run(g, trace.k, trace.policy)
    if again.to_dict() != trace.to_dict():
        raise AssertionError("replay diverged from recorded trace")
    return again
