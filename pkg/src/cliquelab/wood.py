"""Wood's reduction of k-clique to max-flow network interdiction.

The layered network has a source, one node per undirected edge (capacity-2
arc from the source), one node per vertex (unit arc to the sink), and unit
arcs from each edge node to its two endpoints.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .graph import Graph, GraphError
from .oracle import has_k_clique

DEFAULT_SUBSET_CAP = 10**6


class SubsetCapExceeded(RuntimeError):
    def __init__(self, needed: int, cap: int):
        super().__init__(f"{needed} subsets to enumerate exceeds cap {cap}")
        self.needed = needed
        self.cap = cap


@dataclass(frozen=True, order=True)
class Node:
    """Tagged network node: kind is 's', 't', 'e' (edge node) or 'v' (vertex node)."""

    kind: str
    ref: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind in ("s", "t"):
            return self.kind
        prefix = "i" if self.kind == "e" else "j"
        return prefix + "_" + "_".join(map(str, self.ref))


SOURCE = Node("s")
SINK = Node("t")


def edge_node(u: int, v: int) -> Node:
    return Node("e", (min(u, v), max(u, v)))


def vertex_node(v: int) -> Node:
    return Node("v", (v,))


@dataclass(frozen=True)
class Arc:
    tail: Node
    head: Node
    capacity: int
    layer: str  # "A1", "A2" or "A3"


@dataclass(frozen=True)
class FlowNetwork:
    nodes: tuple[Node, ...]
    arcs: tuple[Arc, ...]

    def layer(self, name: str) -> list[Arc]:
        return [a for a in self.arcs if a.layer == name]

    @property
    def edge_nodes(self) -> list[Node]:
        return [x for x in self.nodes if x.kind == "e"]

    @property
    def vertex_nodes(self) -> list[Node]:
        return [x for x in self.nodes if x.kind == "v"]


def build_gh(g: Graph) -> FlowNetwork:
    edges = g.edges()
    n1 = [edge_node(u, v) for u, v in edges]
    n2 = [vertex_node(v) for v in g.vertices]
    a1 = [Arc(SOURCE, x, 2, "A1") for x in n1]
    a2 = []
    for x, (u, v) in zip(n1, edges):
        a2.append(Arc(x, vertex_node(u), 1, "A2"))
        a2.append(Arc(x, vertex_node(v), 1, "A2"))
    a3 = [Arc(y, SINK, 1, "A3") for y in n2]
    return FlowNetwork(tuple([SOURCE, *n1, *n2, SINK]), tuple(a1 + a2 + a3))


def remove_source_arcs(net: FlowNetwork, edges: Iterable[tuple[int, int]]) -> FlowNetwork:
    """G^H minus the A1 arcs of the given source-graph edges."""
    drop = {edge_node(u, v) for u, v in edges}
    present = {a.head for a in net.arcs if a.layer == "A1"}
    missing = drop - present
    if missing:
        raise GraphError(f"no A1 arc for edge node(s) {sorted(map(str, missing))}")
    arcs = tuple(a for a in net.arcs if not (a.layer == "A1" and a.head in drop))
    return FlowNetwork(net.nodes, arcs)


def remove_nodes(net: FlowNetwork, nodes: Iterable[Node]) -> FlowNetwork:
    drop = set(nodes)
    return FlowNetwork(
        tuple(x for x in net.nodes if x not in drop),
        tuple(a for a in net.arcs if a.tail not in drop and a.head not in drop),
    )


@dataclass
class FlowSolution:
    value: int
    flows: dict[Arc, int] = field(repr=False)
    source_side: frozenset[Node] = field(repr=False)

    def cut_capacity(self, net: FlowNetwork) -> int:
        return sum(
            a.capacity for a in net.arcs if a.tail in self.source_side and a.head not in self.source_side
        )


def solve_max_flow(net: FlowNetwork, source: Node = SOURCE, sink: Node = SINK) -> FlowSolution:
    """Edmonds-Karp: BFS shortest augmenting paths on an integral residual graph."""
    index = {x: i for i, x in enumerate(net.nodes)}
    # residual arcs stored pairwise: arc 2j forward, 2j+1 its reverse
    head: list[int] = []
    cap: list[int] = []
    out: list[list[int]] = [[] for _ in net.nodes]
    for a in net.arcs:
        t, h = index[a.tail], index[a.head]
        out[t].append(len(head))
        head.append(h)
        cap.append(a.capacity)
        out[h].append(len(head))
        head.append(t)
        cap.append(0)

    value = 0
    if source in index and sink in index:
        s, t = index[source], index[sink]
        while True:
            via = [-1] * len(net.nodes)
            via[s] = -2
            queue = deque([s])
            while queue and via[t] == -1:
                x = queue.popleft()
                for r in out[x]:
                    y = head[r]
                    if cap[r] > 0 and via[y] == -1:
                        via[y] = r
                        queue.append(y)
            if via[t] == -1:
                break
            push = None
            y = t
            while y != s:
                r = via[y]
                push = cap[r] if push is None else min(push, cap[r])
                y = head[r ^ 1]
            y = t
            while y != s:
                r = via[y]
                cap[r] -= push
                cap[r ^ 1] += push
                y = head[r ^ 1]
            value += push

    flows = {a: cap[2 * j + 1] for j, a in enumerate(net.arcs)}
    reach = set()
    if source in index:
        s = index[source]
        reach.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for r in out[x]:
                if cap[r] > 0 and head[r] not in reach:
                    reach.add(head[r])
                    queue.append(head[r])
    side = frozenset(net.nodes[i] for i in reach)
    return FlowSolution(value, flows, side)


def max_flow(net: FlowNetwork) -> int:
    return solve_max_flow(net).value


def non_isolated(g: Graph) -> int:
    return sum(1 for v in g.vertices if g.degree(v) > 0)


def check_lemma1(g: Graph) -> bool:
    """Max flow through G^H equals the number of vertices with positive degree."""
    return max_flow(build_gh(g)) == non_isolated(g)


def vertex_interdiction_value(g: Graph, removed: Iterable[int]) -> int:
    """Max flow after interdicting the vertex nodes of `removed`.

    Deleting a vertex deletes its incident edges too, so the edge nodes of
    those edges leave the network together with the vertex nodes. The result
    is cross-checked against rebuilding G^H from the vertex-deleted graph.
    """
    removed = frozenset(removed)
    for v in sorted(removed):
        if v not in g:
            raise GraphError(f"unknown vertex {v}")
    drop = [vertex_node(v) for v in removed]
    drop += [edge_node(u, v) for u, v in g.edges() if u in removed or v in removed]
    value = max_flow(remove_nodes(build_gh(g), drop))
    residual = g.remove_vertices(removed)
    expected = sum(1 for v in residual.vertices if residual.degree(v) > 0)
    assert value == expected == max_flow(build_gh(residual)), (value, expected)
    return value


@dataclass(frozen=True)
class WoodCertificate:
    """Both sides of the reduction theorem for one (graph, k)."""

    k: int
    removal_size: int
    removed_arcs: Optional[tuple[tuple[int, int], ...]]  # witnessing A1', if any
    clique: Optional[frozenset[int]]
    subsets_checked: int

    @property
    def flow_side(self) -> bool:
        return self.removed_arcs is not None

    @property
    def holds(self) -> bool:
        return self.flow_side == (self.clique is not None)


def wood_certificate(g: Graph, k: int, subset_cap: int = DEFAULT_SUBSET_CAP) -> WoodCertificate:
    """Enumerate every A1' of size |E| - C(k,2) and compare with the oracle."""
    if k < 2:
        raise GraphError("the reduction is stated for k >= 2")
    edges = g.edges()
    size = len(edges) - comb(k, 2)
    clique = has_k_clique(g, k)
    if size < 0:
        return WoodCertificate(k, size, None, clique, 0)
    needed = comb(len(edges), size)
    if needed > subset_cap:
        raise SubsetCapExceeded(needed, subset_cap)
    net = build_gh(g)
    checked = 0
    for subset in combinations(edges, size):
        checked += 1
        if max_flow(remove_source_arcs(net, subset)) == k:
            return WoodCertificate(k, size, tuple(subset), clique, checked)
    return WoodCertificate(k, size, None, clique, checked)


def verify_wood_theorem(g: Graph, k: int, subset_cap: int = DEFAULT_SUBSET_CAP) -> bool:
    return wood_certificate(g, k, subset_cap).holds


def gh_to_dot(net: FlowNetwork) -> str:
    """Left-to-right DOT drawing with one rank per layer."""
    out = ["digraph GH {", "  rankdir=LR;", "  node [shape=circle];"]
    ranks = [[SOURCE], net.edge_nodes, net.vertex_nodes, [SINK]]
    for rank in ranks:
        members = " ".join(f'"{x}";' for x in rank if x in net.nodes)
        if members:
            out.append(f"  {{ rank=same; {members} }}")
    for a in net.arcs:
        out.append(f'  "{a.tail}" -> "{a.head}" [label="{a.capacity}"];')
    out.append("}")
    return "\n".join(out) + "\n"
