"""Immutable undirected simple graphs plus DIMACS / edge-list / DOT I/O."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """A vertex or edge referenced something the graph does not contain."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph on nonnegative integer vertex ids.

    Instances are never mutated after construction; every "removal" returns a
    new graph. Equality and hashing use vertices and edges only, labels are
    display metadata.
    """

    __slots__ = ("_vertices", "_adj", "_labels", "_edges")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[Edge] = (),
        labels: Optional[Mapping[int, str]] = None,
    ):
        vs = sorted(set(int(v) for v in vertices))
        if vs and vs[0] < 0:
            raise GraphError(f"negative vertex id {vs[0]}")
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u}, {v}) references an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(vs)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._labels = {v: str(lbl) for v, lbl in (labels or {}).items() if v in adj}
        self._edges = tuple(sorted({_norm(u, v) for u in adj for v in adj[u]}))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], n: Optional[int] = None, labels=None) -> "Graph":
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(range(n), edges, labels)

    # basic structure -----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[Edge, ...]:
        """All edges as (low, high) tuples in lexicographic order."""
        return self._edges

    def adj(self, v: int) -> frozenset[int]:
        self._require(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v}")

    def _require_all(self, s: Iterable[int]) -> frozenset[int]:
        s = frozenset(s)
        for v in sorted(s):
            self._require(v)
        return s

    def is_dense(self) -> bool:
        return self._vertices == tuple(range(self.n))

    # labels --------------------------------------------------------------

    @property
    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    def label(self, v: int) -> str:
        self._require(v)
        return self._labels.get(v, str(v))

    def vertex(self, label: str) -> int:
        """Id of the vertex displayed as `label`."""
        label = str(label)
        for v in self._vertices:
            if self.label(v) == label:
                return v
        raise GraphError(f"no vertex labelled {label!r}")

    def ids(self, *labels: str) -> frozenset[int]:
        return frozenset(self.vertex(lbl) for lbl in labels)

    def fmt_set(self, s: Iterable[int]) -> str:
        return "{" + ",".join(self.label(v) for v in sorted(s)) + "}"

    # predicates and derived graphs ---------------------------------------

    def degree(self, v: int) -> int:
        self._require(v)
        return len(self._adj[v])

    def is_clique(self, s: Iterable[int]) -> bool:
        s = sorted(self._require_all(s))
        return all(v in self._adj[u] for u, v in combinations(s, 2))

    def remove_vertices(self, s: Iterable[int]) -> "Graph":
        s = self._require_all(s)
        if not s:
            return self
        keep = [v for v in self._vertices if v not in s]
        edges = [(u, v) for u, v in self._edges if u not in s and v not in s]
        return Graph(keep, edges, self._labels)

    def induced(self, s: Iterable[int]) -> "Graph":
        s = self._require_all(s)
        return self.remove_vertices(set(self._vertices) - s)

    def relabeled(self, labels: Mapping[int, str]) -> "Graph":
        return Graph(self._vertices, self._edges, labels)

    # dunder --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# parsing


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def _parse_dimacs(text: str) -> Graph:
    n: Optional[int] = None
    edges: list[Edge] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok:
            continue
        if tok[0] == "c":
            if len(tok) >= 4 and tok[1] == "label":
                (vid,) = _ints(tok[2:3], lineno)
                labels[vid - 1] = " ".join(tok[3:])
            continue
        if tok[0] == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise ParseError(lineno, f"malformed header {raw.strip()!r}")
            n, _ = _ints(tok[2:], lineno)
            if n < 0:
                raise ParseError(lineno, "negative vertex count")
            continue
        if tok[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge before problem line")
            if len(tok) != 3:
                raise ParseError(lineno, f"malformed edge line {raw.strip()!r}")
            u, v = _ints(tok[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop on vertex {u}")
            edges.append((u - 1, v - 1))
            continue
        raise ParseError(lineno, f"unknown line type {tok[0]!r}")
    if n is None:
        raise ParseError(0, "missing 'p edge N M' header")
    return Graph(range(n), edges, {v: s for v, s in labels.items() if 0 <= v < n})


def _parse_edge_list(text: str) -> Graph:
    n: Optional[int] = None
    declared: set[int] = set()
    edges: list[Edge] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tok = line[1:].split()
            if len(tok) >= 3 and tok[0] == "label":
                (vid,) = _ints(tok[1:2], lineno)
                labels[vid] = " ".join(tok[2:])
            continue
        tok = line.split()
        if tok[0] == "n":
            if n is not None or edges or declared or len(tok) != 2:
                raise ParseError(lineno, "malformed or misplaced 'n N' header")
            (n,) = _ints(tok[1:], lineno)
            if n < 0:
                raise ParseError(lineno, "negative vertex count")
            continue
        ids = _ints(tok, lineno)
        if len(ids) not in (1, 2) or min(ids) < 0:
            raise ParseError(lineno, f"expected 'u v' or 'u', got {line!r}")
        if n is not None and max(ids) >= n:
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        if len(ids) == 2:
            if ids[0] == ids[1]:
                raise ParseError(lineno, f"self-loop on vertex {ids[0]}")
            edges.append((ids[0], ids[1]))
        declared.update(ids)
    vertices = set(range(n)) if n is not None else declared
    return Graph(vertices, edges, {v: s for v, s in labels.items() if v in vertices})


def parse_graph(text: str, format: str = "dimacs") -> Graph:
    """Parse DIMACS (1-based ids on disk) or edge-list (0-based) text."""
    if format == "dimacs":
        return _parse_dimacs(text)
    if format in ("edge_list", "edgelist"):
        return _parse_edge_list(text)
    raise ValueError(f"unknown graph format {format!r}")


def read_graph(path, format: Optional[str] = None) -> Graph:
    path = str(path)
    if format is None:
        format = "dimacs" if path.endswith((".col", ".dimacs", ".clq")) else "edge_list"
    with open(path) as fh:
        return parse_graph(fh.read(), format)


# ---------------------------------------------------------------------------
# serialization


def _dimacs(g: Graph) -> str:
    # DIMACS ids must be dense; sparse graphs are compacted in id order.
    index = {v: i + 1 for i, v in enumerate(g.vertices)}
    out = [f"p edge {g.n} {g.m}"]
    out += [f"c label {index[v]} {lbl}" for v, lbl in sorted(g.labels.items())]
    out += [f"e {index[u]} {index[v]}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def _edge_list(g: Graph) -> str:
    out = []
    if g.is_dense():
        out.append(f"n {g.n}")
    else:
        out += [str(v) for v in g.vertices]
    out += [f"# label {v} {lbl}" for v, lbl in sorted(g.labels.items())]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def _dot(g: Graph, highlight: Iterable[int] = (), name: str = "G") -> str:
    hl = frozenset(highlight)
    out = [f"graph {name} {{", "  node [shape=circle];"]
    for v in g.vertices:
        attrs = f'label="{g.label(v)}"'
        if v in hl:
            attrs += ", color=red, style=filled, fillcolor=red"
        out.append(f"  {v} [{attrs}];")
    for u, v in g.edges():
        attr = " [color=red]" if u in hl and v in hl else ""
        out.append(f"  {u} -- {v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


def serialize_graph(g: Graph, format: str = "dimacs", highlight: Iterable[int] = ()) -> str:
    if format == "dimacs":
        return _dimacs(g)
    if format in ("edge_list", "edgelist"):
        return _edge_list(g)
    if format == "dot":
        return _dot(g, highlight)
    raise ValueError(f"unknown graph format {format!r}")


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from `rng`."""
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(range(n), edges)
