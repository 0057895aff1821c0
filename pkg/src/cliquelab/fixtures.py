"""Generators for the fixed counterexample graphs.

Vertex ids are dense and 0-based; the labels carry the names used in the
figures (numbers first, letters after), so traces read against the drawings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from string import ascii_uppercase

from .graph import Graph, GraphError


def _numbered(n: int, edges: list[tuple[int, int]]) -> Graph:
    """Graph whose vertex `i` is drawn as the number `i + 1`."""
    return Graph(range(n), [(u - 1, v - 1) for u, v in edges], {i: str(i + 1) for i in range(n)})


def fig1_graph() -> Graph:
    """Six vertices, seven edges, one triangle {1,2,5}."""
    return _numbered(6, [(6, 4), (4, 5), (2, 3), (3, 4), (1, 2), (2, 5), (5, 1)])


FIG2_EDGES = [
    (1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 4), (3, 5), (1, 6), (2, 7),
    (4, 5), (4, 6), (4, 7), (5, 7), (5, 6), (6, 7),
]


def fig2_graph() -> Graph:
    """Seven vertices, fifteen edges; {4,5,6,7} is the only 4-clique."""
    return _numbered(7, FIG2_EDGES)


@dataclass(frozen=True)
class TamtaParts:
    k: int
    big: tuple[int, ...]       # C_k
    left: tuple[int, ...]      # C_{k-1}
    right: tuple[int, ...]     # C'_{k-1}
    v: int
    v_prime: int

    @property
    def inner_pairs(self) -> list[tuple[int, int]]:
        """Pairs of C_k avoiding both attachment vertices."""
        rest = [x for x in self.big if x not in (self.v, self.v_prime)]
        return list(combinations(rest, 2))


def tamta_parts(k: int) -> TamtaParts:
    if k < 4:
        raise GraphError(f"family member needs k >= 4, got {k}")
    big = tuple(range(k))
    left = tuple(range(k, 2 * k - 1))
    right = tuple(range(2 * k - 1, 3 * k - 2))
    return TamtaParts(k, big, left, right, v=big[0], v_prime=big[1])


def tamta_family(k: int) -> Graph:
    """Clique C_k bridged to two (k-1)-cliques joined by a perfect matching.

    v = lowest id of C_k attaches to the lowest id of C_{k-1}; v' (next id)
    attaches to the lowest id of C'_{k-1}. The remaining k-2 vertices of the
    two small cliques are matched in id order, so every small-clique vertex
    ends with degree k-1.
    """
    p = tamta_parts(k)
    edges = []
    for clique in (p.big, p.left, p.right):
        edges += combinations(clique, 2)
    edges.append((p.v, p.left[0]))
    edges.append((p.v_prime, p.right[0]))
    edges += zip(p.left[1:], p.right[1:])
    labels = {}
    for prefix, clique in (("K", p.big), ("L", p.left), ("M", p.right)):
        for i, x in enumerate(clique, 1):
            labels[x] = f"{prefix}{i}"
    return Graph(range(3 * k - 2), edges, labels)


LETTER_SUBSETS = list(combinations(range(1, 6), 3))


def laplante_15() -> Graph:
    """5-clique {1..5} plus one lettered vertex per 3-subset of it (A..J)."""
    edges = list(combinations(range(5), 2))
    labels = {i: str(i + 1) for i in range(5)}
    for j, subset in enumerate(LETTER_SUBSETS):
        letter = 5 + j
        labels[letter] = ascii_uppercase[j]
        edges += [(s - 1, letter) for s in subset]
    return Graph(range(15), edges, labels)


def fixture_names() -> list[str]:
    return ["fig1", "fig2", "laplante15"] + [f"tamta-{k}" for k in range(4, 11)]


def load_fixture(name: str) -> Graph:
    if name == "fig1":
        return fig1_graph()
    if name == "fig2":
        return fig2_graph()
    if name in ("laplante15", "laplante_15"):
        return laplante_15()
    if name.startswith("tamta-"):
        try:
            k = int(name.split("-", 1)[1])
        except ValueError:
            raise GraphError(f"bad family member name {name!r}") from None
        return tamta_family(k)
    raise GraphError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}, tamta-<k>")
