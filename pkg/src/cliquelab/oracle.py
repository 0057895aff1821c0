"""Exact clique search on bitsets.

Vertices are mapped to bit positions in ascending id order, so exploring the
lowest set bit first visits cliques in lexicographic order of their sorted
id tuples; that is what makes the reported witnesses canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph import Graph


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: frozenset[int]
    node_count_explored: int = field(default=0, compare=False)


def _masks(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    masks = []
    for v in verts:
        m = 0
        for u in g.adj(v):
            m |= 1 << index[u]
        masks.append(m)
    return verts, masks


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_set(verts, mask: int) -> frozenset[int]:
    return frozenset(verts[i] for i in _bits(mask))


def _color_bound(p: int, masks: list[int]) -> int:
    """Number of colours in a greedy colouring of P; bounds any clique in P."""
    colors = 0
    while p:
        colors += 1
        q = p
        while q:
            low = q & -q
            i = low.bit_length() - 1
            p &= ~low
            q &= ~low & ~masks[i]
    return colors


def max_clique(g: Graph) -> CliqueResult:
    """Maximum clique; ties resolved to the lexicographically smallest set."""
    verts, masks = _masks(g)
    best_size = 0
    best_mask = 0
    nodes = 0

    def expand(r: int, size: int, p: int) -> None:
        nonlocal best_size, best_mask, nodes
        nodes += 1
        if size > best_size:
            best_size, best_mask = size, r
        if size + p.bit_count() <= best_size:
            return
        if size + _color_bound(p, masks) <= best_size:
            return
        while p:
            if size + p.bit_count() <= best_size:
                return
            low = p & -p
            i = low.bit_length() - 1
            expand(r | low, size + 1, p & masks[i])
            p ^= low

    expand(0, 0, (1 << len(verts)) - 1)
    return CliqueResult(best_size, _to_set(verts, best_mask), nodes)


def has_k_clique(g: Graph, k: int) -> Optional[frozenset[int]]:
    """Lexicographically smallest k-clique, or None."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return frozenset()
    verts, masks = _masks(g)

    def search(r: int, size: int, p: int) -> Optional[int]:
        if size == k:
            return r
        while p and size + p.bit_count() >= k:
            low = p & -p
            i = low.bit_length() - 1
            found = search(r | low, size + 1, p & masks[i])
            if found is not None:
                return found
            p ^= low
        return None

    found = search(0, 0, (1 << len(verts)) - 1)
    return None if found is None else _to_set(verts, found)


def maximal_cliques(g: Graph) -> set[frozenset[int]]:
    """Every inclusion-maximal clique (Bron-Kerbosch with Tomita pivoting)."""
    verts, masks = _masks(g)
    out: set[frozenset[int]] = set()

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.add(_to_set(verts, r))
            return
        pivot = max(_bits(p | x), key=lambda u: (p & masks[u]).bit_count())
        for i in _bits(p & ~masks[pivot]):
            bit = 1 << i
            bk(r | bit, p & masks[i], x & masks[i])
            p &= ~bit
            x |= bit

    if verts:
        bk(0, (1 << len(verts)) - 1, 0)
    return out
