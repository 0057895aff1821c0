"""Deliberately naive reference implementations.

Nothing here imports the package's search code; these work on plain edge
sets so a bug in the library cannot leak into its own yardstick.
"""

from itertools import combinations


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def is_clique_naive(edges, subset):
    return all(frozenset(p) in edges for p in combinations(subset, 2))


def all_cliques(g):
    edges = edge_set(g)
    vs = list(g.vertices)
    for r in range(len(vs) + 1):
        for subset in combinations(vs, r):
            if is_clique_naive(edges, subset):
                yield frozenset(subset)


def max_clique_size(g):
    return max(len(c) for c in all_cliques(g))


def k_clique_exists(g, k):
    edges = edge_set(g)
    return any(is_clique_naive(edges, s) for s in combinations(g.vertices, k))


def maximal_cliques_naive(g):
    cliques = set(all_cliques(g))
    return {c for c in cliques if not any(c < d for d in cliques)}


def triangles_through(g, v):
    edges = edge_set(g)
    out = set()
    for a, b, c in combinations(g.vertices, 3):
        tri = (a, b, c)
        if v in tri and is_clique_naive(edges, tri):
            p, q = sorted(x for x in tri if x != v)
            out.add((p, q))
    return out
