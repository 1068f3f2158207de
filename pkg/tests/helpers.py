"""Brute-force reference implementations used as test oracles."""

from itertools import combinations, permutations

from interval_enum.graph import Graph


def all_labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))


def brute_force_key(g):
    """Lexicographically smallest upper-triangle string over all n! relabellings."""
    best = None
    for order in permutations(range(g.n)):
        s = "".join(
            "1" if g.has_edge(order[i], order[j]) else "0" for j in range(1, g.n) for i in range(j)
        )
        if best is None or s < best:
            best = s
    return g.n, best or ""


def brute_force_isomorphic(g1, g2):
    if g1.n != g2.n or len(g1.edges()) != len(g2.edges()):
        return False
    e2 = set(g2.edges())
    for perm in permutations(range(g1.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in e2 for u, v in g1.edges()):
            return True
    return False
