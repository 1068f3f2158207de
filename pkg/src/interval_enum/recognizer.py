"""Interval graph recognition: chordal and free of asteroidal triples.

Every answer carries a certificate that can be checked on its own:
a perfect elimination ordering with an AT-free verdict for interval graphs,
otherwise a chordless cycle of length at least four or an asteroidal triple.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, iter_bits

PEO = "perfect_elimination_ordering"
CHORDLESS_CYCLE = "chordless_cycle"
ASTEROIDAL_TRIPLE = "asteroidal_triple"


@dataclass(frozen=True)
class RecognitionResult:
    is_interval: bool
    witness_kind: str
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"interval": self.is_interval, "witness_kind": self.witness_kind, "witness": list(self.witness)}


def lex_bfs(n: int, adj: Sequence[int]) -> list[int]:
    """Lexicographic BFS by partition refinement; ties go to the smallest vertex."""
    cells = [(1 << n) - 1] if n else []
    order = []
    while cells:
        first = cells[0]
        low = first & -first
        v = low.bit_length() - 1
        order.append(v)
        cells[0] = first ^ low
        nb = adj[v]
        refined = []
        for c in cells:
            inside = c & nb
            outside = c & ~nb
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        cells = refined
    return order


def _peo_failure(n: int, adj: Sequence[int], peo: Sequence[int]) -> tuple[int, int, int] | None:
    """First (v, parent, w) where w is a later neighbour of v not adjacent to parent."""
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    later = (1 << n) - 1
    for v in peo:
        later ^= 1 << v
        nbrs = adj[v] & later
        if not nbrs:
            continue
        parent = min(iter_bits(nbrs), key=pos.__getitem__)
        bad = nbrs & ~(1 << parent) & ~adj[parent]
        if bad:
            return v, parent, (bad & -bad).bit_length() - 1
    return None


def _shortest_path(adj: Sequence[int], allowed: int, src: int, dst: int) -> list[int] | None:
    prev = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for x in frontier:
            for y in iter_bits(adj[x] & allowed):
                if y not in prev:
                    prev[y] = x
                    if y == dst:
                        path = [y]
                        while prev[path[-1]] != -1:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    nxt.append(y)
        frontier = nxt
    return None


def _chordless_cycle_through(adj: Sequence[int], full: int, v: int, u: int, w: int) -> list[int] | None:
    # An induced u-w path avoiding N[v] (bar u, w) closes a chordless cycle with v.
    allowed = (full & ~adj[v] & ~(1 << v)) | (1 << u) | (1 << w)
    path = _shortest_path(adj, allowed, u, w)
    return None if path is None else [v] + path


def _find_chordless_cycle(n: int, adj: Sequence[int], hint: tuple[int, int, int] | None) -> list[int]:
    full = (1 << n) - 1
    if hint is not None:
        cycle = _chordless_cycle_through(adj, full, *hint)
        if cycle is not None:
            return cycle
    for v in range(n):
        for u, w in combinations(iter_bits(adj[v]), 2):
            if not adj[u] >> w & 1:
                cycle = _chordless_cycle_through(adj, full, v, u, w)
                if cycle is not None:
                    return cycle
    raise AssertionError("elimination check failed but no chordless cycle exists")


def _chordal(n: int, adj: Sequence[int]) -> tuple[bool, list[int]]:
    peo = lex_bfs(n, adj)[::-1]
    failure = _peo_failure(n, adj, peo)
    if failure is None:
        return True, peo
    return False, _find_chordless_cycle(n, adj, failure)


def is_chordal(g: Graph) -> tuple[bool, tuple[int, ...]]:
    """Return ``(True, peo)`` or ``(False, chordless_cycle)``."""
    ok, witness = _chordal(g.n, g.adj)
    return ok, tuple(witness)


def _avoidance_components(n: int, adj: Sequence[int]) -> list[list[int]]:
    """comp[w][x]: component mask of x in G - N[w], or 0 when x is in N[w]."""
    full = (1 << n) - 1
    table = []
    for w in range(n):
        rest = full & ~adj[w] & ~(1 << w)
        comp_of = [0] * n
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                grow = 0
                for x in iter_bits(frontier):
                    grow |= adj[x]
                frontier = grow & rest & ~comp
                comp |= frontier
            rest &= ~comp
            for x in iter_bits(comp):
                comp_of[x] = comp
        table.append(comp_of)
    return table


def _asteroidal_triple(n: int, adj: Sequence[int]) -> tuple[int, int, int] | None:
    comp = _avoidance_components(n, adj)
    for a in range(n):
        for b in range(a + 1, n):
            if adj[a] >> b & 1:
                continue
            ab = comp[a][b]  # component of b in G - N[a]
            c_mask = ab & ~((1 << (b + 1)) - 1)
            for c in iter_bits(c_mask):
                # b ~ c avoiding N[a] holds by choice of c; check the other two
                if comp[b][a] >> c & 1 and comp[c][a] >> b & 1:
                    return a, b, c
    return None


def has_asteroidal_triple(g: Graph) -> tuple[bool, tuple[int, ...]]:
    """An asteroidal triple: each pair joined by a path avoiding the third's closed neighbourhood."""
    triple = _asteroidal_triple(g.n, g.adj)
    return (False, ()) if triple is None else (True, triple)


def recognize(n: int, adj: Sequence[int]) -> RecognitionResult:
    chordal, witness = _chordal(n, adj)
    if not chordal:
        return RecognitionResult(False, CHORDLESS_CYCLE, tuple(witness))
    triple = _asteroidal_triple(n, adj)
    if triple is not None:
        return RecognitionResult(False, ASTEROIDAL_TRIPLE, triple)
    return RecognitionResult(True, PEO, tuple(witness))


def is_interval(g: Graph) -> RecognitionResult:
    return recognize(g.n, g.adj)


def is_interval_fast(n: int, adj: Sequence[int]) -> bool:
    """Boolean-only variant for hot loops; skips witness extraction."""
    if _peo_failure(n, adj, lex_bfs(n, adj)[::-1]) is not None:
        return False
    return _asteroidal_triple(n, adj) is None


# Independent certificate checks.  These use plain sets and BFS and share no
# code with the recognizer above.


def check_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    seen: set[int] = set()
    for v in order:
        seen.add(v)
        later = [u for u in range(g.n) if u not in seen and g.has_edge(u, v)]
        if any(not g.has_edge(x, y) for x, y in combinations(later, 2)):
            return False
    return True


def check_chordless_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k or any(not 0 <= v < g.n for v in cycle):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def _connected_avoiding(g: Graph, src: int, dst: int, centre: int) -> bool:
    blocked = {centre} | {u for u in range(g.n) if g.has_edge(u, centre)}
    if src in blocked or dst in blocked:
        return False
    seen = {src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            return True
        for y in range(g.n):
            if g.has_edge(x, y) and y not in seen and y not in blocked:
                seen.add(y)
                queue.append(y)
    return False


def check_asteroidal_triple(g: Graph, triple: Sequence[int]) -> bool:
    if len(triple) != 3 or len(set(triple)) != 3:
        return False
    a, b, c = triple
    return (
        _connected_avoiding(g, a, b, c)
        and _connected_avoiding(g, b, c, a)
        and _connected_avoiding(g, a, c, b)
    )


def check_result(g: Graph, result: RecognitionResult) -> bool:
    """Validate a recognizer certificate without trusting the recognizer."""
    if result.witness_kind == PEO:
        return result.is_interval and check_perfect_elimination_ordering(g, result.witness)
    if result.witness_kind == CHORDLESS_CYCLE:
        return not result.is_interval and check_chordless_cycle(g, result.witness)
    if result.witness_kind == ASTEROIDAL_TRIPLE:
        return not result.is_interval and check_asteroidal_triple(g, result.witness)
    return False
