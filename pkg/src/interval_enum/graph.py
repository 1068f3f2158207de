"""Small simple graphs stored as one adjacency bitmask per vertex.

The canonical form used for isomorphism-class deduplication is computed by
individualization-refinement: the vertex set is split into an ordered,
equitable partition, a vertex of the first non-singleton cell is singled out,
and the process recurses until every cell is a singleton.  Each leaf fixes a
vertex ordering; the canonical key is the smallest upper-triangular adjacency
string over all leaves.  Vertices that are twins of an already explored vertex
in the same cell are skipped, since swapping twins is an automorphism, and so
are vertices mapped onto an explored one by an automorphism found earlier
(two leaves with equal strings) that fixes every individualised vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

MAX_VERTICES = 32


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer whose bit ``u`` is set iff ``u`` and ``v`` are
    adjacent.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise ValueError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            x = row
            while x:
                low = x & -x
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")
                x ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if self.adj[u] >> v & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in combinations(vertices, 2) if self.adj[u] >> v & 1),
        )

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)))


class CanonicalForm(NamedTuple):
    """Isomorphism-class key: vertex count plus the minimal adjacency string.

    ``bits`` reads the upper triangle column by column, (0,1), (0,2), (1,2),
    (0,3), ..., with the first pair as the most significant bit.  Keys order
    first by ``n`` and then lexicographically by adjacency string.
    """

    n: int
    bits: int

    def to_graph(self) -> Graph:
        return Graph(self.n, tuple(adjacency_from_bits(self.n, self.bits)))


def iter_bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def adjacency_from_bits(n: int, bits: int) -> list[int]:
    """Inverse of the column-wise, most-significant-first triangle encoding."""
    rows = [0] * n
    pos = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _leaf_bits(n: int, adj: Sequence[int], order: Sequence[int]) -> int:
    key = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            key = (key << 1) | (row >> order[i] & 1)
    return key


def _refine(n: int, adj: Sequence[int], cells: list[int], queue: list[int] | None = None) -> list[int]:
    # Split cells by neighbour counts into each queued splitter until stable.
    # Every new fragment is queued; fragments are ordered by count, so the
    # result depends only on the structure, not on the labelling.
    queue = list(cells) if queue is None else queue
    qi = 0
    while qi < len(queue) and len(cells) < n:
        splitter = queue[qi]
        qi += 1
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            x = cell
            while x:
                low = x & -x
                d = (adj[low.bit_length() - 1] & splitter).bit_count()
                groups[d] = groups.get(d, 0) | low
                x ^= low
            if len(groups) == 1:
                out.append(cell)
            else:
                frags = [groups[d] for d in sorted(groups)]
                out.extend(frags)
                queue.extend(frags)
        cells = out
    return cells


def _orbit_of(start: int, gens: list[list[int]]) -> int:
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            for gamma in gens:
                nxt |= 1 << gamma[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def canonical_bits(n: int, adj: Sequence[int]) -> int:
    """Canonical adjacency string of the graph given by raw bitmask rows."""
    if n <= 1:
        return 0
    best = -1
    best_order: list[int] = []
    autos: list[list[int]] = []

    def search(cells: list[int], splitters: list[int] | None, fixed: tuple[int, ...]) -> None:
        nonlocal best, best_order
        cells = _refine(n, adj, cells, splitters)
        if len(cells) == n:
            order = [c.bit_length() - 1 for c in cells]
            key = _leaf_bits(n, adj, order)
            if best < 0 or key < best:
                best, best_order = key, order
            elif key == best:
                # two leaves with the same matrix differ by an automorphism
                gamma = [0] * n
                for a, b in zip(best_order, order):
                    gamma[a] = b
                autos.append(gamma)
            return
        t = next(i for i, c in enumerate(cells) if c & (c - 1))
        cell = cells[t]
        tried = 0
        for v in iter_bits(cell):
            if tried:
                if any((adj[u] ^ adj[v]) & ~((1 << u) | (1 << v)) == 0 for u in iter_bits(tried)):
                    continue
                # automorphisms fixing the individualised vertices map
                # explored subtrees onto unexplored ones with the same leaves
                gens = [g for g in autos if all(g[x] == x for x in fixed)]
                if gens and _orbit_of(tried, gens) >> v & 1:
                    continue
            tried |= 1 << v
            bit = 1 << v
            # the parent partition is equitable, so only the new singleton can split
            search(cells[:t] + [bit, cell ^ bit] + cells[t + 1 :], [bit], fixed + (v,))

    search([(1 << n) - 1], None, ())
    return best


def canonicalize(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, canonical_bits(g.n, g.adj))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n:
        return False
    return canonicalize(g1) == canonicalize(g2)


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class with the canonical labelling."""
    return canonicalize(g).to_graph()
