"""Interval representations and exhaustive generation of endpoint matchings.

An n-vertex interval graph always has a representation whose 2n endpoints
are exactly 1..2n.  Such a representation is a perfect matching of those
integers; generating matchings by pairing the smallest unpaired integer with
each larger unpaired one, in increasing order, visits all (2n-1)!! of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .graph import Graph

MAX_MATCHING_N = 12


@dataclass(frozen=True, order=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"interval needs lo < hi, got [{self.lo}, {self.hi}]")

    def overlaps(self, other: "Interval") -> bool:
        # closed intervals: a shared endpoint counts as an intersection
        return max(self.lo, other.lo) <= min(self.hi, other.hi)


@dataclass(frozen=True)
class EndpointMatching:
    """n intervals, sorted by left endpoint, using each of 1..2n once."""

    pairs: tuple[Interval, ...]

    def __post_init__(self) -> None:
        points = sorted(p for iv in self.pairs for p in (iv.lo, iv.hi))
        if points != list(range(1, 2 * len(self.pairs) + 1)):
            raise ValueError("endpoints must be exactly 1..2n")
        if list(self.pairs) != sorted(self.pairs):
            raise ValueError("pairs must be stored sorted by left endpoint")

    @property
    def n(self) -> int:
        return len(self.pairs)

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "EndpointMatching":
        return cls(tuple(sorted(Interval(min(a, b), max(a, b)) for a, b in pairs)))

    def __str__(self) -> str:
        return "|".join(f"{iv.lo},{iv.hi}" for iv in self.pairs)


def intervals_to_graph(intervals: Sequence[Interval | tuple[int, int]]) -> Graph:
    """One vertex per interval, in input order; edges join overlapping intervals."""
    ivs = [iv if isinstance(iv, Interval) else Interval(*iv) for iv in intervals]
    rows = [0] * len(ivs)
    for u in range(len(ivs)):
        for v in range(u + 1, len(ivs)):
            if ivs[u].overlaps(ivs[v]):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(len(ivs), tuple(rows))


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_MATCHING_N:
        raise ValueError(f"matching size must be in 1..{MAX_MATCHING_N}, got {n}")


def _visit(
    free: list[int], pairs: list[tuple[int, int]], visitor: Callable[[EndpointMatching], object]
) -> int:
    if not free:
        visitor(EndpointMatching(tuple(Interval(a, b) for a, b in pairs)))
        return 1
    a = free[0]
    total = 0
    for idx in range(1, len(free)):
        pairs.append((a, free[idx]))
        total += _visit(free[1:idx] + free[idx + 1 :], pairs, visitor)
        pairs.pop()
    return total


def enumerate_matchings(n: int, visitor: Callable[[EndpointMatching], object]) -> int:
    """Call ``visitor`` on every endpoint matching of 1..2n; return how many."""
    _check_n(n)
    return _visit(list(range(1, 2 * n + 1)), [], visitor)


def enumerate_matchings_partitioned(
    n: int, branch: int, visitor: Callable[[EndpointMatching], object]
) -> int:
    """Like :func:`enumerate_matchings`, restricted to matchings pairing 1 with ``branch``."""
    _check_n(n)
    if not 2 <= branch <= 2 * n:
        raise ValueError(f"branch must be in 2..{2 * n}, got {branch}")
    rest = [p for p in range(2, 2 * n + 1) if p != branch]
    return _visit(rest, [(1, branch)], visitor)


def iter_matchings(n: int) -> Iterator[EndpointMatching]:
    out: list[EndpointMatching] = []
    enumerate_matchings(n, out.append)
    return iter(out)


def labeled_codes(n: int, branch: int, sink: Callable[[int], object]) -> int:
    """Stream the labelled graph of every matching with 1 paired to ``branch``.

    Same visit order and same graphs as ``intervals_to_graph`` over
    :func:`enumerate_matchings_partitioned`, but adjacency is built
    incrementally during the recursion.  Interval ``i`` (i-th by left
    endpoint) is adjacent to an earlier interval exactly when that interval's
    right endpoint lies beyond interval ``i``'s left endpoint.  The code packs
    the neighbours of vertex ``j`` among ``0..j-1`` at bit offset
    ``j*(j-1)/2``; see :func:`code_to_adjacency`.
    """
    _check_n(n)
    if not 2 <= branch <= 2 * n:
        raise ValueError(f"branch must be in 2..{2 * n}, got {branch}")
    his = [0] * n
    offsets = [j * (j - 1) // 2 for j in range(n)]
    full = ((1 << (2 * n + 1)) - 1) ^ 0b11  # points 1..2n, bit p for point p
    count = 0

    def rec(i: int, free: int, code: int) -> None:
        nonlocal count
        if not free:
            sink(code)
            count += 1
            return
        low = free & -free
        a = low.bit_length() - 1
        nbrs = 0
        for p in range(i):
            if his[p] > a:
                nbrs |= 1 << p
        code |= nbrs << offsets[i]
        rest = free ^ low
        x = rest
        while x:
            b_bit = x & -x
            his[i] = b_bit.bit_length() - 1
            rec(i + 1, rest ^ b_bit, code)
            x ^= b_bit

    his[0] = branch
    rec(1, full ^ (1 << branch), 0)
    return count


def code_to_adjacency(n: int, code: int) -> list[int]:
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return rows


def intervals_to_json(intervals: Sequence[Interval], **extra: object) -> str:
    doc: dict[str, object] = {"n": len(intervals), "intervals": [[iv.lo, iv.hi] for iv in intervals]}
    doc.update(extra)
    return json.dumps(doc)


def intervals_from_json(text: str) -> tuple[list[Interval], dict]:
    """Parse ``{"n": ..., "intervals": [[lo, hi], ...]}``; returns intervals and the raw document."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or "intervals" not in doc:
        raise ValueError("interval JSON needs an 'intervals' list")
    raw = doc["intervals"]
    if not isinstance(raw, list) or any(
        not isinstance(p, list) or len(p) != 2 or not all(isinstance(x, int) for x in p) for p in raw
    ):
        raise ValueError("'intervals' must be a list of [lo, hi] integer pairs")
    if "n" in doc and doc["n"] != len(raw):
        raise ValueError(f"'n' is {doc['n']} but {len(raw)} intervals were given")
    return [Interval(lo, hi) for lo, hi in raw], doc
