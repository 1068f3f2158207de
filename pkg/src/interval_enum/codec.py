"""Permutation codec behind the factorial lower bound.

A permutation p of 1..k becomes 3k intervals with endpoints 1..6k:

    red    R_j = [3j-1, 3j]
    blue   B_j = [3k+3j-2, 3k+3j-1]
    white  W_j = [3j-2, 3k+3p(j)]

White interval W_j meets exactly the reds R_j..R_k and the blues B_1..B_p(j),
so its red degree is k+1-j and its blue degree is p(j).  Decoding reads the
index from the red degree and the image from the blue degree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graph import MAX_VERTICES, Graph
from .representation import Interval, intervals_to_graph

RED, BLUE, WHITE = "red", "blue", "white"
COLORS = (RED, BLUE, WHITE)
MAX_EXHAUSTIVE_K = 6


class InvalidCodeError(ValueError):
    """The colored graph or interval system is not the image of any permutation."""


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]  # image[j-1] = p(j)

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"{self.image} is not a permutation of 1..{len(self.image)}")

    @property
    def k(self) -> int:
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j - 1]

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        try:
            return cls(tuple(int(tok) for tok in text.replace(",", " ").split()))
        except ValueError as exc:
            raise ValueError(f"bad permutation {text!r}: {exc}") from None

    def __str__(self) -> str:
        return " ".join(map(str, self.image))


@dataclass(frozen=True)
class ColoredIntervalSystem:
    red: tuple[Interval, ...]
    blue: tuple[Interval, ...]
    white: tuple[Interval, ...]

    @property
    def k(self) -> int:
        return len(self.white)

    def intervals(self) -> list[Interval]:
        return [*self.red, *self.blue, *self.white]

    def colors(self) -> list[str]:
        return [RED] * len(self.red) + [BLUE] * len(self.blue) + [WHITE] * len(self.white)

    def to_json(self) -> str:
        ivs = self.intervals()
        return json.dumps(
            {"n": len(ivs), "intervals": [[iv.lo, iv.hi] for iv in ivs], "colors": self.colors()}
        )

    @classmethod
    def from_colored(cls, intervals: Sequence[Interval], colors: Sequence[str]) -> "ColoredIntervalSystem":
        if len(intervals) != len(colors):
            raise ValueError("need one color per interval")
        unknown = set(colors) - set(COLORS)
        if unknown:
            raise ValueError(f"unknown colors {sorted(unknown)}")
        return cls(
            tuple(iv for iv, c in zip(intervals, colors) if c == RED),
            tuple(iv for iv, c in zip(intervals, colors) if c == BLUE),
            tuple(iv for iv, c in zip(intervals, colors) if c == WHITE),
        )

    @classmethod
    def from_json(cls, text: str) -> "ColoredIntervalSystem":
        doc = json.loads(text)
        if not isinstance(doc, dict) or "intervals" not in doc or "colors" not in doc:
            raise ValueError("colored system JSON needs 'intervals' and 'colors'")
        if "n" in doc and doc["n"] != len(doc["intervals"]):
            raise ValueError("'n' does not match the number of intervals")
        try:
            ivs = [Interval(int(lo), int(hi)) for lo, hi in doc["intervals"]]
        except (TypeError, ValueError) as exc:
            raise ValueError(f"bad interval list: {exc}") from None
        return cls.from_colored(ivs, doc["colors"])


@dataclass(frozen=True)
class ColoredGraph:
    g: Graph
    colors: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.g.n:
            raise ValueError("need one color per vertex")
        if set(self.colors) - set(COLORS):
            raise ValueError(f"colors must be among {COLORS}")

    def mask(self, color: str) -> int:
        return sum(1 << v for v, c in enumerate(self.colors) if c == color)


def encode(p: Permutation) -> ColoredIntervalSystem:
    k = p.k
    if k < 1:
        raise ValueError("the codec needs k >= 1")
    return ColoredIntervalSystem(
        red=tuple(Interval(3 * j - 1, 3 * j) for j in range(1, k + 1)),
        blue=tuple(Interval(3 * k + 3 * j - 2, 3 * k + 3 * j - 1) for j in range(1, k + 1)),
        white=tuple(Interval(3 * j - 2, 3 * k + 3 * p(j)) for j in range(1, k + 1)),
    )


def realize(s: ColoredIntervalSystem) -> ColoredGraph:
    """Vertices r_1..r_k, b_1..b_k, w_1..w_k in that order."""
    if 3 * s.k > MAX_VERTICES:
        raise ValueError(f"3k={3 * s.k} exceeds the {MAX_VERTICES}-vertex graph cap; use decode_system")
    return ColoredGraph(intervals_to_graph(s.intervals()), tuple(s.colors()))


def _permutation_from_degrees(k: int, red_deg: Sequence[int], blue_deg: Sequence[int]) -> Permutation:
    if sorted(red_deg) != list(range(1, k + 1)):
        raise InvalidCodeError(f"white red-degrees {sorted(red_deg)} are not exactly 1..{k}")
    image = [0] * k
    for dr, db in zip(red_deg, blue_deg):
        image[k - dr] = db  # index j = k+1-dr, image p(j) = blue degree
    if sorted(image) != list(range(1, k + 1)):
        raise InvalidCodeError(f"white blue-degrees {image} do not form a permutation")
    return Permutation(tuple(image))


def _class_counts(colors: Sequence[str]) -> int:
    k = colors.count(WHITE)
    if colors.count(RED) != k or colors.count(BLUE) != k or k == 0:
        raise InvalidCodeError("a code needs k >= 1 vertices of each color")
    return k


def normal_form(cg: ColoredGraph) -> tuple[int, ...]:
    """Relabel as r_1..r_k, b_1..b_k, w_1..w_k using degree profiles; return adjacency rows.

    On valid codes r_i has i white neighbours, b_i has k+1-i, and w_j has
    k+1-j red neighbours, so the order is forced and two colored graphs are
    colored-isomorphic iff their normal forms agree.
    """
    k = _class_counts(cg.colors)
    red, blue, white = cg.mask(RED), cg.mask(BLUE), cg.mask(WHITE)
    adj = cg.g.adj
    verts = range(cg.g.n)
    reds = sorted((v for v in verts if red >> v & 1), key=lambda v: ((adj[v] & white).bit_count(), v))
    blues = sorted((v for v in verts if blue >> v & 1), key=lambda v: (-(adj[v] & white).bit_count(), v))
    whites = sorted((v for v in verts if white >> v & 1), key=lambda v: (-(adj[v] & red).bit_count(), v))
    order = reds + blues + whites
    return cg.g.relabel([order.index(v) for v in verts]).adj


def decode(cg: ColoredGraph, strict: bool = True) -> Permutation:
    """Recover the permutation from a realized code.

    With ``strict`` the whole colored graph must match the code of the
    recovered permutation (up to relabelling within color classes), not just
    the white degrees.
    """
    k = _class_counts(cg.colors)
    red, blue = cg.mask(RED), cg.mask(BLUE)
    whites = [v for v, c in enumerate(cg.colors) if c == WHITE]
    red_deg = [(cg.g.adj[w] & red).bit_count() for w in whites]
    blue_deg = [(cg.g.adj[w] & blue).bit_count() for w in whites]
    p = _permutation_from_degrees(k, red_deg, blue_deg)
    if strict and normal_form(cg) != realize(encode(p)).g.adj:
        raise InvalidCodeError("white degrees decode, but the graph is not the code of that permutation")
    return p


def white_degrees(s: ColoredIntervalSystem) -> tuple[list[int], list[int]]:
    """(red degrees, blue degrees) of the white intervals by overlap counting."""
    red_deg = [sum(w.overlaps(r) for r in s.red) for w in s.white]
    blue_deg = [sum(w.overlaps(b) for b in s.blue) for w in s.white]
    return red_deg, blue_deg


def decode_system(s: ColoredIntervalSystem) -> Permutation:
    """Decode straight from interval arithmetic; works for any k."""
    if not (len(s.red) == len(s.blue) == len(s.white) >= 1):
        raise InvalidCodeError("a code needs k >= 1 intervals of each color")
    red_deg, blue_deg = white_degrees(s)
    return _permutation_from_degrees(s.k, red_deg, blue_deg)


def verify_injectivity(k: int) -> bool:
    """Exhaustively check decode . realize . encode = id and that all k! codes differ."""
    if not 1 <= k <= MAX_EXHAUSTIVE_K:
        raise ValueError(f"exhaustive check supports 1 <= k <= {MAX_EXHAUSTIVE_K}")
    forms = set()
    for image in permutations(range(1, k + 1)):
        p = Permutation(image)
        cg = realize(encode(p))
        if decode(cg) != p:
            return False
        forms.add(normal_form(cg))
    return len(forms) == math.factorial(k)
