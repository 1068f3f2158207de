"""graph6 serialization for graphs with at most 32 vertices."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def to_graph6(g: Graph) -> str:
    out = [chr(g.n + 63)]
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    for p in range(0, len(bits), 6):
        value = 0
        for b in bits[p : p + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER) :]
    if not line:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in line]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"byte out of graph6 range in {line!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error(f"graphs with more than {MAX_VERTICES} vertices are not supported")
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
    m = n * (n - 1) // 2
    expected = (m + 5) // 6
    if len(codes) - 1 != expected:
        raise Graph6Error(f"n={n} needs {expected} data bytes, got {len(codes) - 1}")
    value = 0
    for c in codes[1:]:
        value = value << 6 | c
    pad = 6 * expected - m
    if value & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    value >>= pad
    rows = [0] * n
    pos = m
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if value >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
