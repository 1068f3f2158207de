"""Count interval graphs up to isomorphism.

The main pipeline runs over every endpoint matching of 1..2n, converts each
to its labelled graph and deduplicates by canonical form.  The oracle pipeline
knows nothing about intervals: it generates labelled graphs and filters them
with the recognizer.
"""

from __future__ import annotations

import csv
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import bounds
from .graph import CanonicalForm, Graph, canonical_bits
from .graph6 import to_graph6
from .recognizer import is_interval_fast
from .representation import MAX_MATCHING_N, code_to_adjacency, labeled_codes

log = logging.getLogger(__name__)

DEFAULT_CAP = 10
ORACLE_CAP = 7
EXHAUSTIVE_ORACLE_CAP = 6
EXTENSION_ORACLE_CAP = 9
THREADS_ENV = "INTERVAL_ENUM_THREADS"
# Labelled-graph cache entries per worker before the cache is flushed.
_SEEN_LIMIT = 1 << 21

CSV_COLUMNS = ["n", "i_n", "matchings", "lower_bound", "upper_bound", "seconds"]
BOUND_COLUMNS = ["lower_num", "lower_den", "upper", "log_in", "log_upper", "ratio"]


class CapacityError(ValueError):
    pass


@dataclass(frozen=True)
class CountsRecord:
    n: int
    i_n: int
    matchings_visited: int
    wall_time: float = 0.0

    @property
    def upper_bound(self) -> int:
        return bounds.double_factorial_odd(self.n)

    @property
    def lower_bound(self):
        return bounds.lower_bound(self.n // 3) if self.n % 3 == 0 and self.n > 0 else None


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        if value < 1:
            raise ValueError(f"{THREADS_ENV} must be at least 1")
        return value
    return os.cpu_count() or 1


def check_capacity(n: int, cap: int = DEFAULT_CAP, force: bool = False) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    limit = MAX_MATCHING_N if force else cap
    if n > limit:
        cost = bounds.double_factorial_odd(n)
        hint = "" if force else "; pass force=True (--force) to run anyway"
        raise CapacityError(f"n={n} is above the cap {limit}: it would convert (2n-1)!! = {cost:,} matchings{hint}")


def branch_keys(n: int, branch: int) -> tuple[int, set[int]]:
    """Canonical keys of all matchings pairing point 1 with ``branch``."""
    keys: set[int] = set()
    seen: set[int] = set()

    def sink(code: int) -> None:
        if code in seen:
            return
        if len(seen) >= _SEEN_LIMIT:
            seen.clear()
        seen.add(code)
        keys.add(canonical_bits(n, code_to_adjacency(n, code)))

    visited = labeled_codes(n, branch, sink)
    return visited, keys


def _class_keys(n: int, threads: int) -> tuple[int, set[int]]:
    if n == 0:
        return 1, {0}
    branches = list(range(2, 2 * n + 1))
    if threads <= 1 or len(branches) == 1:
        results = [branch_keys(n, b) for b in branches]
    else:
        with ProcessPoolExecutor(max_workers=min(threads, len(branches))) as pool:
            results = list(pool.map(branch_keys, [n] * len(branches), branches))
    visited = 0
    keys: set[int] = set()
    for count, part in results:
        visited += count
        keys |= part
    return visited, keys


def count_interval_graphs(
    n: int, threads: int = 1, *, cap: int = DEFAULT_CAP, force: bool = False
) -> CountsRecord:
    """Number of isomorphism classes of interval graphs on ``n`` vertices."""
    if threads < 1:
        raise ValueError("threads must be at least 1")
    check_capacity(n, cap, force)
    start = time.perf_counter()
    visited, keys = _class_keys(n, threads)
    elapsed = time.perf_counter() - start
    expected = bounds.double_factorial_odd(n)
    if visited != expected:
        raise AssertionError(f"visited {visited} matchings, expected {expected}")
    log.info("n=%d: %d classes from %d matchings in %.2fs", n, len(keys), visited, elapsed)
    return CountsRecord(n, len(keys), visited, elapsed)


def enumerate_distinct(
    n: int,
    sink: Callable[[Graph], object],
    threads: int = 1,
    *,
    cap: int = DEFAULT_CAP,
    force: bool = False,
) -> int:
    """Send one canonically labelled graph per class to ``sink``, in key order."""
    check_capacity(n, cap, force)
    _, keys = _class_keys(n, threads)
    for bits in sorted(keys):
        sink(CanonicalForm(n, bits).to_graph())
    return len(keys)


def _oracle_labeled(n: int, prune: bool = True) -> set[int]:
    # Vertex j picks its neighbours among 0..j-1.  With ``prune``, a prefix is
    # abandoned when its induced subgraph is not interval (interval graphs are
    # closed under induced subgraphs) or when vertex j is not of minimum degree
    # in the prefix (every graph has a labelling where each prefix ends in a
    # minimum-degree vertex: peel one off the end repeatedly).
    keys: set[int] = set()
    rows = [0] * n

    def extend(j: int) -> None:
        if j == n:
            if prune or is_interval_fast(n, rows):
                keys.add(canonical_bits(n, rows))
            return
        bit = 1 << j
        for nbrs in range(1 << j):
            rows[j] = nbrs
            x = nbrs
            while x:
                low = x & -x
                rows[low.bit_length() - 1] |= bit
                x ^= low
            if not prune:
                extend(j + 1)
            elif j == 0 or (
                nbrs.bit_count() <= min(rows[i].bit_count() for i in range(j))
                and is_interval_fast(j + 1, rows[: j + 1])
            ):
                extend(j + 1)
            x = nbrs
            while x:
                low = x & -x
                rows[low.bit_length() - 1] ^= bit
                x ^= low
        rows[j] = 0

    extend(0)
    return keys


def _oracle_extension(n: int) -> set[int]:
    # Every interval graph on m+1 vertices is, up to isomorphism, a class
    # representative on m vertices plus one new vertex.
    level = {0}
    for m in range(n):
        nxt: set[int] = set()
        for bits in level:
            base = CanonicalForm(m, bits).to_graph().adj
            for nbrs in range(1 << m):
                rows = [row | ((nbrs >> i & 1) << m) for i, row in enumerate(base)]
                rows.append(nbrs)
                if is_interval_fast(m + 1, rows):
                    nxt.add(canonical_bits(m + 1, rows))
        level = nxt
    return level


def oracle_keys(n: int, method: str = "labeled") -> set[int]:
    if method == "exhaustive":
        if not 0 <= n <= EXHAUSTIVE_ORACLE_CAP:
            raise CapacityError(f"exhaustive oracle supports 0 <= n <= {EXHAUSTIVE_ORACLE_CAP}, got {n}")
        return _oracle_labeled(n, prune=False)
    if method == "labeled":
        if not 0 <= n <= ORACLE_CAP:
            raise CapacityError(f"labelled oracle supports 0 <= n <= {ORACLE_CAP}, got {n}")
        return _oracle_labeled(n)
    if method == "extension":
        if not 0 <= n <= EXTENSION_ORACLE_CAP:
            raise CapacityError(f"extension oracle supports 0 <= n <= {EXTENSION_ORACLE_CAP}, got {n}")
        return _oracle_extension(n)
    raise ValueError(f"unknown oracle method {method!r}")


def oracle_count_interval_graphs(n: int, method: str = "labeled") -> int:
    """Independent count: generate labelled graphs, keep the interval ones, dedup.

    ``method="labeled"`` walks labelled graphs vertex by vertex with
    hereditary and minimum-degree pruning (n <= 7).  ``method="exhaustive"``
    tests all 2^(n(n-1)/2) labelled graphs (n <= 6).  ``method="extension"``
    grows class representatives one vertex at a time and reaches n = 9.
    """
    return len(oracle_keys(n, method))


# CSV persistence


def _record_row(rec: CountsRecord) -> dict[str, str]:
    low = rec.lower_bound
    return {
        "n": str(rec.n),
        "i_n": str(rec.i_n),
        "matchings": str(rec.matchings_visited),
        "lower_bound": "" if low is None else f"{low.numerator}/{low.denominator}",
        "upper_bound": str(rec.upper_bound),
        "seconds": f"{rec.wall_time:.3f}",
    }


def read_counts_csv(path: str | os.PathLike) -> dict[int, CountsRecord]:
    out: dict[int, CountsRecord] = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            rec = CountsRecord(int(row["n"]), int(row["i_n"]), int(row["matchings"]), float(row["seconds"] or 0))
            out[rec.n] = rec
    return out


def write_counts_csv(path: str | os.PathLike, records: Iterable[CountsRecord]) -> None:
    rows = sorted(records, key=lambda r: r.n)
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for rec in rows:
            writer.writerow(_record_row(rec))


def update_counts_csv(
    path: str | os.PathLike,
    ns: Iterable[int],
    threads: int = 1,
    *,
    force: bool = False,
    recompute: bool = False,
    cap: int = DEFAULT_CAP,
) -> list[CountsRecord]:
    """Compute the missing rows for ``ns`` and merge them into the CSV at ``path``."""
    existing = read_counts_csv(path) if os.path.exists(path) else {}
    wanted = []
    for n in ns:
        if recompute or n not in existing:
            existing[n] = count_interval_graphs(n, threads, cap=cap, force=force)
        wanted.append(existing[n])
    write_counts_csv(path, existing.values())
    return wanted


def export_graph6(path: str | os.PathLike, n: int, threads: int = 1, *, force: bool = False) -> int:
    lines: list[str] = []
    count = enumerate_distinct(n, lambda g: lines.append(to_graph6(g)), threads, force=force)
    with open(path, "w") as fh:
        fh.write("".join(line + "\n" for line in lines))
    return count


def report_row(rec: CountsRecord, report: Optional[bounds.BoundReport] = None) -> dict[str, str]:
    """CSV row with the bound columns appended."""
    report = report or bounds.check_bounds(rec.n, rec.i_n)
    row = _record_row(rec)
    row.update(
        lower_num="" if report.lower_num is None else str(report.lower_num),
        lower_den="" if report.lower_den is None else str(report.lower_den),
        upper=str(report.upper),
        log_in=f"{report.log_i_n:.6f}",
        log_upper=f"{report.log_upper:.6f}",
        ratio="" if report.ratio is None else f"{report.ratio:.6f}",
    )
    return row
