"""Exact checks of the factorial-type lower and double-factorial upper bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = (2n-1)(2n-3)...3*1, with the empty product 1 at n = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1
    for odd in range(3, 2 * n, 2):
        out *= odd
    return out


def first_identity_failure(n_max: int) -> Optional[int]:
    """Smallest n <= n_max where (2n-1)!! = (2n)!/(2^n n!) or (2n-1)!! <= 2^n n! fails."""
    for n in range(n_max + 1):
        dfo = double_factorial_odd(n)
        scale = 2**n * math.factorial(n)
        if dfo * scale != math.factorial(2 * n) or dfo > scale:
            return n
    return None


def verify_identities(n_max: int) -> bool:
    return first_identity_failure(n_max) is None


def lower_bound(k: int) -> Fraction:
    """k!/3^(3k) as an exact rational."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return Fraction(math.factorial(k), 3 ** (3 * k))


@dataclass(frozen=True)
class BoundReport:
    n: int
    i_n: int
    lower_num: Optional[int]  # k!, unreduced; None unless n = 3k
    lower_den: Optional[int]  # 3^(3k)
    upper: int
    violation: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    @property
    def lower(self) -> Optional[Fraction]:
        return None if self.lower_num is None else Fraction(self.lower_num, self.lower_den)

    @property
    def lower_ceil(self) -> Optional[int]:
        return None if self.lower_num is None else -(-self.lower_num // self.lower_den)

    @property
    def log_i_n(self) -> float:
        return math.log(self.i_n)

    @property
    def log_lower(self) -> Optional[float]:
        if self.lower_num is None:
            return None
        return math.log(self.lower_num) - math.log(self.lower_den)

    @property
    def log_upper(self) -> float:
        return math.log(self.upper)

    @property
    def ratio(self) -> Optional[float]:
        """log i_n / (n log n): trend column only, never asserted."""
        if self.n < 2:
            return None
        return self.log_i_n / (self.n * math.log(self.n))


def check_bounds(n: int, i_n: int) -> BoundReport:
    upper = double_factorial_odd(n)
    num = den = None
    problems = []
    if n % 3 == 0 and n > 0:
        k = n // 3
        num, den = math.factorial(k), 3 ** (3 * k)
        if num > i_n * den:
            problems.append(f"lower bound {k}!/3^{3 * k} exceeds i_{n}={i_n}")
    if i_n > upper:
        problems.append(f"i_{n}={i_n} exceeds (2n-1)!!={upper}")
    if i_n > 2**n * math.factorial(n):
        problems.append(f"i_{n}={i_n} exceeds 2^n n!")
    violation = f"n={n}: " + "; ".join(problems) if problems else None
    return BoundReport(n, i_n, num, den, upper, violation)


def verify_sandwich(records: Iterable) -> list[BoundReport]:
    """One report per record (anything with ``n`` and ``i_n``); check ``.ok`` on each."""
    return [check_bounds(r.n, r.i_n) for r in records]
