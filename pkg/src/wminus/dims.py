"""Graded dimension counts.

The positive half is counted by the product over odd ``a >= 1`` and
``b >= 1`` of ``1 / (1 - t^a q^b)``; the negative half is the same series
with ``t -> t^-1``.  Two independent counts are provided (a truncated series
expansion and a brute-force multiset enumeration), plus odd and distinct
partition counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "DimTable",
    "series_coefficients",
    "multiset_generator_count",
    "odd_partition_count",
    "distinct_partition_count",
]


@dataclass
class DimTable:
    """Coefficients keyed by ``(r, k)``; ``r`` is the t-exponent, ``k`` the q-exponent."""

    max_r: int
    max_k: int
    side: str = ">"
    values: dict = field(default_factory=dict)

    def __getitem__(self, key) -> int:
        return self.values.get(key, 0)

    def rows(self):
        """Rows ordered by ``k``, each listing the coefficients over ``r``."""
        rs = self.r_range()
        return [[self[(r, k)] for r in rs] for k in range(self.max_k + 1)]

    def r_range(self):
        if self.side == ">":
            return list(range(0, self.max_r + 1))
        return list(range(-self.max_r, 1))

    def render(self) -> str:
        rs = self.r_range()
        head = ["k\\r"] + [str(r) for r in rs]
        body = [[str(k)] + [str(v) for v in row] for k, row in enumerate(self.rows())]
        widths = [max(len(line[i]) for line in [head] + body) for i in range(len(head))]
        fmt = lambda line: "  ".join(s.rjust(w) for s, w in zip(line, widths))
        return "\n".join([fmt(head)] + [fmt(line) for line in body])

    def machine_lines(self):
        for k in range(self.max_k + 1):
            for r in self.r_range():
                yield f"dim[{r},{k}]", str(self[(r, k)])


def series_coefficients(max_r: int, max_k: int, side: str = ">") -> DimTable:
    """Expand the product series up to ``t^max_r q^max_k``.

    Each factor ``1/(1 - t^a q^b)`` is multiplied in as a geometric series,
    truncating rectangularly.  ``side='<'`` reports the mirror ``r -> -r``.
    """
    if max_r < 0 or max_k < 0:
        raise ValueError("bounds must be nonnegative")
    if side not in (">", "<"):
        raise ValueError("side must be '>' or '<'")
    coeff = [[0] * (max_k + 1) for _ in range(max_r + 1)]
    coeff[0][0] = 1
    for a in range(1, max_r + 1, 2):
        for b in range(1, max_k + 1):
            # in-place forward sweep multiplies by 1/(1 - t^a q^b)
            for r in range(a, max_r + 1):
                for k in range(b, max_k + 1):
                    coeff[r][k] += coeff[r - a][k - b]
    sign = 1 if side == ">" else -1
    values = {
        (sign * r, k): coeff[r][k]
        for r in range(max_r + 1)
        for k in range(max_k + 1)
        if coeff[r][k]
    }
    return DimTable(max_r, max_k, side, values)


def multiset_generator_count(r: int, k: int) -> int:
    """Number of multisets of pairs (odd ``a >= 1``, ``b >= 1``) with sums ``(r, k)``.

    Enumerates multisets explicitly as nonincreasing sequences of pairs.
    """
    if r < 0 or k < 0:
        return 0
    pairs = [(a, b) for a in range(1, r + 1, 2) for b in range(1, k + 1)]
    pairs.sort(reverse=True)

    def count(start, r_left, k_left):
        if r_left == 0 and k_left == 0:
            return 1
        total = 0
        for i in range(start, len(pairs)):
            a, b = pairs[i]
            if a <= r_left and b <= k_left:
                total += count(i, r_left - a, k_left - b)
        return total

    return count(0, r, k)


def _partitions_with(n, parts_ok, distinct):
    def rec(remaining, max_part):
        if remaining == 0:
            return 1
        total = 0
        for p in range(min(remaining, max_part), 0, -1):
            if parts_ok(p):
                total += rec(remaining - p, p - 1 if distinct else p)
        return total

    return rec(n, n)


@lru_cache(maxsize=None)
def odd_partition_count(n: int) -> int:
    """Partitions of ``n`` with every part odd (brute-force enumeration)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partitions_with(n, lambda p: p % 2 == 1, distinct=False)


@lru_cache(maxsize=None)
def distinct_partition_count(n: int) -> int:
    """Partitions of ``n`` into distinct parts."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partitions_with(n, lambda p: True, distinct=True)
