"""Integer partitions: conjugation, dominance, enumeration."""
from __future__ import annotations

from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    ``part(i)`` is 1-indexed and returns 0 past the last part, which is how
    tails like ``b_{n+1} = 0`` are read throughout the package.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        if i < 1:
            raise IndexError("partition parts are 1-indexed")
        return self[i - 1] if i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        return tuple(self.part(i) for i in range(1, n + 1))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def dominates(self, other: Partition) -> bool:
        return dominates(self, other)


def conjugate(sigma: Partition) -> Partition:
    """``c_j`` = number of parts ``>= j``."""
    sigma = Partition(sigma)
    if not sigma:
        return Partition()
    return Partition(sum(1 for b in sigma if b >= j) for j in range(1, sigma[0] + 1))


def dominates(a: Partition, b: Partition) -> bool:
    """True when ``a >= b`` in dominance order (same size required)."""
    if sum(a) != sum(b):
        raise ValueError("dominance compares partitions of the same integer")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order: ``(n), (n-1,1), ...``."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def partition_count(n: int) -> int:
    """Number of partitions via Euler's pentagonal recurrence (independent of ``partitions``)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
