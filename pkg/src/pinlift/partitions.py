"""Integer partitions: enumeration, conjugation, the diagonal sign and f_lambda.

A :class:`Partition` is an immutable tuple of weakly decreasing positive
integers.  The empty tuple is the unique partition of 0; by convention its
dimension is 1 and its sign is +1.
"""
from __future__ import annotations

from math import factorial
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> Partition((3, 1)).n
    4
    >>> Partition.parse("4,3,2,1")
    Partition(4, 3, 2, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma separated list such as ``"4,3,2,1"``; ``""`` is the empty partition."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(int(tok) for tok in text.split(","))

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Yield the 1-based (row, column) cells of the Young diagram."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def contains(self, other: Iterable[int]) -> bool:
        """True if the diagram of ``other`` fits inside this one."""
        other = tuple(other)
        if len(other) > len(self):
            return False
        return all(a <= b for a, b in zip(other, self))


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        return Partition.parse(obj)
    return Partition(obj)


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram."""
    lam = as_partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def is_self_conjugate(lam) -> bool:
    lam = as_partition(lam)
    return lam == conjugate(lam)


def cells_above_diagonal(lam) -> int:
    # cells (i, j) with j > i: row i contributes max(0, lam_i - i)
    return sum(max(0, p - i) for i, p in enumerate(as_partition(lam), start=1))


def epsilon(lam) -> int:
    """+1 if the number of cells strictly above the diagonal is even, else -1."""
    return 1 if cells_above_diagonal(lam) % 2 == 0 else -1


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of ``n`` in decreasing lexicographic order.

    ``(n)`` comes first and ``(1^n)`` last, which is also the row order of the
    usual character tables.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None:
        max_part = n

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
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


def hook_lengths(lam) -> list[int]:
    lam = as_partition(lam)
    conj = conjugate(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.cells()]


def dimension(lam) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula).

    Returns 1 for the empty partition.
    """
    lam = as_partition(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    f, rem = divmod(factorial(lam.n), prod)
    assert rem == 0, f"hook product does not divide {lam.n}! for {lam}"
    return f
