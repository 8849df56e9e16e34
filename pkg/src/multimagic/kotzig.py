"""Kotzig arrays: ``m x n`` arrays whose rows permute ``0..n-1`` and whose columns share one sum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import MultimagicError, NoSuchObject


@dataclass(frozen=True)
class KotzigArray:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not verify_kotzig(self.cells):
            raise ValueError("rows must permute 0..n-1 and all column sums must agree")

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    @property
    def column_sum(self) -> int:
        return self.rows * (self.cols - 1) // 2

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.cells]


def kotzig_exists(m: int, n: int) -> bool:
    return m > 1 and n >= 1 and (m * (n - 1)) % 2 == 0


def verify_kotzig(grid: Sequence[Sequence[int]]) -> bool:
    """True iff every row permutes ``0..n-1`` and every column has the same sum."""
    rows = [list(r) for r in grid]
    if not rows or not rows[0]:
        return False
    n = len(rows[0])
    want = list(range(n))
    if any(len(r) != n or sorted(r) != want for r in rows):
        return False
    sums = {sum(r[j] for r in rows) for j in range(n)}
    return len(sums) == 1


def build_kotzig(m: int, n: int) -> KotzigArray:
    """Deterministic KA(m, n).

    Even ``m`` stacks ``m/2`` copies of an ascending row over its reversal.
    Odd ``m`` (which forces odd ``n``) starts from a three-row block and adds
    ``(m-3)/2`` reversed pairs.

    Raises:
        NoSuchObject: unless ``m > 1`` and ``m(n-1)`` is even.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not kotzig_exists(m, n):
        raise NoSuchObject(f"no KA({m},{n}): need m > 1 and m(n-1) even")
    up = list(range(n))
    down = up[::-1]
    rows: list[list[int]] = []
    if m % 2:
        second = [(n - 1 - 2 * j) % n for j in range(n)]
        third = [3 * (n - 1) // 2 - a - b for a, b in zip(up, second)]
        rows = [up, second, third]
        m -= 3
    for _ in range(m // 2):
        rows += [up, down]
    if not verify_kotzig(rows):
        raise MultimagicError(f"internal error: KA({len(rows)},{n}) failed verification")
    return KotzigArray(tuple(tuple(r) for r in rows))
