"""Diagonal Latin squares and orthogonal diagonal pairs.

Construction order for both builders is fixed, so outputs are reproducible:

1. tabulated base squares (verified when used),
2. the linear forms ``(2i + j) mod m`` / ``(i + 2j, 2i + j) mod n`` when
   ``gcd(order, 6) == 1``,
3. Kronecker products of smaller constructible orders,
4. for single squares only, a deterministic most-constrained-cell search.

Orders not covered by any rule raise :class:`ConstructionLimit`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Sequence

from . import _tables
from .errors import ConstructionLimit, MultimagicError, NoSuchObject, OrderMismatch

#: Largest order handed to the backtracking search for a single square.
MAX_SEARCH_ORDER = 64

Grid = Sequence[Sequence[int]]


@dataclass(frozen=True)
class LatinFlags:
    latin: bool
    diagonal: bool
    orthogonal_with_partner: bool | None = None


@dataclass(frozen=True)
class LatinSquare:
    """An ``m x m`` Latin square over ``0..m-1``."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not _is_latin(self.cells):
            raise ValueError("every row and column must be a permutation of 0..m-1")

    @classmethod
    def from_rows(cls, rows: Grid) -> "LatinSquare":
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @property
    def order(self) -> int:
        return len(self.cells)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.cells[i][j]

    @cached_property
    def is_diagonal(self) -> bool:
        return _is_diagonal(self.cells)

    def is_orthogonal_to(self, other: "LatinSquare | Grid") -> bool:
        return check_latin_properties(self.cells, _cells(other)).orthogonal_with_partner

    def relabel(self, mapping: Sequence[int]) -> "LatinSquare":
        """Apply the symbol permutation ``v -> mapping[v]``."""
        return LatinSquare(tuple(tuple(mapping[v] for v in row) for row in self.cells))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.cells]


def _cells(obj) -> tuple[tuple[int, ...], ...]:
    cells = getattr(obj, "cells", obj)
    return tuple(tuple(int(v) for v in r) for r in cells)


def _is_square(grid) -> bool:
    n = len(grid)
    return n > 0 and all(len(r) == n for r in grid)


def _is_latin(grid) -> bool:
    if not _is_square(grid):
        return False
    n = len(grid)
    want = set(range(n))
    if any(set(r) != want for r in grid):
        return False
    return all({grid[i][j] for i in range(n)} == want for j in range(n))


def _is_diagonal(grid) -> bool:
    n = len(grid)
    want = set(range(n))
    return {grid[i][i] for i in range(n)} == want and {grid[i][n - 1 - i] for i in range(n)} == want


def _orthogonal(a, b) -> bool:
    n = len(a)
    return len({(a[i][j], b[i][j]) for i in range(n) for j in range(n)}) == n * n


def check_latin_properties(L: Grid, partner: Grid | None = None) -> LatinFlags:
    """Latin, diagonal and (optionally) orthogonality flags for a grid.

    Raises:
        OrderMismatch: if ``partner`` has a different order.
    """
    a = _cells(L)
    latin = _is_latin(a)
    diagonal = latin and _is_diagonal(a)
    ortho = None
    if partner is not None:
        b = _cells(partner)
        if len(b) != len(a):
            raise OrderMismatch(f"orders differ: {len(a)} vs {len(b)}")
        ortho = latin and _is_latin(b) and _orthogonal(a, b)
    return LatinFlags(latin, diagonal, ortho)


def latin_product(first, second) -> LatinSquare:
    """Symbol-pairing product: cell ``((i1,i2),(j1,j2))`` gets ``q*L1[i1][j1] + L2[i2][j2]``.

    Diagonal inputs give a diagonal output, and the products of two
    orthogonal pairs are orthogonal.
    """
    a, b = _cells(first), _cells(second)
    p, q = len(a), len(b)
    rows = []
    for i1 in range(p):
        for i2 in range(q):
            rows.append(tuple(q * a[i1][j1] + b[i2][j2] for j1 in range(p) for j2 in range(q)))
    return LatinSquare(tuple(rows))


def _linear(n: int, x: int, y: int) -> LatinSquare:
    return LatinSquare(tuple(tuple((x * i + y * j) % n for j in range(n)) for i in range(n)))


def _split(n: int, ok) -> tuple[int, int] | None:
    """Smallest factorisation ``n = p*q`` with ``4 <= p <= q`` where ``ok`` holds for both."""
    p = 4
    while p * p <= n:
        if n % p == 0 and ok(p) and ok(n // p):
            return p, n // p
        p += 1
    return None


def _search_diagonal(m: int) -> tuple[tuple[int, ...], ...] | None:
    """Most-constrained-cell backtracking; ties go to the lexicographically first cell."""
    full = (1 << m) - 1
    grid = [[-1] * m for _ in range(m)]
    rows = [0] * m
    cols = [0] * m
    diag = [0, 0]
    empty = [(i, j) for i in range(m) for j in range(m)]

    def toggle(i, j, v):
        bit = 1 << v
        rows[i] ^= bit
        cols[j] ^= bit
        if i == j:
            diag[0] ^= bit
        if i + j == m - 1:
            diag[1] ^= bit

    def free(i, j):
        used = rows[i] | cols[j]
        if i == j:
            used |= diag[0]
        if i + j == m - 1:
            used |= diag[1]
        return full & ~used

    # first row fixed to the identity; this only relabels symbols
    for j in range(m):
        grid[0][j] = j
        toggle(0, j, j)
    empty = empty[m:]
    pending = set(empty)

    def solve() -> bool:
        if not pending:
            return True
        best = None
        for cell in empty:
            if cell not in pending:
                continue
            mask = free(*cell)
            count = bin(mask).count("1")
            if best is None or count < best[0]:
                best = (count, cell, mask)
                if count <= 1:
                    break
        count, (i, j), mask = best
        if count == 0:
            return False
        pending.discard((i, j))
        v = 0
        while mask:
            if mask & 1:
                grid[i][j] = v
                toggle(i, j, v)
                if solve():
                    return True
                toggle(i, j, v)
            mask >>= 1
            v += 1
        grid[i][j] = -1
        pending.add((i, j))
        return False

    if not solve():
        return None
    return tuple(tuple(r) for r in grid)


def diagonal_ls_exists(m: int) -> bool:
    return m == 1 or m >= 4


def _dls_without_search(m: int) -> bool:
    """Orders reachable from tables, linear forms and products alone."""
    if m in _tables.DIAGONAL_LS or m in _tables.ODLS_PAIRS or gcd(m, 6) == 1:
        return True
    return _split(m, _dls_without_search) is not None


@lru_cache(maxsize=None)
def build_diagonal_ls(m: int) -> LatinSquare:
    """A diagonal Latin square of order ``m``.

    Raises:
        NoSuchObject: for ``m`` in ``{2, 3}``.
        ConstructionLimit: if ``m`` needs the search and exceeds ``MAX_SEARCH_ORDER``.
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return LatinSquare(((0,),))
    if not diagonal_ls_exists(m):
        raise NoSuchObject(f"no diagonal Latin square of order {m}")
    if m in _tables.DIAGONAL_LS:
        sq = LatinSquare.from_rows(_tables.DIAGONAL_LS[m])
    elif m in _tables.ODLS_PAIRS:
        sq = LatinSquare.from_rows(_tables.ODLS_PAIRS[m][0])
    elif gcd(m, 6) == 1:
        sq = _linear(m, 2, 1)
    elif split := _split(m, _dls_without_search):
        p, q = split
        sq = latin_product(build_diagonal_ls(p), build_diagonal_ls(q))
    elif m <= MAX_SEARCH_ORDER:
        cells = _search_diagonal(m)
        if cells is None:
            raise MultimagicError(f"search found no diagonal Latin square of order {m}")
        sq = LatinSquare(cells)
    else:
        raise ConstructionLimit(f"no built-in construction for a diagonal Latin square of order {m}")
    if not sq.is_diagonal:
        raise MultimagicError(f"internal error: order-{m} square is not diagonal")
    return sq


def odls_pair_exists(n: int) -> bool:
    """Whether an orthogonal pair of diagonal Latin squares of order ``n`` exists."""
    return n >= 1 and n not in (2, 3, 6)


def odls_pair_constructible(n: int) -> bool:
    """Whether :func:`build_odls_pair` can produce a pair of order ``n``."""
    if not odls_pair_exists(n):
        return False
    if n == 1 or n in _tables.ODLS_PAIRS or gcd(n, 6) == 1:
        return True
    return _split(n, odls_pair_constructible) is not None


@lru_cache(maxsize=None)
def build_odls_pair(n: int) -> tuple[LatinSquare, LatinSquare]:
    """An orthogonal pair of diagonal Latin squares of order ``n``.

    Raises:
        NoSuchObject: for ``n`` in ``{2, 3, 6}``.
        ConstructionLimit: when the order is neither tabulated, coprime to 6,
            nor a product of constructible orders.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        one = LatinSquare(((0,),))
        return one, one
    if not odls_pair_exists(n):
        raise NoSuchObject(f"no orthogonal pair of diagonal Latin squares of order {n}")
    if n in _tables.ODLS_PAIRS:
        a, b = (LatinSquare.from_rows(g) for g in _tables.ODLS_PAIRS[n])
    elif gcd(n, 6) == 1:
        a, b = _linear(n, 1, 2), _linear(n, 2, 1)
    elif split := _split(n, odls_pair_constructible):
        p, q = split
        a1, b1 = build_odls_pair(p)
        a2, b2 = build_odls_pair(q)
        a, b = latin_product(a1, a2), latin_product(b1, b2)
    else:
        raise ConstructionLimit(f"no built-in construction for an orthogonal diagonal pair of order {n}")
    flags = check_latin_properties(a, b)
    if not (a.is_diagonal and b.is_diagonal and flags.orthogonal_with_partner):
        raise MultimagicError(f"internal error: order-{n} pair failed verification")
    return a, b
