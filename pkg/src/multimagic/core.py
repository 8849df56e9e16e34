"""Exact-integer squares, magic constants and the power-sum verifier.

Every sum in this module is computed exactly. Grids are summed with numpy
``int64`` only when a bound on the result proves that no intermediate value
can overflow; otherwise the same reductions run on Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, NonIntegralConstant

_INT64_SAFE = 2**62

FAMILIES = ("rows", "columns", "diagonal", "back_diagonal")


@dataclass(frozen=True)
class Square:
    """An ``n x n`` grid of exact integers.

    ``degree`` is the multimagic degree claimed for the square (for instance
    by a file header). It is metadata only: it takes no part in equality and
    is never trusted without verification.
    """

    cells: tuple[tuple[int, ...], ...]
    degree: int | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.cells)
        if n < 1:
            raise DimensionError("a square needs at least one row")
        for k, row in enumerate(self.cells):
            if len(row) != n:
                raise DimensionError(f"row {k} has {len(row)} entries, expected {n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], degree: int | None = None) -> "Square":
        if isinstance(rows, np.ndarray):
            rows = rows.tolist()
        cells = tuple(tuple(_as_int(v) for v in row) for row in rows)
        return cls(cells, degree)

    @property
    def order(self) -> int:
        return len(self.cells)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.cells[i][j]

    def __iter__(self):
        return iter(self.cells)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.cells]

    def to_array(self) -> np.ndarray:
        """Return the cells as an ``int64`` array, or ``object`` if they do not fit."""
        return _array(self.cells, 1)

    def with_degree(self, degree: int | None) -> "Square":
        return Square(self.cells, degree)

    def entries(self) -> list[int]:
        return [v for row in self.cells for v in row]

    def is_normalized(self) -> bool:
        """True when the entries are exactly ``0, 1, ..., n*n - 1``."""
        n2 = self.order**2
        return sorted(self.entries()) == list(range(n2))

    def __repr__(self) -> str:
        return f"Square(order={self.order}, degree={self.degree})"


def _as_int(v) -> int:
    if isinstance(v, (bool, np.bool_)):
        raise TypeError("boolean entries are not allowed")
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, float) and v.is_integer():
        return int(v)
    raise TypeError(f"square entries must be integers, got {v!r}")


def as_square(obj) -> Square:
    """Coerce a Square, a nested sequence or a 2-d array to a :class:`Square`."""
    if isinstance(obj, Square):
        return obj
    cells = getattr(obj, "cells", None)
    if cells is not None:
        return Square.from_rows(cells)
    return Square.from_rows(obj)


def _array(cells: Sequence[Sequence[int]], e: int) -> np.ndarray:
    """Array of the cells, int64 when ``n * max|x|**e`` provably fits."""
    n = len(cells)
    peak = max((abs(v) for row in cells for v in row), default=0)
    if n * peak**e < _INT64_SAFE:
        return np.array(cells, dtype=np.int64)
    return np.array([[int(v) for v in row] for row in cells], dtype=object)


@lru_cache(maxsize=None)
def power_sum(count: int, e: int) -> int:
    """Exact ``sum(k**e for k in range(count))`` via Faulhaber's formula."""
    if count <= 0:
        return 0
    if e == 0:
        return count
    if count <= 4096:
        return sum(k**e for k in range(count))
    # sum_{k<N} k^e = 1/(e+1) * sum_j C(e+1, j) B_j N^(e+1-j), with B_1 = -1/2
    total = Fraction(0)
    for j, b in enumerate(_bernoulli(e)):
        total += comb(e + 1, j) * b * count ** (e + 1 - j)
    total /= e + 1
    assert total.denominator == 1
    return int(total)


@lru_cache(maxsize=None)
def _bernoulli(e: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for m in range(1, e + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return tuple(b)


@lru_cache(maxsize=None)
def magic_constant(n: int, e: int) -> int:
    """Common ``e``-th power line sum of a normalized MS(n): ``sum_{k<n^2} k^e / n``.

    ``e = 0`` is accepted and gives ``n`` (each line has ``n`` cells).

    Raises:
        NonIntegralConstant: if ``n`` does not divide the power sum.
    """
    if n < 1 or e < 0:
        raise ValueError(f"need n >= 1 and e >= 0, got n={n}, e={e}")
    total = power_sum(n * n, e)
    q, r = divmod(total, n)
    if r:
        raise NonIntegralConstant(f"sum of k^{e} for k < {n * n} is not divisible by {n}")
    return q


def _line_sums(cells, e: int) -> tuple[list[int], list[int], int, int]:
    a = _array(cells, e)
    p = a**e if e != 1 else a
    n = a.shape[0]
    rows = [int(v) for v in p.sum(axis=1)]
    cols = [int(v) for v in p.sum(axis=0)]
    diag = int(np.trace(p))
    back = int(sum(p[i, n - 1 - i] for i in range(n))) if p.dtype == object else int(np.trace(p[:, ::-1]))
    return rows, cols, diag, back


def power_sum_profile(s, e: int) -> list[int]:
    """Row sums, column sums, main and back diagonal sums of ``e``-th powers.

    The result has ``2n + 2`` entries in exactly that order.
    """
    if e < 1:
        raise ValueError("exponent must be >= 1")
    sq = as_square(s)
    rows, cols, diag, back = _line_sums(sq.cells, e)
    return rows + cols + [diag, back]


@dataclass(frozen=True)
class FamilyCheck:
    """Outcome for one family of lines at one exponent."""

    name: str
    passed: bool
    expected: int | None
    first_failure: int | None = None
    actual: int | None = None


@dataclass(frozen=True)
class DegreeCheck:
    exponent: int
    target: int | None
    families: tuple[FamilyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)

    def family(self, name: str) -> FamilyCheck:
        for f in self.families:
            if f.name == name:
                return f
        raise KeyError(name)


@dataclass(frozen=True)
class VerificationReport:
    degree_checked: int
    normalized: bool
    require_normalized: bool
    per_degree: tuple[DegreeCheck, ...]
    overall: bool

    def __bool__(self) -> bool:
        return self.overall

    def first_failure(self) -> tuple[int, str, int | None] | None:
        """``(exponent, family, index)`` of the first failing family, if any."""
        for d in self.per_degree:
            for f in d.families:
                if not f.passed:
                    return d.exponent, f.name, f.first_failure
        return None

    def summary(self) -> str:
        if self.overall:
            kind = "MS" if self.require_normalized else "general MS"
            return f"verified: {kind} at degree {self.degree_checked}"
        if self.require_normalized and not self.normalized:
            head = "entries are not 0..n^2-1"
        else:
            head = "power sums differ"
        fail = self.first_failure()
        if fail is not None:
            e, fam, idx = fail
            where = f"{fam}" + (f"[{idx}]" if idx is not None else "")
            head += f"; first failure at e={e}, {where}"
        return "FAILED: " + head


def _check_family(name: str, values: Sequence[int], expected: int | None) -> FamilyCheck:
    if expected is None:
        return FamilyCheck(name, False, None, 0 if values else None, values[0] if values else None)
    for k, v in enumerate(values):
        if v != expected:
            idx = k if len(values) > 1 else None
            return FamilyCheck(name, False, expected, idx, v)
    return FamilyCheck(name, True, expected)


def verify_multimagic(s, t: int, require_normalized: bool = True) -> VerificationReport:
    """Check that ``s`` and its powers up to ``t`` are all (general) magic.

    With ``require_normalized`` the entries must be exactly ``0..n^2-1`` and
    every line sum is compared against ``magic_constant(n, e)``. Otherwise
    all ``2n + 2`` line sums of each power only have to agree with each
    other. Failures are reported, never raised.
    """
    if t < 1:
        raise ValueError("degree must be >= 1")
    sq = as_square(s)
    n = sq.order
    normalized = sq.is_normalized()
    checks = []
    for e in range(1, t + 1):
        rows, cols, diag, back = _line_sums(sq.cells, e)
        if require_normalized:
            try:
                target = magic_constant(n, e)
            except NonIntegralConstant:
                target = None
        else:
            target = rows[0]
        fams = (
            _check_family("rows", rows, target),
            _check_family("columns", cols, target),
            _check_family("diagonal", [diag], target),
            _check_family("back_diagonal", [back], target),
        )
        checks.append(DegreeCheck(e, target, fams))
    sums_ok = all(c.passed for c in checks)
    overall = sums_ok and (normalized or not require_normalized)
    return VerificationReport(t, normalized, require_normalized, tuple(checks), overall)


def is_multimagic(s, t: int, require_normalized: bool = True) -> bool:
    return verify_multimagic(s, t, require_normalized).overall


def normalize(s) -> Square:
    """Shift every entry so that the smallest one becomes 0."""
    sq = as_square(s)
    low = min(sq.entries())
    if low == 0:
        return sq
    return Square(tuple(tuple(v - low for v in row) for row in sq.cells), sq.degree)
