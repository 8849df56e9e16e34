"""Families of complementary multimagic squares.

A family of ``m`` normalized MS(n, t) squares is complementary when, at
exponent ``t + 1``, the power sums over every row index, every column index
and both diagonals, added across all members, equal ``m * S_{t+1}(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Square, as_square, magic_constant, power_sum_profile, verify_multimagic
from .errors import (
    EvenDegreeRequired,
    MultimagicError,
    NoSuchObject,
    NotNormalized,
    OrderMismatch,
    SeedNotMultimagic,
)
from .kotzig import KotzigArray, build_kotzig, kotzig_exists, verify_kotzig
from .latin import LatinSquare, build_odls_pair, check_latin_properties, odls_pair_exists


@dataclass(frozen=True)
class ScmsFamily:
    """Ordered members of a complementary family, each an MS(n, degree)."""

    members: tuple[Square, ...]
    degree: int

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError("a complementary family needs at least two members")
        orders = {s.order for s in self.members}
        if len(orders) != 1:
            raise OrderMismatch(f"members have different orders: {sorted(orders)}")
        if self.degree < 1:
            raise ValueError("degree must be >= 1")

    @classmethod
    def of(cls, members: Iterable, degree: int) -> "ScmsFamily":
        return cls(tuple(as_square(s) for s in members), degree)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return self.members[0].order

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, k: int) -> Square:
        return self.members[k]

    def __iter__(self):
        return iter(self.members)

    def verify(self) -> "ScmsReport":
        return verify_scms(self.members, self.degree)


@dataclass(frozen=True)
class ScmsReport:
    degree: int
    target: int
    members_ok: tuple[bool, ...]
    row_sums: tuple[int, ...]
    column_sums: tuple[int, ...]
    diagonal_sum: int
    back_diagonal_sum: int
    problems: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def verify_scms(family, t: int) -> ScmsReport:
    """Check that every member is an MS(n, t) and the joint ``t+1`` sums hit ``m * S_{t+1}(n)``.

    Raises:
        OrderMismatch: if the members do not share one order.
    """
    members = [as_square(s) for s in (family.members if isinstance(family, ScmsFamily) else family)]
    if not members:
        raise ValueError("empty family")
    n = members[0].order
    if any(s.order != n for s in members):
        raise OrderMismatch("family members have different orders")
    m = len(members)
    e = t + 1
    target = m * magic_constant(n, e)
    problems = []
    members_ok = []
    for k, s in enumerate(members):
        rep = verify_multimagic(s, t, True)
        members_ok.append(rep.overall)
        if not rep.overall:
            problems.append(f"member {k}: {rep.summary()}")
    totals = [0] * (2 * n + 2)
    for s in members:
        for idx, v in enumerate(power_sum_profile(s, e)):
            totals[idx] += v
    rows, cols = totals[:n], totals[n : 2 * n]
    diag, back = totals[2 * n], totals[2 * n + 1]
    for label, values in (("R1 row", rows), ("R2 column", cols), ("R3 diagonal", [diag]), ("R4 back diagonal", [back])):
        for idx, v in enumerate(values):
            if v != target:
                where = f" {idx}" if len(values) > 1 else ""
                problems.append(f"{label}{where}: sum {v} != {target}")
                break
    return ScmsReport(t, target, tuple(members_ok), tuple(rows), tuple(cols), diag, back, tuple(problems))


def _require_valid(family: ScmsFamily) -> ScmsFamily:
    report = family.verify()
    if not report.ok:
        raise MultimagicError("constructed family failed verification: " + "; ".join(report.problems))
    return family


def build_scms_kotzig(
    m: int,
    n: int,
    *,
    kotzig: KotzigArray | Sequence[Sequence[int]] | None = None,
    pair: tuple | None = None,
    check: bool = True,
) -> ScmsFamily:
    """An m-SCMS(n) from a Kotzig array and an orthogonal diagonal Latin pair.

    Member ``s`` is ``n * A + B_s`` where ``B_s`` relabels the symbols of ``B``
    through row ``s`` of the Kotzig array. ``kotzig`` and ``pair`` default to
    the deterministic builders.

    Raises:
        NoSuchObject: if no KA(m, n) or no orthogonal diagonal pair of order
            ``n`` exists; the message names the missing ingredient.
    """
    if kotzig is None:
        if not kotzig_exists(m, n):
            raise NoSuchObject(f"Kotzig array KA({m},{n}) does not exist (need m > 1 and m(n-1) even)")
        kotzig = build_kotzig(m, n)
    k_rows = kotzig.cells if isinstance(kotzig, KotzigArray) else tuple(tuple(r) for r in kotzig)
    if len(k_rows) != m or any(len(r) != n for r in k_rows) or not verify_kotzig(k_rows):
        raise ValueError(f"kotzig must be a valid {m}x{n} Kotzig array")
    if pair is None:
        if not odls_pair_exists(n):
            raise NoSuchObject(f"no orthogonal diagonal Latin pair of order {n}")
        pair = build_odls_pair(n)
    a, b = (p.cells if isinstance(p, LatinSquare) else tuple(tuple(r) for r in p) for p in pair)
    flags = check_latin_properties(a, b)
    if not (flags.orthogonal_with_partner and flags.diagonal and check_latin_properties(b).diagonal):
        raise ValueError("pair must be two orthogonal diagonal Latin squares")
    if len(a) != n:
        raise OrderMismatch(f"pair has order {len(a)}, expected {n}")
    members = []
    for relabel in k_rows:
        cells = tuple(tuple(n * a[i][j] + relabel[b[i][j]] for j in range(n)) for i in range(n))
        members.append(Square(cells, 1))
    family = ScmsFamily(tuple(members), 1)
    return _require_valid(family) if check else family


def complement(s) -> Square:
    """Elementwise ``(n^2 - 1) - x`` of a normalized square.

    Raises:
        NotNormalized: if the entries are not exactly ``0..n^2-1``.
    """
    sq = as_square(s)
    if not sq.is_normalized():
        raise NotNormalized("complement needs entries exactly 0..n^2-1")
    top = sq.order**2 - 1
    return Square(tuple(tuple(top - v for v in row) for row in sq.cells), sq.degree)


def build_scms_complement(seed, t: int, l: int = 1, *, check: bool = True) -> ScmsFamily:
    """``[seed, complement(seed)]`` repeated ``l`` times, complementary at degree ``t``.

    Raises:
        EvenDegreeRequired: if ``t`` is odd.
        SeedNotMultimagic: if the seed is not a normalized MS(n, t).
    """
    if t < 1 or t % 2:
        raise EvenDegreeRequired(f"complement families need an even degree, got {t}")
    if l < 1:
        raise ValueError("l must be >= 1")
    sq = as_square(seed)
    report = verify_multimagic(sq, t, True)
    if not report.overall:
        raise SeedNotMultimagic(f"seed is not an MS({sq.order},{t}): {report.summary()}")
    sq = sq.with_degree(t)
    family = ScmsFamily((sq, complement(sq)) * l, t)
    return _require_valid(family) if check else family


def extend_scms(family: ScmsFamily, k: int) -> ScmsFamily:
    """The family concatenated with itself ``k`` times."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return ScmsFamily(family.members * k, family.degree)
