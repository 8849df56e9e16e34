"""Partitioned multimagic grids and their composition with an outer square.

A partitioned grid of outer order ``m`` and inner order ``n`` is an
``mn x mn`` general t-multimagic grid whose ``n x n`` blocks are each a
normalized MS(n, t-1). Scaling an MS(m, t) by ``n^2``, inflating each cell
to an ``n x n`` block and adding such a grid gives an MS(mn, t).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .core import Square, as_square, magic_constant, verify_multimagic
from .errors import DegreeMismatch, DimensionError, IngredientInvalid, OrderMismatch
from .latin import LatinSquare, check_latin_properties
from .scms import ScmsFamily


@dataclass(frozen=True)
class PartitionedSquare:
    square: Square
    outer_order: int
    inner_order: int
    degree: int

    def __post_init__(self):
        if self.square.order != self.outer_order * self.inner_order:
            raise DimensionError(
                f"grid of order {self.square.order} is not {self.outer_order} x {self.inner_order} blocks"
            )

    @property
    def order(self) -> int:
        return self.square.order

    @property
    def cells(self):
        return self.square.cells

    def block(self, u: int, v: int) -> Square:
        n = self.inner_order
        rows = self.square.cells[n * u : n * (u + 1)]
        return Square(tuple(r[n * v : n * (v + 1)] for r in rows))

    def verify(self) -> "PgmsReport":
        return verify_pgms(self.square, self.outer_order, self.inner_order, self.degree)


@dataclass(frozen=True)
class PgmsReport:
    outer_order: int
    inner_order: int
    degree: int
    bad_blocks: tuple[tuple[int, int], ...]
    global_failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.bad_blocks and not self.global_failures

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"verified: PGMS({self.outer_order * self.inner_order},{self.degree})"
        parts = []
        if self.bad_blocks:
            u, v = self.bad_blocks[0]
            parts.append(f"{len(self.bad_blocks)} bad block(s), first at ({u},{v})")
        parts.extend(self.global_failures)
        return "FAILED: " + "; ".join(parts)


def verify_pgms(grid, m: int, n: int, t: int) -> PgmsReport:
    """Check the block and global conditions of a partitioned t-multimagic grid.

    Every block must be a normalized MS(n, t-1) (for ``t = 1`` only the entry
    set is checked), and every row, column and diagonal ``e``-power sum of
    the whole grid must equal ``m * S_e(n)`` for ``e = 1..t``.

    Raises:
        DimensionError: if the grid is not ``mn x mn``.
    """
    sq = as_square(grid)
    if m < 1 or n < 1 or t < 1:
        raise ValueError("m, n and t must be positive")
    if sq.order != m * n:
        raise DimensionError(f"grid has order {sq.order}, expected {m * n}")
    part = PartitionedSquare(sq, m, n, t)
    bad = []
    for u in range(m):
        for v in range(m):
            b = part.block(u, v)
            ok = verify_multimagic(b, t - 1, True).overall if t > 1 else b.is_normalized()
            if not ok:
                bad.append((u, v))
    failures = []
    whole = verify_multimagic(sq, t, False)
    for check in whole.per_degree:
        want = m * magic_constant(n, check.exponent)
        for fam in check.families:
            if not fam.passed:
                idx = "" if fam.first_failure is None else f"[{fam.first_failure}]"
                failures.append(f"e={check.exponent} {fam.name}{idx} differs from the other lines")
                break
        else:
            if check.target != want:
                failures.append(f"e={check.exponent} line sum {check.target} != {want}")
    return PgmsReport(m, n, t, tuple(bad), tuple(failures))


def assemble_pgms(
    family: ScmsFamily,
    dls,
    *,
    degree: int | None = None,
    check: bool = True,
) -> PartitionedSquare:
    """Place member ``d[u][v]`` of the family at block ``(u, v)``.

    The family must have degree ``t - 1`` and exactly ``m`` members, where
    ``m`` is the order of the diagonal Latin square ``dls``; the result has
    degree ``t``.

    Raises:
        OrderMismatch: if the family size differs from the Latin square order.
        DegreeMismatch: if ``degree`` is given and is not ``family.degree + 1``.
        IngredientInvalid: if ``dls`` is not a diagonal Latin square.
    """
    d = dls.cells if isinstance(dls, LatinSquare) else tuple(tuple(r) for r in dls)
    m = len(d)
    if family.size != m:
        raise OrderMismatch(f"family has {family.size} members but the Latin square has order {m}")
    t = family.degree + 1
    if degree is not None and degree != t:
        raise DegreeMismatch(f"family of degree {family.degree} yields degree {t}, not {degree}")
    if not check_latin_properties(d).diagonal:
        raise IngredientInvalid("block layout must be a diagonal Latin square", ingredient="dls")
    n = family.order
    members = [mem.cells for mem in family.members]
    rows = []
    for u in range(m):
        for x in range(n):
            row = []
            for v in range(m):
                row.extend(members[d[u][v]][x])
            rows.append(tuple(row))
    part = PartitionedSquare(Square(tuple(rows)), m, n, t)
    if check:
        report = part.verify()
        if not report.ok:
            raise IngredientInvalid(
                "assembled grid is not partitioned multimagic; is the family complementary? " + report.summary(),
                ingredient="family",
            )
    return part


def uniform_pgms(block, m: int, degree: int) -> PartitionedSquare:
    """``J_m (x) B``: every block equal to ``block``."""
    b = as_square(block)
    rows = tuple(tuple(v for _ in range(m) for v in row) for _ in range(m) for row in b.cells)
    return PartitionedSquare(Square(rows), m, b.order, degree)


def _inflate_add(a: Square, part_cells, n: int) -> Square:
    m = a.order
    n2 = n * n
    rows = []
    for u in range(m):
        arow = a.cells[u]
        for r in range(n):
            prow = part_cells[n * u + r]
            rows.append(tuple(n2 * arow[v] + prow[n * v + s] for v in range(m) for s in range(n)))
    return Square(tuple(rows))


def compose_outer(outer, pgms: PartitionedSquare, *, check: bool = True) -> Square:
    """``n^2 * A (x) J_n + B`` for an MS(m, t) ``A`` and a partitioned grid ``B``.

    With ``check`` both ingredients are verified first and the result is
    verified as an MS(mn, t). ``check=False`` composes verbatim.

    Raises:
        OrderMismatch: if ``A`` has order other than ``pgms.outer_order``.
        DegreeMismatch: if ``A`` claims a degree below ``pgms.degree``.
        IngredientInvalid: if an ingredient fails verification.
    """
    a = as_square(outer)
    t = pgms.degree
    if a.order != pgms.outer_order:
        raise OrderMismatch(f"outer square has order {a.order}, blocks expect {pgms.outer_order}")
    if a.degree is not None and a.degree < t:
        raise DegreeMismatch(f"outer square claims degree {a.degree}, need {t}")
    if check:
        rep = verify_multimagic(a, t, True)
        if not rep.overall:
            raise IngredientInvalid(f"outer square is not an MS({a.order},{t}): {rep.summary()}", ingredient="outer")
        prep = pgms.verify()
        if not prep.ok:
            raise IngredientInvalid(f"partitioned grid invalid: {prep.summary()}", ingredient="pgms")
    c = _inflate_add(a, pgms.square.cells, pgms.inner_order)
    if check:
        rep = verify_multimagic(c, t, True)
        if not rep.overall:
            raise IngredientInvalid(f"composition failed verification: {rep.summary()}")
    return c.with_degree(t)


def product(first, second, t: int | None = None, *, check: bool = True) -> Square:
    """Compound square ``n^2 A (x) J_n + J_m (x) B`` of an MS(m, t) and an MS(n, t).

    ``t`` defaults to the smaller claimed degree of the two inputs, or 1.

    Raises:
        IngredientInvalid: if either factor is not a normalized MS of degree ``t``.
    """
    a, b = as_square(first), as_square(second)
    if t is None:
        claimed = [s.degree for s in (a, b) if s.degree is not None]
        t = min(claimed) if claimed else 1
    if check:
        for name, s in (("left", a), ("right", b)):
            rep = verify_multimagic(s, t, True)
            if not rep.overall:
                raise IngredientInvalid(f"{name} factor is not an MS({s.order},{t}): {rep.summary()}", ingredient=name)
    c = _inflate_add(a, uniform_pgms(b, a.order, t).square.cells, b.order)
    return c.with_degree(t)


def composition_sum(m: int, n: int, e: int) -> int:
    """Line sum of ``e``-th powers predicted by the binomial expansion of a composition.

    Uses ``S_0(q) = q``; equals ``magic_constant(m * n, e)`` whenever both
    constants are integral.
    """
    return sum(
        comb(e, k) * n ** (2 * (e - k)) * magic_constant(m, e - k) * magic_constant(n, k) for k in range(e + 1)
    )
