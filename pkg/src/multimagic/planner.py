"""Choose and run construction recipes for MS(N, t), t in {2, 3}.

Rules, tried in order for a target ``(N, t)``:

* a catalog square of order ``N`` verified at degree ``>= t``;
* ``N = m * n`` composed from an MS(m, t) and an m-SCMS(n, t-1), with the
  smallest usable outer order ``m``. For ``t = 2`` the family comes from a
  Kotzig array and an orthogonal diagonal Latin pair (``m(n-1)`` even,
  ``n`` not in {2, 3, 6}); for ``t = 3`` it is complement pairs of an
  MS(n, 2), which needs even ``m``;
* a product of two plannable factors (powers of two at ``t = 3`` split into
  exponents from {4, 5, 6, 7}).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Mapping

from .compose import assemble_pgms, compose_outer, product
from .core import Square, verify_multimagic
from .errors import MissingSeed, UnsupportedDegree, VerificationFailed
from .kotzig import kotzig_exists
from .latin import build_diagonal_ls, diagonal_ls_exists, odls_pair_constructible
from .scms import build_scms_complement, build_scms_kotzig

# Orders for which the literature guarantees a trimagic square; they can be ingested.
KNOWN_TRIMAGIC_ORDERS = (12, 16, 24, 32, 40, 64, 128)


class Omega(str, enum.Enum):
    ONE = "omega1"
    TWO = "omega2"
    THREE = "omega3"
    FOUR = "omega4"


def _in_omega2(n: int) -> bool:
    for a in range(4, int(n**0.5) + 1):
        if n % a == 0:
            b = n // a
            if a % 2 == b % 2 and a != 6 and b != 6:
                return True
    return False


def _in_omega4(n: int) -> bool:
    if n <= 64:
        return False
    for m in range(10, 65, 4):
        if n % m == 0:
            q = n // m
            if q >= 5 and q % 2 == 1:
                return True
    return False


def omega_membership(n: int) -> frozenset[Omega]:
    """Which of the four order families contain ``n``.

    ``omega1`` is 8..64; ``omega2`` holds products of two factors ``>= 4`` of
    equal parity, neither equal to 6; ``omega3`` holds multiples of 4; and
    ``omega4`` holds ``m*q > 64`` with ``8 <= m <= 64``, ``m = 2 mod 4`` and ``q >= 5`` odd.
    """
    if n < 1:
        raise ValueError("order must be positive")
    out = set()
    if 8 <= n <= 64:
        out.add(Omega.ONE)
    if _in_omega2(n):
        out.add(Omega.TWO)
    if n % 4 == 0:
        out.add(Omega.THREE)
    if _in_omega4(n):
        out.add(Omega.FOUR)
    return frozenset(out)


def decompose_exponent(m: int) -> tuple[int, ...]:
    """Write ``m >= 8`` as a sum of parts from {4, 5, 6, 7}.

    Uses the fewest parts; among those, the lexicographically largest
    descending tuple.
    """
    if m < 8:
        raise ValueError("exponent must be >= 8")
    k = -(-m // 7)
    while not 4 * k <= m <= 7 * k:
        k += 1
    parts = []
    left = m
    for slots in range(k, 0, -1):
        for p in (7, 6, 5, 4):
            rest = left - p
            if 4 * (slots - 1) <= rest <= 7 * (slots - 1):
                parts.append(p)
                left = rest
                break
    return tuple(parts)


# --- recipes -----------------------------------------------------------------


class Recipe:
    """Base for recipe nodes; ``target`` is ``(order, degree)``."""

    order: int
    degree: int

    @property
    def target(self) -> tuple[int, int]:
        return self.order, self.degree

    def explain(self, indent: int = 0) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class CatalogSeed(Recipe):
    id: str
    order: int
    degree: int

    def explain(self, indent: int = 0) -> str:
        return " " * indent + f"MS({self.order},{self.degree}): catalog seed {self.id!r}"


@dataclass(frozen=True)
class ScmsCompose(Recipe):
    outer: Recipe
    inner_order: int
    source: str  # "kotzig" or "complement"
    inner: Recipe | None = None  # the MS(n, t-1) for complement families

    @property
    def order(self) -> int:
        return self.outer.order * self.inner_order

    @property
    def degree(self) -> int:
        return self.outer.degree

    def explain(self, indent: int = 0) -> str:
        m, n = self.outer.order, self.inner_order
        pad = " " * indent
        if self.source == "kotzig":
            how = f"{m}-SCMS({n}) from KA({m},{n}) and an orthogonal diagonal pair of order {n}"
        else:
            how = f"{m}-SCMS({n},{self.degree - 1}) from {m // 2} complement pairs"
        lines = [pad + f"MS({self.order},{self.degree}): outer MS({m},{self.degree}) with {how}", self.outer.explain(indent + 2)]
        if self.inner is not None:
            lines.append(self.inner.explain(indent + 2))
        return "\n".join(lines)


@dataclass(frozen=True)
class Product(Recipe):
    left: Recipe
    right: Recipe

    @property
    def order(self) -> int:
        return self.left.order * self.right.order

    @property
    def degree(self) -> int:
        return min(self.left.degree, self.right.degree)

    def explain(self, indent: int = 0) -> str:
        pad = " " * indent
        return "\n".join(
            [
                pad + f"MS({self.order},{self.degree}): product of orders {self.left.order} and {self.right.order}",
                self.left.explain(indent + 2),
                self.right.explain(indent + 2),
            ]
        )


class Status(str, enum.Enum):
    PLANNABLE = "plannable"
    NEEDS_INGESTION = "needs_ingestion"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class FeasibilityVerdict:
    target: tuple[int, int]
    status: Status
    recipe: Recipe | None = None
    missing: tuple[tuple[int, int], ...] = ()
    omegas: frozenset = frozenset()
    notes: tuple[str, ...] = field(default=())

    def explain(self) -> str:
        n, t = self.target
        lines = [f"MS({n},{t}): {self.status.value}"]
        if self.recipe is not None:
            lines.append(self.recipe.explain(2))
        if self.missing:
            lines.append("  would be unlocked by ingesting: " + ", ".join(f"MS({o},{d})" for o, d in self.missing))
        if self.omegas:
            lines.append("  order families: " + ", ".join(sorted(o.value for o in self.omegas)))
        lines.extend("  note: " + s for s in self.notes)
        return "\n".join(lines)


# --- planning ----------------------------------------------------------------


def _inventory(catalog) -> dict[int, tuple[str, int]]:
    """Best seed per order: ``order -> (id, degree)``; ties go to the smaller id."""
    best: dict[int, tuple[str, int]] = {}
    for e in _entries(catalog):
        if getattr(e, "kind", "square") != "square" or e.verified_degree < 2:
            continue
        cur = best.get(e.order)
        if cur is None or (e.verified_degree, _neg(e.id)) > (cur[1], _neg(cur[0])):
            best[e.order] = (e.id, e.verified_degree)
    return best


def _neg(s: str):
    return tuple(-ord(c) for c in s)


def _entries(catalog):
    if catalog is None:
        from .catalog import default_catalog

        catalog = default_catalog()
    if isinstance(catalog, Mapping):
        return list(catalog.values())
    entries = getattr(catalog, "entries", None)
    if callable(entries):
        return list(entries())
    return list(catalog)


def _divisors(n: int) -> list[int]:
    return [d for d in range(2, n) if n % d == 0]


class _Planner:
    def __init__(self, seeds: dict[int, tuple[str, int]]):
        self.seeds = seeds
        self.memo: dict[tuple[int, int], Recipe | None] = {}

    def plan(self, n: int, t: int) -> Recipe | None:
        key = (n, t)
        if key in self.memo:
            return self.memo[key]
        self.memo[key] = None  # recursion guard
        result = self._plan(n, t)
        self.memo[key] = result
        return result

    def _plan(self, n: int, t: int) -> Recipe | None:
        seed = self.seeds.get(n)
        if seed is not None and seed[1] >= t:
            return CatalogSeed(seed[0], n, t)
        for m in _divisors(n):
            q = n // m
            if not diagonal_ls_exists(m) or m < 4:
                continue
            if t == 2:
                if not (kotzig_exists(m, q) and odls_pair_constructible(q)):
                    continue
                outer = self.plan(m, 2)
                if outer is not None:
                    return ScmsCompose(outer, q, "kotzig")
            else:
                if m % 2 or q < 4:
                    continue
                outer = self.plan(m, t)
                if outer is None:
                    continue
                inner = self.plan(q, t - 1)
                if inner is not None:
                    return ScmsCompose(outer, q, "complement", inner)
        if t == 3 and n & (n - 1) == 0 and n.bit_length() - 1 >= 8:
            parts = decompose_exponent(n.bit_length() - 1)
            factors = [self.plan(2**p, 3) for p in parts]
            if all(f is not None for f in factors):
                acc = factors[0]
                for f in factors[1:]:
                    acc = Product(acc, f)
                return acc
        for m in _divisors(n):
            if m * m > n:
                break
            left = self.plan(m, t)
            if left is None:
                continue
            right = self.plan(n // m, t)
            if right is not None:
                return Product(left, right)
        return None


def _candidate_seeds(n: int, t: int) -> list[tuple[int, int]]:
    """Seed orders whose existence the literature guarantees and which divide ``n``."""
    orders = _divisors(n) + [n]
    out = []
    for d in orders:
        # no bimagic square of order below 8 exists, even where the order families admit one
        if d >= 8 and omega_membership(d) & {Omega.ONE, Omega.TWO, Omega.THREE}:
            out.append((d, 2))
        if t >= 3 and d in KNOWN_TRIMAGIC_ORDERS:
            out.append((d, 3))
    return out


def plan(n: int, t: int, catalog=None) -> FeasibilityVerdict:
    """Decide how to build an MS(n, t) from the seeds in ``catalog``.

    Raises:
        UnsupportedDegree: for ``t`` outside {2, 3}.
    """
    if t not in (2, 3):
        raise UnsupportedDegree(f"planning supports degrees 2 and 3, not {t}")
    if n < 1:
        raise ValueError("order must be positive")
    seeds = _inventory(catalog)
    omegas = omega_membership(n)
    notes = []
    if t == 2 and Omega.FOUR in omegas and n % 4 == 2:
        notes.append("order is 2 mod 4, outside the families covered by earlier bimagic constructions")
    recipe = _Planner(seeds).plan(n, t)
    if recipe is not None:
        return FeasibilityVerdict((n, t), Status.PLANNABLE, recipe, omegas=omegas, notes=tuple(notes))
    missing = []
    for order, degree in _candidate_seeds(n, t):
        if order in seeds and seeds[order][1] >= degree:
            continue
        trial = dict(seeds)
        trial[order] = ("<ingested>", degree)
        if _Planner(trial).plan(n, t) is not None:
            missing.append((order, degree))
    if missing:
        return FeasibilityVerdict((n, t), Status.NEEDS_INGESTION, None, tuple(missing), omegas, tuple(notes))
    return FeasibilityVerdict((n, t), Status.UNSUPPORTED, None, (), omegas, tuple(notes))


def _lookup(catalog, seed_id: str) -> Square:
    for e in _entries(catalog):
        if e.id == seed_id and getattr(e, "kind", "square") == "square":
            return e.square
    raise MissingSeed(f"catalog has no seed {seed_id!r}")


def execute(recipe: Recipe, catalog=None, *, verify: bool = True) -> Square:
    """Build the square a recipe describes and verify it as an MS(order, degree).

    Raises:
        MissingSeed: if a catalog seed is absent.
        VerificationFailed: if the result does not verify (never expected).
    """
    cache: dict[tuple, Square] = {}
    out = _run(recipe, catalog, cache)
    if verify:
        report = verify_multimagic(out, recipe.degree, True)
        if not report.overall:
            raise VerificationFailed(f"recipe output failed: {report.summary()}", report)
    return out.with_degree(recipe.degree)


def _run(recipe: Recipe, catalog, cache) -> Square:
    key = (type(recipe).__name__, recipe.target, id(recipe))
    if key in cache:
        return cache[key]
    if isinstance(recipe, CatalogSeed):
        out = _lookup(catalog, recipe.id).with_degree(recipe.degree)
    elif isinstance(recipe, ScmsCompose):
        outer = _run(recipe.outer, catalog, cache)
        m, n, t = recipe.outer.order, recipe.inner_order, recipe.degree
        if recipe.source == "kotzig":
            family = build_scms_kotzig(m, n)
        else:
            inner = _run(recipe.inner, catalog, cache)
            family = build_scms_complement(inner, t - 1, m // 2)
        pgms = assemble_pgms(family, build_diagonal_ls(m), check=False)
        out = compose_outer(outer, pgms, check=False)
    elif isinstance(recipe, Product):
        out = product(_run(recipe.left, catalog, cache), _run(recipe.right, catalog, cache), recipe.degree, check=False)
    else:
        raise TypeError(f"unknown recipe node {recipe!r}")
    cache[key] = out
    return out


def enumerate_parts(m: int) -> list[tuple[int, ...]]:
    """All descending tuples over {4,5,6,7} summing to ``m`` (brute force; for checks)."""
    out = []
    for k in range(1, m // 4 + 1):
        for combo in combinations_with_replacement((7, 6, 5, 4), k):
            if sum(combo) == m:
                out.append(combo)
    return out
