"""Catalog of verified seed squares and construction ingredients.

Embedded entries are published matrices. Every load re-verifies them, so a
transcription error surfaces as :class:`CatalogCorrupt` instead of as a
silently wrong construction. Further squares can be ingested from files
into a catalog directory, which defaults to ``~/.multimagic/catalog`` and
can be overridden with the ``MULTIMAGIC_CATALOG`` environment variable.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from . import _published as published
from .compose import verify_pgms
from .core import Square, verify_multimagic
from .errors import CatalogCorrupt, MultimagicError, NotFound, VerificationFailed
from .formats import read_square, serialize_square
from .kotzig import KotzigArray, verify_kotzig
from .latin import check_latin_properties

ENV_VAR = "MULTIMAGIC_CATALOG"

SQUARE = "square"
LATIN = "diagonal-latin"
KOTZIG = "kotzig"
PGMS = "partitioned"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    square: Square
    order: int
    verified_degree: int
    provenance: str
    kind: str = SQUARE

    def __post_init__(self):
        if self.square.order != self.order and self.kind != KOTZIG:
            raise ValueError("order disagrees with the square")


def _grid(block: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in line.split()) for line in block.strip().splitlines())


# (id, data, degree, kind, provenance); degree 0 marks ingredient grids.
_EMBEDDED = (
    ("pfeffermann-8", published.PFEFFERMANN_8, 2, SQUARE, "Pfeffermann (1891) bimagic square of order 8, minus 1"),
    ("ex1-b0", published.EX1_B0, 1, SQUARE, "published 2-SCMS(4), first member"),
    ("ex1-b1", published.EX1_B1, 1, SQUARE, "published 2-SCMS(4), second member"),
    ("ex2-c-32", published.EX2_C_32, 2, SQUARE, "published bimagic square of order 32 composed from pfeffermann-8 and ex2-pgms-32"),
    ("ex4-c0", published.EX4_C0, 1, SQUARE, "published 3-SCMS(5), member 0"),
    ("ex4-c1", published.EX4_C1, 1, SQUARE, "published 3-SCMS(5), member 1"),
    ("ex4-c2", published.EX4_C2, 1, SQUARE, "published 3-SCMS(5), member 2"),
    ("ex2-d", published.EX2_D, 0, LATIN, "published diagonal Latin square of order 8 (block layout for ex2-pgms-32)"),
    ("ex4-a", published.EX4_A, 0, LATIN, "published diagonal Latin square of order 5, orthogonal to ex4-b"),
    ("ex4-b", published.EX4_B, 0, LATIN, "published diagonal Latin square of order 5, orthogonal to ex4-a"),
    ("ex4-k", published.EX4_K, 0, KOTZIG, "published Kotzig array KA(3,5)"),
    ("ex2-pgms-32", published.EX2_PGMS_32, 2, PGMS, "published partitioned bimagic grid of order 32 (8 x 8 blocks of order 4)"),
)

_PGMS_SHAPE = {"ex2-pgms-32": (8, 4)}


def _check(entry_id: str, cells, degree: int, kind: str) -> bool:
    if kind == SQUARE:
        return verify_multimagic(Square(cells), degree, True).overall
    if kind == LATIN:
        return check_latin_properties(cells).diagonal
    if kind == KOTZIG:
        return verify_kotzig(cells)
    if kind == PGMS:
        m, n = _PGMS_SHAPE[entry_id]
        return verify_pgms(cells, m, n, degree).ok
    raise ValueError(f"unknown kind {kind!r}")


def _embedded() -> tuple:
    out = []
    for entry_id, block, degree, kind, prov in _EMBEDDED:
        cells = _grid(block)
        if not _check(entry_id, cells, degree, kind):
            raise CatalogCorrupt(f"embedded entry {entry_id!r} failed verification")
        if kind == KOTZIG:
            out.append(KotzigEntry(entry_id, KotzigArray(cells), prov))
            continue
        sq = Square(cells, degree if kind == SQUARE else None)
        out.append(CatalogEntry(entry_id, sq, len(cells), degree, prov, kind))
    return tuple(out)


@dataclass(frozen=True)
class KotzigEntry:
    """Catalog record for a Kotzig array, which is rectangular and so not a :class:`Square`."""

    id: str
    array: KotzigArray
    provenance: str
    kind: str = KOTZIG
    verified_degree: int = 0

    @property
    def order(self) -> int:
        """Number of columns, i.e. the order of the squares the array relabels."""
        return self.array.cols

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.array.cells


def catalog_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".multimagic" / "catalog"


_ID_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")


def _user_entries(directory: Path) -> list[CatalogEntry]:
    if not directory.is_dir():
        return []
    out = []
    for path in sorted(directory.iterdir()):
        if path.suffix.lower() not in (".txt", ".json") or not path.is_file():
            continue
        try:
            sq, t = read_square(path)
        except MultimagicError as exc:
            raise CatalogCorrupt(f"catalog file {path} does not parse: {exc}") from None
        if t < 1 or not verify_multimagic(sq, t, True).overall:
            raise CatalogCorrupt(f"catalog file {path} no longer verifies at degree {t}")
        out.append(CatalogEntry(path.stem, sq.with_degree(t), sq.order, t, str(path)))
    return out


class Catalog:
    """An ordered, read-only view of embedded and ingested entries."""

    def __init__(self, entries):
        self._entries = tuple(entries)
        self._by_id = {}
        for e in self._entries:
            if e.id in self._by_id:
                raise CatalogCorrupt(f"duplicate catalog id {e.id!r}")
            self._by_id[e.id] = e

    def entries(self) -> tuple:
        return self._entries

    def seeds(self) -> list[CatalogEntry]:
        """Square entries usable as planner seeds."""
        return [e for e in self._entries if e.kind == SQUARE]

    def __iter__(self) -> Iterator:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, entry_id: str) -> bool:
        return entry_id in self._by_id

    def get(self, entry_id: str):
        try:
            return self._by_id[entry_id]
        except KeyError:
            raise NotFound(f"no catalog entry {entry_id!r}") from None

    __getitem__ = get

    def with_entry(self, entry: CatalogEntry) -> "Catalog":
        return Catalog(self._entries + (entry,))


def catalog_load(directory: str | Path | None = None, *, include_user: bool = True) -> list:
    """All entries, embedded first, each re-verified.

    Raises:
        CatalogCorrupt: if any entry fails verification.
    """
    entries = list(_embedded())
    if include_user:
        entries.extend(_user_entries(Path(directory) if directory is not None else catalog_dir()))
    return entries


def default_catalog(directory: str | Path | None = None, *, include_user: bool = True) -> Catalog:
    return Catalog(catalog_load(directory, include_user=include_user))


def embedded_catalog() -> Catalog:
    return Catalog(_embedded())


def lookup(entry_id: str, catalog: Catalog | None = None):
    """Entry by id. Raises :class:`NotFound` for unknown ids."""
    return (catalog or default_catalog()).get(entry_id)


def ingest(path: str | Path, claimed_degree: int, *, directory: str | Path | None = None,
           entry_id: str | None = None) -> CatalogEntry:
    """Verify a square file at ``claimed_degree`` and store it in the catalog directory.

    The stored degree is the claimed one, even if the square verifies higher.

    Raises:
        VerificationFailed: carrying the failing report.
        ValueError: for a bad id, or one that clashes with an existing entry.
    """
    if claimed_degree < 1:
        raise ValueError("claimed degree must be >= 1")
    src = Path(path)
    sq, _ = read_square(src)
    report = verify_multimagic(sq, claimed_degree, True)
    if not report.overall:
        raise VerificationFailed(f"{src} is not an MS({sq.order},{claimed_degree}): {report.summary()}", report)
    target = Path(directory) if directory is not None else catalog_dir()
    new_id = entry_id or src.stem
    if not _ID_RE.match(new_id):
        raise ValueError(f"invalid catalog id {new_id!r}")
    existing = {e.id for e in catalog_load(target)}
    if new_id in existing:
        raise ValueError(f"catalog already has an entry {new_id!r}")
    target.mkdir(parents=True, exist_ok=True)
    dest = target / f"{new_id}.txt"
    tmp = dest.with_suffix(".tmp")
    tmp.write_bytes(serialize_square(sq, claimed_degree))
    os.replace(tmp, dest)
    return CatalogEntry(new_id, sq.with_degree(claimed_degree), sq.order, claimed_degree, str(dest))
