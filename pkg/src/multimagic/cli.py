"""Command-line interface: ``multimagic <command> ...``.

Exit status: 0 success, 1 verification failed, 2 usage or input error,
3 construction infeasible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog as cat
from .compose import assemble_pgms, compose_outer, product
from .core import Square, normalize, verify_multimagic
from .errors import (
    ConstructionLimit,
    MultimagicError,
    NoSuchObject,
    NotFound,
    ParseError,
    UnsupportedDegree,
    VerificationFailed,
)
from .formats import read_square, serialize_square
from .kotzig import build_kotzig
from .latin import LatinSquare, build_diagonal_ls, build_odls_pair
from .planner import Status, execute, plan
from .scms import ScmsFamily, build_scms_complement, build_scms_kotzig

OK, FAILED, USAGE, INFEASIBLE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 already; keep the message short
        self.print_usage(sys.stderr)
        raise SystemExit(f"{self.prog}: error: {message}") from None


def _out(text: str | bytes) -> None:
    if isinstance(text, bytes):
        sys.stdout.buffer.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    sys.stdout.flush()


def _kotzig_text(rows) -> bytes:
    """Kotzig arrays are rectangular, so they get a comment line instead of the ``n t`` header."""
    lines = [f"# Kotzig array: {len(rows)} rows, {len(rows[0])} columns, column sum {sum(r[0] for r in rows)}"]
    lines.extend(" ".join(map(str, r)) for r in rows)
    return ("\n".join(lines) + "\n").encode("ascii")


def _load(ref: str, catalog) -> Square:
    """A square from a file path or a catalog id."""
    p = Path(ref)
    if p.is_file():
        sq, t = read_square(p)
        return sq.with_degree(t)
    entry = catalog.get(ref)
    return entry.square


def _latin_from(ref: str, m: int) -> LatinSquare:
    if ref.upper() == "AUTO":
        return build_diagonal_ls(m)
    sq, _ = read_square(ref)
    return LatinSquare.from_rows(sq.cells)


# --- commands ----------------------------------------------------------------


def cmd_verify(args, catalog) -> int:
    sq, claimed = read_square(args.file)
    t = args.degree if args.degree is not None else max(claimed, 1)
    report = verify_multimagic(sq, t, not args.general)
    _out(report.summary())
    return OK if report.overall else FAILED


def cmd_gen(args, catalog) -> int:
    what = args.what
    if what == "dls":
        _out(serialize_square(Square(build_diagonal_ls(args.m).cells), 0))
    elif what == "odls":
        a, b = build_odls_pair(args.n)
        _out(serialize_square(Square(a.cells), 0))
        _out(serialize_square(Square(b.cells), 0))
    elif what == "kotzig":
        _out(_kotzig_text(build_kotzig(args.m, args.n).cells))
    elif what == "scms":
        if args.degree in (None, 1) and args.seed is None:
            family = build_scms_kotzig(args.m, args.n)
        else:
            if args.seed is None:
                raise _Usage("--seed is required for complement families (degree >= 2)")
            if args.m % 2:
                raise NoSuchObject(f"complement families have an even number of members, not {args.m}")
            seed = _load(args.seed, catalog)
            t = args.degree if args.degree is not None else (seed.degree or 2)
            if seed.order != args.n:
                raise _Usage(f"seed has order {seed.order}, expected {args.n}")
            family = build_scms_complement(seed, t, args.m // 2)
        for member in family:
            _out(serialize_square(member, family.degree))
    return OK


def _family_from(source: str, catalog) -> ScmsFamily:
    p = Path(source)
    if p.is_dir():
        files = sorted(f for f in p.iterdir() if f.suffix.lower() in (".txt", ".json"))
        loaded = [read_square(f) for f in files]
    else:
        loaded = []
        for ref in source.split(","):
            sq = _load(ref.strip(), catalog)
            loaded.append((sq, sq.degree or 1))
    if len(loaded) < 2:
        raise _Usage("a family needs at least two members")
    degree = min(t for _, t in loaded)
    return ScmsFamily.of([sq for sq, _ in loaded], max(degree, 1))


def cmd_compose(args, catalog) -> int:
    outer = _load(args.outer, catalog)
    family = _family_from(args.family, catalog)
    dls = _latin_from(args.dls, outer.order)
    pgms = assemble_pgms(family, dls)
    _out(serialize_square(compose_outer(outer, pgms), pgms.degree))
    return OK


def cmd_product(args, catalog) -> int:
    a, b = _load(args.a, catalog), _load(args.b, catalog)
    claims = [s.degree for s in (a, b) if s.degree]
    out = product(a, b, min(claims) if claims else 1)
    _out(serialize_square(out))
    return OK


def cmd_plan(args, catalog) -> int:
    verdict = plan(args.n, args.degree, catalog)
    if args.explain:
        _out(verdict.explain())
    if verdict.status is Status.PLANNABLE:
        if not args.explain:
            _out(serialize_square(execute(verdict.recipe, catalog)))
        return OK
    if not args.explain:
        _out(verdict.explain())
    return INFEASIBLE


def cmd_catalog(args, catalog) -> int:
    if args.action == "list":
        for e in catalog:
            _out(f"{e.id}\torder={e.order}\tdegree={e.verified_degree}\tkind={e.kind}\t{e.provenance}")
    elif args.action == "show":
        if args.target is None:
            raise _Usage("catalog show needs an id")
        e = catalog.get(args.target)
        if e.kind == cat.KOTZIG:
            _out(_kotzig_text(e.rows))
        else:
            _out(serialize_square(e.square, e.verified_degree))
    else:
        if args.target is None or args.degree is None:
            raise _Usage("catalog ingest needs FILE and --degree")
        e = cat.ingest(args.target, args.degree)
        _out(f"ingested {e.id} as MS({e.order},{e.verified_degree}) at {e.provenance}")
    return OK


def cmd_normalize(args, catalog) -> int:
    sq, t = read_square(args.file)
    _out(serialize_square(normalize(sq), t))
    return OK


class _Usage(MultimagicError):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="multimagic", description="Construct and verify multimagic squares.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify a square file")
    v.add_argument("file")
    v.add_argument("--degree", type=int)
    v.add_argument("--general", action="store_true", help="do not require entries 0..n^2-1")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="generate a construction ingredient")
    gs = g.add_subparsers(dest="what", required=True, parser_class=_Parser)
    x = gs.add_parser("dls")
    x.add_argument("m", type=int)
    x = gs.add_parser("odls")
    x.add_argument("n", type=int)
    x = gs.add_parser("kotzig")
    x.add_argument("m", type=int)
    x.add_argument("n", type=int)
    x = gs.add_parser("scms")
    x.add_argument("m", type=int)
    x.add_argument("n", type=int)
    x.add_argument("--degree", type=int)
    x.add_argument("--seed", help="catalog id or file of the MS(n, t) seed")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("compose", help="compose an outer square with a family")
    c.add_argument("--outer", required=True, help="catalog id or file")
    c.add_argument("--family", required=True, help="directory of member files, or comma-separated ids")
    c.add_argument("--dls", default="AUTO", help="AUTO or a file holding a diagonal Latin square")
    c.set_defaults(func=cmd_compose)

    pr = sub.add_parser("product", help="product of two squares")
    pr.add_argument("a")
    pr.add_argument("b")
    pr.set_defaults(func=cmd_product)

    pl = sub.add_parser("plan", help="plan and build an MS(N, t)")
    pl.add_argument("n", type=int)
    pl.add_argument("--degree", type=int, required=True)
    pl.add_argument("--explain", action="store_true", help="print the recipe instead of the square")
    pl.set_defaults(func=cmd_plan)

    ca = sub.add_parser("catalog", help="inspect or extend the seed catalog")
    ca.add_argument("action", choices=("list", "show", "ingest"))
    ca.add_argument("target", nargs="?")
    ca.add_argument("--degree", type=int)
    ca.set_defaults(func=cmd_catalog)

    no = sub.add_parser("normalize", help="shift entries so the minimum is 0")
    no.add_argument("file")
    no.set_defaults(func=cmd_normalize)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return USAGE
        return USAGE if exc.code not in (0, None) else OK
    try:
        catalog = cat.default_catalog()
        return args.func(args, catalog)
    except (NoSuchObject, ConstructionLimit) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return INFEASIBLE
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return FAILED
    except (_Usage, ParseError, NotFound, UnsupportedDegree, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except MultimagicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
