"""Reading and writing squares.

The canonical text format is a header line ``n t`` (order and claimed
degree) followed by ``n`` rows of ``n`` whitespace-separated integers.
Anything after ``#`` on a line is a comment; blank lines are ignored.

A JSON document ``{"order": n, "degree": t, "rows": [[...], ...]}`` carries
the same data and is accepted on input when the file name ends in ``.json``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Square, as_square
from .errors import DimensionError, ParseError

JSON_SUFFIXES = (".json",)


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    return data


def _tokens(line: str, lineno: int) -> list[int]:
    out = []
    col = 0
    for word in line.split():
        col = line.index(word, col) + 1
        try:
            out.append(int(word))
        except ValueError:
            raise ParseError(f"expected an integer, found {word!r}", lineno, col) from None
        col += len(word) - 1
    return out


def parse_square(data: bytes | str) -> tuple[Square, int]:
    """Parse the text format into ``(square, claimed_degree)``.

    Raises:
        ParseError: on malformed tokens, a bad header, or missing/extra rows.
        DimensionError: if a row length disagrees with the header.
    """
    lines = []
    for lineno, raw in enumerate(_text(data).splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty input: expected a header line 'n t'", 1)
    lineno, header = lines[0]
    head = _tokens(header, lineno)
    if len(head) != 2:
        raise ParseError(f"header must be 'n t', found {len(head)} value(s)", lineno, 1)
    n, t = head
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", lineno, 1)
    if t < 0:
        raise ParseError(f"degree must be non-negative, got {t}", lineno, len(header) - len(header.lstrip()) + 1)
    body = lines[1:]
    if len(body) < n:
        last = body[-1][0] + 1 if body else lineno + 1
        raise ParseError(f"expected {n} rows, found {len(body)}", last)
    if len(body) > n:
        raise ParseError(f"expected {n} rows, found more", body[n][0], 1)
    rows = []
    for lineno, text in body:
        row = _tokens(text, lineno)
        if len(row) != n:
            raise DimensionError(f"line {lineno}: row has {len(row)} entries, header says {n}")
        rows.append(tuple(row))
    return Square(tuple(rows), t), t


def parse_square_json(data: bytes | str) -> tuple[Square, int]:
    """Parse the JSON format; same errors as :func:`parse_square`."""
    try:
        doc = json.loads(_text(data))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or not {"order", "degree", "rows"} <= doc.keys():
        raise ParseError("JSON square needs the fields order, degree and rows")
    n, t, rows = doc["order"], doc["degree"], doc["rows"]
    if not isinstance(n, int) or not isinstance(t, int) or isinstance(n, bool) or n < 1 or t < 0:
        raise ParseError("order must be a positive integer and degree a non-negative integer")
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"expected {n} rows")
    for k, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"row {k} is not a list")
        if len(row) != n:
            raise DimensionError(f"row {k} has {len(row)} entries, order is {n}")
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise ParseError(f"row {k} contains a non-integer")
    return Square(tuple(tuple(r) for r in rows), t), t


def serialize_square(square, degree: int | None = None) -> bytes:
    """Canonical text bytes. ``degree`` defaults to the square's own claim, else 1."""
    sq = as_square(square)
    t = degree if degree is not None else (sq.degree if sq.degree is not None else 1)
    lines = [f"{sq.order} {t}"]
    lines.extend(" ".join(map(str, row)) for row in sq.cells)
    return ("\n".join(lines) + "\n").encode("ascii")


def serialize_square_json(square, degree: int | None = None) -> bytes:
    sq = as_square(square)
    t = degree if degree is not None else (sq.degree if sq.degree is not None else 1)
    return (json.dumps({"order": sq.order, "degree": t, "rows": sq.tolist()}) + "\n").encode("ascii")


def read_square(path: str | Path) -> tuple[Square, int]:
    """Read a square file, choosing the format from the extension."""
    p = Path(path)
    data = p.read_bytes()
    if p.suffix.lower() in JSON_SUFFIXES:
        return parse_square_json(data)
    return parse_square(data)


def write_square(path: str | Path, square, degree: int | None = None) -> None:
    p = Path(path)
    if p.suffix.lower() in JSON_SUFFIXES:
        p.write_bytes(serialize_square_json(square, degree))
    else:
        p.write_bytes(serialize_square(square, degree))
