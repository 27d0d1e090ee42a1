"""Reading and writing the ``.sg`` Cayley-table text format.

Layout::

    # comment lines start with '#'
    5
    zero: 0
    0 0 0 0 0
    0 1 2 0 0
    ...

The size line comes first, the ``zero:`` line is optional, then one row per
element.  Several tables may be concatenated in one stream.
"""
from __future__ import annotations

from pathlib import Path

from .core import Semigroup
from .errors import TableFormatError


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_one(lines, source):
    try:
        lineno, line = next(lines)
    except StopIteration:
        return None
    try:
        n = int(line)
    except ValueError:
        raise TableFormatError(f"{source}:{lineno}: expected the table size, got {line!r}") from None
    if n < 1:
        raise TableFormatError(f"{source}:{lineno}: size must be positive")
    zero = None
    rows = []
    while len(rows) < n:
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise TableFormatError(f"{source}: expected {n} rows, found {len(rows)}") from None
        if line.lower().startswith("zero:"):
            if rows or zero is not None:
                raise TableFormatError(f"{source}:{lineno}: 'zero:' must precede the rows")
            try:
                zero = int(line.split(":", 1)[1])
            except ValueError:
                raise TableFormatError(f"{source}:{lineno}: bad zero declaration {line!r}") from None
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise TableFormatError(f"{source}:{lineno}: non-integer entry in {line!r}") from None
        if len(row) != n:
            raise TableFormatError(f"{source}:{lineno}: row has {len(row)} entries, expected {n}")
        rows.append(row)
    return Semigroup(rows, zero)


def loads(text: str, source: str = "<string>") -> Semigroup:
    lines = _data_lines(text)
    S = _parse_one(lines, source)
    if S is None:
        raise TableFormatError(f"{source}: no table found")
    extra = next(lines, None)
    if extra is not None:
        raise TableFormatError(f"{source}:{extra[0]}: unexpected data after the table")
    return S


def loads_all(text: str, source: str = "<string>") -> list[Semigroup]:
    lines = _data_lines(text)
    out = []
    while True:
        S = _parse_one(lines, source)
        if S is None:
            return out
        out.append(S)


def dumps(S: Semigroup, comment: str | None = None) -> str:
    parts = []
    if comment:
        parts.extend(f"# {line}" for line in comment.splitlines())
    parts.append(str(S.n))
    if S.zero is not None:
        parts.append(f"zero: {S.zero}")
    parts.extend(" ".join(map(str, row)) for row in S.table)
    return "\n".join(parts) + "\n"


def read_sg(path) -> Semigroup:
    p = Path(path)
    return loads(p.read_text(), str(p))


def write_sg(S: Semigroup, path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(S, comment))
