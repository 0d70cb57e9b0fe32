"""Plain-text algebra files.

::

    # comment
    order: 4
    zero: 0
    dot:
    0 1 2 3
    ...
    star:        (optional)
    0 0 0 0
    ...

Blank lines and ``#`` comment lines are ignored, as is trailing whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import CayleyTable, MAX_ORDER


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class AlgebraFile:
    order: int
    zero: int
    dot: CayleyTable
    star: CayleyTable | None = None


def _int(text: str, lineno: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}", lineno) from None


def parse_algebra_file(text: str) -> AlgebraFile:
    header: dict[str, int] = {}
    tables: dict[str, list[list[int]]] = {}
    section: str | None = None
    last_line = 0

    def close(lineno: int):
        if section is not None and len(tables[section]) != header["order"]:
            raise ParseError(
                f"section {section!r} has {len(tables[section])} rows, expected {header['order']}",
                lineno,
            )

    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.rstrip()
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ":" in stripped:
            key, _, value = stripped.partition(":")
            key, value = key.strip(), value.strip()
            if key in ("order", "zero"):
                if section is not None:
                    raise ParseError(f"header {key!r} after a table section", lineno)
                if key in header:
                    raise ParseError(f"duplicate header {key!r}", lineno)
                header[key] = _int(value, lineno, key)
                continue
            if key in ("dot", "star") and not value:
                if "order" not in header:
                    raise ParseError("missing 'order:' header before tables", lineno)
                if key in tables:
                    raise ParseError(f"duplicate section {key!r}", lineno)
                close(lineno)
                section = key
                tables[key] = []
                continue
            raise ParseError(f"unrecognised line {stripped!r}", lineno)
        if section is None:
            raise ParseError(f"row outside a table section: {stripped!r}", lineno)
        n = header["order"]
        if len(tables[section]) == n:
            raise ParseError(f"too many rows in section {section!r}", lineno)
        fields = stripped.split()
        if len(fields) != n:
            raise ParseError(f"expected {n} entries per row, got {len(fields)}", lineno)
        row = [_int(f, lineno, "entry") for f in fields]
        for e in row:
            if not 0 <= e < n:
                raise ParseError(f"entry {e} out of range", lineno)
        tables[section].append(row)

    if "order" not in header:
        raise ParseError("missing 'order:' header")
    n = header["order"]
    if not 1 <= n <= MAX_ORDER:
        raise ParseError(f"order must be in 1..{MAX_ORDER}, got {n}")
    close(last_line)
    if "zero" not in header:
        raise ParseError("missing 'zero:' header")
    zero = header["zero"]
    if not 0 <= zero < n:
        raise ParseError(f"zero {zero} out of range for order {n}")
    if "dot" not in tables:
        raise ParseError("missing 'dot:' section")
    star = CayleyTable.from_rows(tables["star"]) if "star" in tables else None
    return AlgebraFile(n, zero, CayleyTable.from_rows(tables["dot"]), star)


def format_algebra_file(af: AlgebraFile, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines += [f"order: {af.order}", f"zero: {af.zero}", "dot:"]
    lines += [" ".join(map(str, r)) for r in af.dot.rows()]
    if af.star is not None:
        lines.append("star:")
        lines += [" ".join(map(str, r)) for r in af.star.rows()]
    return "\n".join(lines) + "\n"


def read_algebra_file(path: str | Path) -> AlgebraFile:
    return parse_algebra_file(Path(path).read_text())
