"""Named-test catalogs: a small comma-separated table format.

Layout: one exact header line ``name,sensitivity,specificity``, then one
row per test.  Blank lines and lines starting with ``#`` are ignored.
Names are case-sensitive and must be unique; values are decimals in [0, 1].
Documents are UTF-8 text.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .core import ScreeningTest
from .errors import ParseError

__all__ = ["HEADER", "CatalogEntry", "parse_catalog", "emit_catalog"]

HEADER = "name,sensitivity,specificity"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    test: ScreeningTest


def _parse_value(field: str, column: str, line_no: int) -> float:
    try:
        value = float(field)
    except ValueError:
        raise ParseError(f"{column} is not a decimal number: {field!r}", line=line_no) from None
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise ParseError(f"{column} must lie in [0, 1], got {field!r}", line=line_no)
    return value


def parse_catalog(text: str) -> list[CatalogEntry]:
    """Parse a catalog document into entries, preserving file order.

    Raises ParseError, carrying the 1-based line number, for a missing or
    wrong header, a row without exactly three fields, an empty or duplicate
    name, or a value that is not a decimal in [0, 1].
    """
    entries: list[CatalogEntry] = []
    seen: dict[str, int] = {}
    header_seen = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if not header_seen:
            if line != HEADER:
                raise ParseError(
                    f"expected header {HEADER!r}, got {line!r}", line=line_no
                )
            header_seen = True
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise ParseError(
                f"expected 3 comma-separated fields, got {len(fields)}", line=line_no
            )
        name = fields[0].strip()
        if not name:
            raise ParseError("name must not be empty", line=line_no)
        if name in seen:
            raise ParseError(
                f"duplicate name {name!r} (first seen on line {seen[name]})",
                line=line_no,
            )
        sensitivity = _parse_value(fields[1].strip(), "sensitivity", line_no)
        specificity = _parse_value(fields[2].strip(), "specificity", line_no)
        seen[name] = line_no
        entries.append(CatalogEntry(name, ScreeningTest(sensitivity, specificity)))
    if not header_seen:
        raise ParseError(f"missing header line {HEADER!r}", line=1)
    return entries


def emit_catalog(entries: Iterable[CatalogEntry]) -> str:
    """Render entries back to catalog text (12 significant digits per value)."""
    lines = [HEADER]
    for entry in entries:
        lines.append(
            f"{entry.name},{entry.test.sensitivity:.12g},{entry.test.specificity:.12g}"
        )
    return "\n".join(lines) + "\n"
