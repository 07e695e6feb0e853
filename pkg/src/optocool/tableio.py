"""In-memory result tables and byte-stable CSV/JSON serialization."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import DomainError


@dataclass
class Table:
    """A rectangular result set: named columns plus rows of plain values."""

    columns: list[str]
    rows: list[list] = field(default_factory=list)

    def append(self, row: list) -> None:
        if len(row) != len(self.columns):
            raise DomainError(
                f"row width {len(row)} does not match {len(self.columns)} columns"
            )
        self.rows.append(row)

    def column(self, name: str) -> list:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


def format_cell(value) -> str:
    """Canonical CSV cell text: floats at 12 significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.12g}"
    return str(value)


def _json_cell(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def emit_table(table: Table, fmt: str = "csv", meta: dict | None = None) -> bytes:
    """Serialize a table to bytes.

    CSV: header row, '.' decimal point, 12 significant digits, Unix
    newlines, no metadata (byte-stable).  JSON: a ``meta`` object (run
    echo, tool version) plus a ``rows`` array of column->value objects;
    NaN cells become null.
    """
    if fmt == "csv":
        lines = [",".join(table.columns)]
        for row in table.rows:
            lines.append(",".join(format_cell(v) for v in row))
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "json":
        doc = {
            "meta": meta or {},
            "rows": [
                {c: _json_cell(v) for c, v in zip(table.columns, row)}
                for row in table.rows
            ],
        }
        return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    raise DomainError(f"unknown output format {fmt!r}; expected csv or json")
