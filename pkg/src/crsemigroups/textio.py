"""Cayley-table text format.

One table per section, sections separated by blank lines:

    n
    <n rows of n whitespace-separated integers in [0, n)>
    labels: a b c ...        (optional)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class ParsedTable:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None
    line: int  # 1-based line of the section header


def parse_cayley_text(text: str) -> tuple[list[ParsedTable], list[ParseError]]:
    """Parse every section; syntax errors are collected, not raised."""
    entries: list[ParsedTable] = []
    errors: list[ParseError] = []
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        start = i
        try:
            n = int(lines[i].strip())
            if n <= 0:
                raise ValueError
        except ValueError:
            errors.append(ParseError(start + 1, f"expected a positive order, got {lines[i]!r}"))
            while i < len(lines) and lines[i].strip():
                i += 1
            continue
        i += 1
        rows = []
        bad = False
        for r in range(n):
            if i >= len(lines) or not lines[i].strip():
                errors.append(ParseError(start + 1, f"table needs {n} rows, found {r}"))
                bad = True
                break
            parts = lines[i].split()
            try:
                row = tuple(int(p) for p in parts)
            except ValueError:
                errors.append(ParseError(i + 1, f"non-integer entry in {lines[i]!r}"))
                bad = True
                break
            if len(row) != n:
                errors.append(ParseError(i + 1, f"expected {n} entries, got {len(row)}"))
                bad = True
                break
            rows.append(row)
            i += 1
        if bad:
            while i < len(lines) and lines[i].strip():
                i += 1
            continue
        labels = None
        if i < len(lines) and lines[i].strip().startswith("labels:"):
            labels = tuple(lines[i].strip()[len("labels:") :].split())
            if len(labels) != n:
                errors.append(ParseError(i + 1, f"expected {n} labels, got {len(labels)}"))
                i += 1
                while i < len(lines) and lines[i].strip():
                    i += 1
                continue
            i += 1
        if i < len(lines) and lines[i].strip():
            errors.append(ParseError(i + 1, f"unexpected trailing line {lines[i]!r}"))
            while i < len(lines) and lines[i].strip():
                i += 1
            continue
        entries.append(ParsedTable(tuple(rows), labels, start + 1))
    return entries, errors


def format_cayley_table(
    table, labels=None
) -> str:
    """Render one table section (no trailing blank line)."""
    n = len(table)
    out = [str(n)]
    for row in table:
        out.append(" ".join(str(v) for v in row))
    if labels is not None:
        out.append("labels: " + " ".join(labels))
    return "\n".join(out) + "\n"
