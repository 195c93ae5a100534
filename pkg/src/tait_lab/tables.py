"""Knot table ingestion: JSONL rows of named PD codes with metadata."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .diagram import Diagram, DiagramError

__all__ = ["TableEntry", "IngestError", "ingest", "ingest_lines", "bundled_table_path"]


class IngestError(ValueError):
    """The table file as a whole is unusable (missing, empty, unreadable)."""


@dataclass(frozen=True)
class TableEntry:
    """One table row: a named diagram plus trusted source metadata.

    The amphicheiral flag is metadata from the table source and is never
    inferred: a symmetric Jones polynomial is necessary, not sufficient.
    """

    name: str
    diagram: Diagram
    alternating: bool | None = None
    crossing_number: int | None = None
    amphicheiral: bool | None = None


def _parse_row(obj: dict) -> TableEntry:
    if not isinstance(obj, dict):
        raise ValueError("row is not a JSON object")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("row has no name")
    pd = obj.get("pd")
    if not isinstance(pd, list):
        raise ValueError(f"{name}: pd must be a list of 4-tuples")
    diagram = Diagram(tuple(tuple(rec) for rec in pd))
    return TableEntry(
        name=name,
        diagram=diagram,
        alternating=obj.get("alternating"),
        crossing_number=obj.get("crossing_number"),
        amphicheiral=obj.get("amphicheiral"),
    )


def ingest_lines(lines: Iterable[str]) -> tuple[list[TableEntry], list[tuple[int, str]]]:
    """Parse JSONL rows; invalid lines are collected, valid ones kept."""
    entries: list[TableEntry] = []
    errors: list[tuple[int, str]] = []
    names: set[str] = set()
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
            entry = _parse_row(obj)
            if entry.name in names:
                raise ValueError(f"duplicate name {entry.name!r}")
            names.add(entry.name)
            entries.append(entry)
        except (ValueError, DiagramError, TypeError) as exc:
            errors.append((lineno, str(exc)))
    return entries, errors


def ingest(path: str | Path) -> tuple[list[TableEntry], list[tuple[int, str]]]:
    """Read a JSONL table file.

    Raises IngestError if the file is unreadable or yields no entries at
    all; per-line problems are returned alongside the valid entries.
    """
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise IngestError(f"cannot read table {p}: {exc}") from exc
    entries, errors = ingest_lines(text.splitlines())
    if not entries:
        raise IngestError(f"table {p} contains no valid entries")
    return entries, errors


def bundled_table_path(name: str) -> Path:
    """Filesystem path of a bundled corpus file (e.g. alternating_upto9.jsonl)."""
    ref = resources.files("tait_lab").joinpath("data", name)
    with resources.as_file(ref) as p:
        return Path(p)
