"""Invariant cache: a JSON sidecar keyed by canonical PD hashes.

Single-writer, multi-reader: reads happen on load, and saves go through
an atomic rename, so concurrent readers never observe a torn file.
Cached values must always equal what a fresh computation would produce;
the acceptance suite compares cached and uncached runs byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .diagram import Diagram

__all__ = ["InvariantCache", "diagram_key", "ENV_VAR"]

ENV_VAR = "TAIT_LAB_CACHE"


def diagram_key(diagram: Diagram) -> str:
    """Stable key: SHA-256 of the canonical PD text."""
    return hashlib.sha256(diagram.canonical().render().encode()).hexdigest()


class InvariantCache:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._data: dict[str, dict] = {}
        self._dirty = False
        if self.path.exists():
            try:
                loaded = json.loads(self.path.read_text())
                if isinstance(loaded, dict):
                    self._data = loaded
            except (OSError, json.JSONDecodeError):
                self._data = {}

    def get(self, key: str) -> dict | None:
        return self._data.get(key)

    def put(self, key: str, value: dict) -> None:
        if self._data.get(key) != value:
            self._data[key] = value
            self._dirty = True

    def save(self) -> None:
        if not self._dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=str(self.path.parent), prefix=".tait-cache-")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(self._data, fh, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
        self._dirty = False
