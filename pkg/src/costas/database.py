"""On-disk store of arrays: ``root/<n>/arrays.txt`` plus ``root/manifest.json``.

Each line of ``arrays.txt`` is one permutation, space-separated and 1-based.
A leading ``n:`` label, as used by some published lists, is skipped on read.
"""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Iterable

from .core import Permutation, as_permutation

__all__ = ["ArrayDatabase", "parse_array", "format_array"]


def parse_array(text: str) -> Permutation:
    text = text.strip()
    if ":" in text:
        text = text.split(":", 1)[1]
    values = text.replace(",", " ").split()
    return as_permutation([int(v) for v in values])


def format_array(f) -> str:
    return " ".join(map(str, f))


class ArrayDatabase:
    def __init__(self, root):
        self.root = Path(root)

    @property
    def manifest_path(self) -> Path:
        return self.root / "manifest.json"

    def manifest(self) -> dict:
        if not self.manifest_path.exists():
            return {"orders": {}}
        return json.loads(self.manifest_path.read_text())

    def _write_manifest(self, data: dict):
        self.root.mkdir(parents=True, exist_ok=True)
        tmp = self.manifest_path.with_suffix(".tmp")
        tmp.write_text(json.dumps(data, sort_keys=True, indent=2) + "\n")
        os.replace(tmp, self.manifest_path)

    def _file(self, n: int) -> Path:
        return self.root / str(n) / "arrays.txt"

    def orders(self) -> list[int]:
        return sorted(int(k) for k in self.manifest()["orders"])

    def read(self, n: int) -> list[Permutation]:
        path = self._file(n)
        if not path.exists():
            return []
        return [parse_array(line) for line in path.read_text().splitlines() if line.strip()]

    def add(self, n: int, arrays: Iterable, provenance: str) -> int:
        """Merge arrays of order n into the store; returns the new count."""
        new = {as_permutation(a) for a in arrays}
        for f in new:
            if len(f) != n:
                raise ValueError(f"array {format_array(f)} is not of order {n}")
        merged = sorted(set(self.read(n)) | new)
        path = self._file(n)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(format_array(f) + "\n" for f in merged))
        data = self.manifest()
        entry = data["orders"].setdefault(str(n), {"count": 0, "provenance": []})
        entry["count"] = len(merged)
        if provenance not in entry["provenance"]:
            entry["provenance"] = sorted(entry["provenance"] + [provenance])
        self._write_manifest(data)
        return len(merged)

    def check(self) -> list[str]:
        """Problems found: count mismatches or lines that do not parse back."""
        problems = []
        for key, entry in sorted(self.manifest()["orders"].items()):
            n = int(key)
            try:
                arrays = self.read(n)
            except ValueError as exc:
                problems.append(f"order {n}: unreadable line ({exc})")
                continue
            if len(arrays) != entry["count"]:
                problems.append(f"order {n}: manifest says {entry['count']}, file has {len(arrays)}")
            if any(len(f) != n for f in arrays):
                problems.append(f"order {n}: wrong-length line")
        return problems
