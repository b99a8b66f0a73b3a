"""Exhaustive enumeration of Costas arrays by backtracking.

The search fills columns left to right and keeps, for every triangle row k, the
set of differences already present, rejecting a value on the first repeat.  Work
is split by fixing the first two columns; shards are independent and their
results are merged in lexicographic order, so the output does not depend on the
number of workers.
"""
from __future__ import annotations

import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from ._backend import kernels
from .core import Permutation, _trusted
from .errors import InconsistentPrefix, OrderTooLarge

log = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 16
HARD_MAX_ORDER = 18

__all__ = [
    "EnumerationResult",
    "SearchPrefix",
    "enumerate_costas",
    "enumerate_prefix",
    "prefixes",
    "forbidden_positions",
    "count_estimate",
    "DEFAULT_MAX_ORDER",
]


@dataclass(frozen=True)
class SearchPrefix:
    n: int
    fixed: tuple[int, ...] = ()

    def check(self):
        f = self.fixed
        if len(f) > self.n:
            raise InconsistentPrefix("prefix longer than the order")
        if any(not 1 <= v <= self.n for v in f):
            raise InconsistentPrefix(f"prefix values must lie in 1..{self.n}")
        if len(set(f)) != len(f):
            raise InconsistentPrefix("prefix repeats a value")
        for k in range(1, len(f)):
            row = [f[j + k] - f[j] for j in range(len(f) - k)]
            if len(set(row)) != len(row):
                raise InconsistentPrefix(f"prefix already repeats in triangle row {k}")


@dataclass
class EnumerationResult:
    n: int
    total: int
    symmetric: int
    arrays: list[Permutation] | None = None
    elapsed: float = 0.0
    checked_rows: str = "all"
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"n": self.n, "total": self.total, "symmetric": self.symmetric}


def _max_rows(n: int, rows: str) -> int:
    if rows == "all":
        return max(n - 1, 0)
    if rows == "chang":
        return (n - 1) // 2
    raise ValueError("rows must be 'all' or 'chang'")


def enumerate_prefix(prefix: SearchPrefix, rows: str = "all") -> list[Permutation]:
    """All Costas completions of a fixed prefix, in lexicographic order."""
    prefix.check()
    _, _, arrays = kernels.enumerate_costas(prefix.n, list(prefix.fixed), _max_rows(prefix.n, rows), True)
    return [_trusted(a) for a in arrays]


def prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """Consistent prefixes of the given depth, lexicographically ordered."""
    out = [()]
    for _ in range(min(depth, n)):
        nxt = []
        for pre in out:
            for v in range(1, n + 1):
                cand = pre + (v,)
                try:
                    SearchPrefix(n, cand).check()
                except InconsistentPrefix:
                    continue
                nxt.append(cand)
        out = nxt
    return out


def _shard(args):
    n, prefix, max_rows, store = args
    return kernels.enumerate_costas(n, list(prefix), max_rows, store)


def enumerate_costas(
    n: int,
    store: bool = False,
    *,
    workers: int = 1,
    rows: str = "all",
    max_order: int = DEFAULT_MAX_ORDER,
    progress=None,
) -> EnumerationResult:
    """Count every Costas permutation of order n.

    ``symmetric`` counts involutions (arrays equal to their transpose) for
    n > 2.  For n <= 2 every array is an involution and the dihedral classes
    collapse to one, so the count follows the published table and reports 1.
    ``rows='chang'`` prunes only on triangle rows k <= (n-1)//2.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > max_order:
        raise OrderTooLarge(f"n={n} exceeds the configured maximum {max_order}")
    if n > HARD_MAX_ORDER and max_order <= HARD_MAX_ORDER:
        raise OrderTooLarge(f"n={n} needs an explicit max_order override")
    max_rows = _max_rows(n, rows)
    start = time.perf_counter()
    shards = [(n, p, max_rows, store) for p in prefixes(n, 2)]
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_shard, shards))
    else:
        results = []
        for i, shard in enumerate(shards):
            results.append(_shard(shard))
            if progress is not None:
                progress(i + 1, len(shards))
    total = sum(r[0] for r in results)
    symmetric = sum(r[1] for r in results)
    if n <= 2:
        symmetric = 1
    arrays = None
    if store:
        # shards are already in prefix order and each shard is lexicographic
        arrays = [_trusted(a) for r in results for a in r[2]]
    elapsed = time.perf_counter() - start
    log.debug("enumerated n=%d: %d arrays in %.3fs", n, total, elapsed)
    return EnumerationResult(n, total, symmetric, arrays, elapsed, rows)


def forbidden_positions(n: int, *, workers: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> set[tuple[int, int]]:
    """Grid cells (row, col) that no Costas array of order n covers."""
    res = enumerate_costas(n, store=True, workers=workers, max_order=max_order)
    covered = {(v, i) for f in res.arrays for i, v in enumerate(f, 1)}
    return {(r, c) for r in range(1, n + 1) for c in range(1, n + 1)} - covered


def count_estimate(n: int, K: float = 1.0) -> float:
    """sqrt(2 pi) * exp(-K n^2/12 - n + (n + 1/2) ln n)."""
    if n < 1 or K <= 0:
        raise ValueError("need n >= 1 and K > 0")
    return math.sqrt(2 * math.pi) * math.exp(-K * n * n / 12 - n + (n + 0.5) * math.log(n))


def default_workers() -> int:
    return os.cpu_count() or 1
