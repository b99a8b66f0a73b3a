"""Local search towards a Costas permutation.

The metric is the number of repeated entries summed over the rows of the
difference triangle.  Each step applies the best mutation from the chosen
set; ties are broken at random.  With no improving mutation a random swap is
applied as a "kick", and after ``kick_limit`` consecutive kicks the restart
is abandoned.  Every restart owns a seed derived from the master seed, so
restarts can run in any order or in parallel and the lowest successful
restart index always wins.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

from ._backend import kernels
from .core import Permutation, _trusted, as_permutation

__all__ = ["SearchConfig", "SearchResult", "deficiency", "local_search", "MUTATIONS", "hits"]

MUTATIONS = ("pairwise", "triple", "targeted")
TARGET_CLUSTER = 4


def deficiency(f) -> int:
    """Sum over triangle rows of (entries - distinct entries); 0 iff Costas."""
    return kernels.deficiency(list(as_permutation(f)))


def hits(values) -> list[int]:
    """For each position, how many repeated triangle entries it takes part in."""
    n = len(values)
    out = [0] * n
    for k in range(1, n):
        seen: dict[int, list[int]] = {}
        for j in range(n - k):
            seen.setdefault(values[j + k] - values[j], []).append(j)
        for starts in seen.values():
            if len(starts) > 1:
                for j in starts:
                    out[j] += 1
                    out[j + k] += 1
    return out


@dataclass(frozen=True)
class SearchConfig:
    n: int
    mutation: str = "pairwise"
    max_iters: int = 2000
    restarts: int = 20
    seed: int = 0
    kick_limit: int = 3

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be positive")
        if self.mutation not in MUTATIONS:
            raise ValueError(f"mutation must be one of {MUTATIONS}")
        if self.max_iters < 1 or self.restarts < 1 or self.kick_limit < 0:
            raise ValueError("budgets must be positive")

    def restart_seed(self, index: int) -> str:
        # string seeds are hashed with sha512 by random.Random, stable across runs
        return f"costas-search:{self.seed}:{index}"


@dataclass
class SearchResult:
    permutation: Permutation | None
    restart: int | None
    iterations: int
    trace: list[dict] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.permutation is not None

    def trace_lines(self) -> str:
        return "".join(json.dumps(rec, sort_keys=True) + "\n" for rec in self.trace)


def _candidates(values, mutation):
    n = len(values)
    if mutation == "pairwise" or n < 3:
        return [(i, j) for i, j in combinations(range(n), 2)]
    if mutation == "triple":
        out = []
        for i, j, k in combinations(range(n), 3):
            out.append((i, j, k))
            out.append((i, k, j))
        return out
    h = hits(values)
    ranked = sorted(range(n), key=lambda i: (-h[i], i))
    cluster = [i for i in ranked[:TARGET_CLUSTER] if h[i] > 0]
    if len(cluster) < 2:
        return [(i, j) for i, j in combinations(range(n), 2)]
    cluster.sort()
    # each candidate is a target ordering of the cluster positions
    out = []
    for perm in permutations(cluster):
        if all(a != b for a, b in zip(perm, cluster)):
            out.append(("derange", tuple(cluster), perm))
    return out


def _apply(values, move):
    v = list(values)
    if move and move[0] == "derange":
        _, cluster, perm = move
        src = [values[p] for p in perm]
        for pos, val in zip(cluster, src):
            v[pos] = val
        return v
    if len(move) == 2:
        i, j = move
        v[i], v[j] = v[j], v[i]
        return v
    # 3-cycle i -> j -> k -> i
    i, j, k = move
    v[i], v[j], v[k] = values[k], values[i], values[j]
    return v


def _move_label(move):
    if move and move[0] == "derange":
        return {"positions": [p + 1 for p in move[1]], "order": [p + 1 for p in move[2]]}
    return [p + 1 for p in move]


def _run_restart(config: SearchConfig, index: int):
    rng = random.Random(config.restart_seed(index))
    n = config.n
    values = list(range(1, n + 1))
    rng.shuffle(values)
    metric = kernels.deficiency(values)
    trace = [{"restart": index, "iteration": 0, "metric": metric, "mutation": None, "kick": False}]
    kicks = 0
    it = 0
    while metric > 0 and it < config.max_iters:
        it += 1
        scored = [(kernels.deficiency(_apply(values, m)), m) for m in _candidates(values, config.mutation)]
        best = min((s for s, _ in scored), default=metric)
        if best < metric:
            move = rng.choice([m for s, m in scored if s == best])
            kick = False
            kicks = 0
        else:
            if kicks >= config.kick_limit:
                trace.append({"restart": index, "iteration": it, "metric": metric, "mutation": "stall", "kick": False})
                break
            i, j = rng.sample(range(n), 2)
            move = (min(i, j), max(i, j))
            kick = True
            kicks += 1
        values = _apply(values, move)
        metric = kernels.deficiency(values)
        trace.append({"restart": index, "iteration": it, "metric": metric, "mutation": _move_label(move), "kick": kick})
    return (values if metric == 0 else None), it, trace


def _restart_job(args):
    return _run_restart(*args)


def local_search(config: SearchConfig, workers: int = 1) -> SearchResult:
    """Search restarts 0, 1, ... in order; the first index that succeeds wins.

    The returned trace covers restarts up to and including the winner (or all
    of them on failure) and is identical for any ``workers``.
    """
    if config.n == 1:
        return SearchResult(
            _trusted((1,)), 0, 0,
            [{"restart": 0, "iteration": 0, "metric": 0, "mutation": None, "kick": False}],
        )
    trace: list[dict] = []
    total_iters = 0
    indices = range(config.restarts)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = pool.map(_restart_job, ((config, i) for i in indices))
            # consumed in index order, so the earliest success is found first
            for i, (values, its, part) in zip(indices, outcomes):
                trace.extend(part)
                total_iters += its
                if values is not None:
                    return SearchResult(_trusted(values), i, total_iters, trace)
        return SearchResult(None, None, total_iters, trace)
    for i in indices:
        values, its, part = _run_restart(config, i)
        trace.extend(part)
        total_iters += its
        if values is not None:
            return SearchResult(_trusted(values), i, total_iters, trace)
    return SearchResult(None, None, total_iters, trace)
