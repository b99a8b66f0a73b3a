"""Cross- and auto-correlation of permutation arrays and family-wide maxima.

``cross_correlation(f, g, u, v)`` counts the dots of f that land on dots of g
after moving f by u columns and v rows, with ordinary (non-modular) shifts.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from sympy import primerange

from ._backend import kernels
from .core import as_permutation
from .errors import IdenticalInputs, NotPrime, OrderMismatch
from .finfield import field_of_order, is_prime, prime_power
from .generators import g2, w1exp

__all__ = [
    "CorrelationSurface",
    "PrimeClassification",
    "cross_correlation",
    "correlation_surface",
    "autocorrelation_range",
    "max_cross",
    "family_max_w1",
    "family_max_g2",
    "classify_prime",
    "g2_origin_probe",
    "safe_prime_minima",
]


@dataclass(frozen=True)
class CorrelationSurface:
    """Nonzero values of Psi over shifts (u, v); absent shifts are 0."""

    n: int
    values: dict

    def __getitem__(self, uv):
        return self.values.get(uv, 0)

    def max(self) -> int:
        return max(self.values.values(), default=0)

    def range(self) -> set[int]:
        # shifts by n or more columns overlap nothing, so 0 is always attained
        return set(self.values.values()) | {0}


def _same_order(f, g):
    if len(f) != len(g):
        raise OrderMismatch(f"orders differ: {len(f)} vs {len(g)}")


def cross_correlation(f: Sequence[int], g: Sequence[int], u: int, v: int) -> int:
    f, g = as_permutation(f), as_permutation(g)
    _same_order(f, g)
    n = len(f)
    return sum(1 for i in range(n) if 0 <= i + u < n and g[i + u] == f[i] + v)


def correlation_surface(f: Sequence[int], g: Sequence[int]) -> CorrelationSurface:
    f, g = as_permutation(f), as_permutation(g)
    _same_order(f, g)
    n = len(f)
    counts = Counter((j - i, g[j] - f[i]) for i in range(n) for j in range(n))
    return CorrelationSurface(n, dict(counts))


def autocorrelation_range(f: Sequence[int]) -> set[int]:
    """Values taken by Psi_{f,f}; a subset of {n, 1, 0} exactly for Costas f."""
    return correlation_surface(f, f).range()


def max_cross(f: Sequence[int], g: Sequence[int]) -> int:
    f, g = as_permutation(f), as_permutation(g)
    _same_order(f, g)
    if f == g:
        raise IdenticalInputs("max_cross needs two distinct arrays")
    return kernels.max_cross(list(f), list(g))


def w1_family_arrays(p: int, include_log: bool = False) -> tuple[list, list]:
    """W1exp arrays for every (alpha, c), labelled by alpha."""
    F = field_of_order(p)
    arrays, labels = [], []
    for a in F.primitive_codes():
        for c in range(p - 1):
            f = w1exp(p, a, c)
            arrays.append(list(f))
            labels.append(a)
            if include_log:
                arrays.append(list(f.inverse()))
                labels.append(a)
    return arrays, labels


def _block_job(args):
    block, rest, labels = args
    best = kernels.family_max(block, labels)
    if rest:
        best = max(best, kernels.family_max(block + rest, [0] * len(block) + [1] * len(rest)))
    return best


def _family_max(arrays: list, labels: list, workers: int = 1) -> int:
    """Max over pairs with different labels, optionally split across processes.

    Arrays are grouped by label and the groups packed into contiguous blocks;
    each job covers pairs inside its block plus pairs between the block and
    everything after it, so every pair is seen exactly once.
    """
    if workers <= 1 or len(arrays) < 2:
        return kernels.family_max(arrays, labels)
    order = sorted(range(len(arrays)), key=lambda i: (labels[i], i))
    arrays = [arrays[i] for i in order]
    labels = [labels[i] for i in order]
    cuts = [0] + [i for i in range(1, len(labels)) if labels[i] != labels[i - 1]] + [len(labels)]
    target = max(1, len(arrays) // (4 * workers))
    bounds = [0]
    for c in cuts[1:]:
        if c - bounds[-1] >= target or c == len(labels):
            bounds.append(c)
    jobs = [(arrays[a:b], arrays[b:], labels[a:b]) for a, b in zip(bounds, bounds[1:])]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return max(pool.map(_block_job, jobs))


def family_max_w1(p: int, include_log: bool = False, workers: int = 1) -> int:
    """Max cross-correlation between W1exp arrays built from different primitive roots.

    All shifts c are included for each root.  ``include_log`` adds the
    logarithmic arrays under the root that generated them.
    """
    if not is_prime(p) or p < 5:
        raise NotPrime(f"need a prime p >= 5, got {p}")
    arrays, labels = w1_family_arrays(p, include_log)
    return _family_max(arrays, labels, workers)


def family_max_g2(q: int, workers: int = 1) -> int:
    """Max cross-correlation between distinct G2 arrays of GF(q)."""
    if prime_power(q) is None or q < 7:
        raise NotPrime(f"need a prime power q >= 7, got {q}")
    F = field_of_order(q)
    prims = F.primitive_codes()
    arrays = sorted({g2(q, a, b) for a in prims for b in prims})
    return _family_max([list(f) for f in arrays], list(range(len(arrays))), workers)


@dataclass(frozen=True)
class PrimeClassification:
    p: int
    kind: str  # "safe", "nineteen" or "non-safe"
    t: int
    predicted: int | None

    def as_dict(self) -> dict:
        return {"p": self.p, "kind": self.kind, "t": self.t, "predicted": self.predicted}


def _smallest_t(p: int) -> int:
    for t in primerange(2, p):
        if (p - 1) % (2 * t) == 0:
            return int(t)
    raise ValueError(f"no prime t with {p} = 1 mod 2t")


def classify_prime(p: int) -> PrimeClassification:
    """Place p in one of the three groups of the W1/G2 cross-correlation conjecture.

    ``t`` is the smallest prime with p = 1 mod 2t and ``predicted`` the
    conjectured Psi_W1(p) = (p-1)/t.  Safe primes get no prediction: only their
    local-minimum behaviour is conjectured.
    """
    if not is_prime(p) or p < 5:
        raise NotPrime(f"need a prime p >= 5, got {p}")
    t = _smallest_t(p)
    if is_prime((p - 1) // 2):
        return PrimeClassification(p, "safe", t, None)
    if p == 19:
        return PrimeClassification(p, "nineteen", t, (p - 1) // t)
    return PrimeClassification(p, "non-safe", t, (p - 1) // t)


def _conjectured_r(q: int) -> int | None:
    """r = lambda (q-1)/w + 1 with lambda in {1, 2}, gcd(r, q-1) = 1, w minimal."""
    n = q - 1
    for w in range(2, n + 1):
        if n % w:
            continue
        for lam in (1, 2):
            r = (lam * n // w + 1) % n
            if r not in (0, 1) and gcd(r, n) == 1:
                return r
    return None


def g2_origin_probe(q: int) -> dict:
    """Psi at shift (0, 0) between G2(alpha, beta) and G2(alpha^r, beta).

    Reports the maximum over all r coprime to q-1 (r != 1) and over all
    generator pairs, together with the value at the r singled out by the
    conjecture's selection rule.
    """
    F = field_of_order(q)
    prims = F.primitive_codes()
    n = q - 1
    chosen = _conjectured_r(q)
    best = 0
    at_chosen = 0
    for r in range(2, n):
        if gcd(r, n) != 1:
            continue
        val = 0
        for a in prims:
            ar = F.pow(a, r)
            for b in prims:
                f1, f2 = g2(q, a, b), g2(q, ar, b)
                val = max(val, sum(1 for x, y in zip(f1, f2) if x == y))
        best = max(best, val)
        if r == chosen:
            at_chosen = val
    return {"q": q, "max_origin": best, "r": chosen, "origin_at_r": at_chosen}


def safe_prime_minima(primes: Sequence[int], workers: int = 1) -> dict[int, int]:
    """Measured Psi_W1 at the safe primes in ``primes`` (no formula is asserted)."""
    return {p: family_max_w1(p, workers=workers) for p in primes if classify_prime(p).kind == "safe"}
