"""Structural probes on permutations and construction families."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .core import Permutation, _trusted, as_permutation, is_costas
from .errors import GcdViolation, NotPrimitive, OddOrder, OrderMismatch
from .finfield import field_of_order, make_field
from .generators import enumerate_family, methods_at_order

__all__ = [
    "CycleDecomposition",
    "ParityCensus",
    "cycle_structure",
    "fixed_points",
    "count_roots_power",
    "count_roots_exp",
    "parity_census",
    "is_anti_reflective",
    "g2_necessary_property",
    "is_single_periodic",
    "is_circular_costas",
    "welch_shift_stability",
    "golomb_shift_stability",
    "find_twins",
    "find_subpermutations",
    "family_disjointness",
    "has_distinct_vectors",
]


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[tuple[int, ...], ...]
    order: int

    def __str__(self):
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


def cycle_structure(f: Sequence[int]) -> CycleDecomposition:
    """Cycles each starting at their minimum, listed by increasing minimum."""
    f = as_permutation(f)
    seen = set()
    cycles = []
    for start in range(1, len(f) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = f(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = f(x)
        cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles), lcm(*(len(c) for c in cycles)) if cycles else 1)


def fixed_points(f: Sequence[int]) -> set[int]:
    return {i for i, v in enumerate(f, 1) if i == v}


def count_roots_power(q: int, r: int) -> tuple[int, int]:
    """Roots of x^r + x = 1 in GF(q): (all roots, roots other than x = 1).

    With beta = alpha^r the second number is the fixed-point count of G2(alpha, beta).
    """
    if gcd(r, q - 1) != 1:
        raise GcdViolation(f"gcd({r}, {q - 1}) != 1")
    F = field_of_order(q)
    roots = [x for x in range(q) if F.add(F.pow(x, r), x) == 1]
    return len(roots), sum(1 for x in roots if x != 1)


def count_roots_exp(p: int, C: int, alpha: int) -> int:
    """Number of i in [p-1] with i = C * alpha^i (mod p)."""
    F = make_field(p)
    if not F.is_primitive(alpha % p):
        raise NotPrimitive(f"{alpha} is not primitive mod {p}")
    return sum(1 for i in range(1, p) if i % p == C * pow(alpha, i, p) % p)


@dataclass(frozen=True)
class ParityCensus:
    """Dot counts by (row parity, column parity), 1-based; ``eo`` = even row, odd column."""

    ee: int
    eo: int
    oe: int
    oo: int

    def as_tuple(self):
        return (self.ee, self.eo, self.oe, self.oo)


def parity_census(f: Sequence[int]) -> ParityCensus:
    counts = {"ee": 0, "eo": 0, "oe": 0, "oo": 0}
    for col, row in enumerate(f, 1):
        key = ("e" if row % 2 == 0 else "o") + ("e" if col % 2 == 0 else "o")
        counts[key] += 1
    return ParityCensus(**counts)


def is_anti_reflective(f: Sequence[int]) -> bool:
    """f(i) + f(i + n/2) == n + 1 for all i in [n/2]."""
    n = len(f)
    if n % 2:
        raise OddOrder("anti-reflective symmetry needs an even order")
    h = n // 2
    return all(f[i] + f[i + h] == n + 1 for i in range(h))


def g2_necessary_property(f: Sequence[int], q: int) -> bool:
    """f(mu+i) - f(mu-i) = i [f(mu+1) - f(mu-1)] (mod q-1), mu = (q-1)/2.

    Holds for every G2 permutation over a field of odd characteristic.
    """
    if len(f) != q - 2:
        raise OrderMismatch(f"order {len(f)} does not match q - 2 = {q - 2}")
    if q % 2 == 0:
        raise ValueError("the property is stated for odd q")
    mu = (q - 1) // 2
    if mu < 2:
        return True  # order 1: nothing to compare
    F = lambda i: f[i - 1]  # noqa: E731
    step = F(mu + 1) - F(mu - 1)
    return all((F(mu + i) - F(mu - i) - i * step) % (q - 1) == 0 for i in range(mu))


def has_distinct_vectors(dots) -> bool:
    """True iff the ordered differences between distinct dots are all distinct."""
    dots = list(dots)
    seen = set()
    for a, b in combinations(dots, 2):
        d = (a[0] - b[0], a[1] - b[1])
        e = (-d[0], -d[1])
        if d in seen or e in seen:
            return False
        seen.add(d)
        seen.add(e)
    return True


def is_single_periodic(f: Sequence[int]) -> bool:
    """Every cyclic shift of the columns is again a Costas permutation."""
    f = as_permutation(f)
    return all(is_costas(f[s:] + f[:s]) for s in range(len(f)))


def is_circular_costas(f: Sequence[int]) -> bool:
    """Circular Costas test for a bijection on {0, ..., n-1}.

    For each k, the differences f(i+k) - f(i) (index mod n) must be distinct
    modulo n + 1.
    """
    n = len(f)
    if sorted(f) != list(range(n)):
        raise ValueError("expected a bijection on 0..n-1")
    for k in range(1, n):
        diffs = {(f[(i + k) % n] - f[i]) % (n + 1) for i in range(n)}
        if len(diffs) != n:
            return False
    return True


def welch_shift_stability(f: Sequence[int]) -> bool:
    """Add one blank row; every cyclic row shift must keep distinct vectors."""
    n = len(f)
    for s in range(n + 1):
        dots = [((v - 1 + s) % (n + 1), i) for i, v in enumerate(f)]
        if not has_distinct_vectors(dots):
            return False
    return True


def golomb_shift_stability(f: Sequence[int]) -> bool:
    """Add a blank row and column; every cyclic row and column shift keeps distinct vectors."""
    n = len(f)
    for s_row in range(n + 1):
        for s_col in range(n + 1):
            dots = [((v - 1 + s_row) % (n + 1), (i + s_col) % (n + 1)) for i, v in enumerate(f)]
            if not has_distinct_vectors(dots):
                return False
    return True


def find_twins(f: Sequence[int]) -> tuple[Permutation, Permutation] | None:
    """Twin candidates: f moved to the interior, opposite corners filled in.

    g1 = (1, f+1, n+2) and g2 = (n+2, f+1, 1); returned only if both are Costas.
    """
    f = as_permutation(f)
    n = len(f)
    body = [v + 1 for v in f]
    g1 = _trusted([1] + body + [n + 2])
    g2 = _trusted([n + 2] + body + [1])
    if is_costas(g1) and is_costas(g2):
        return g1, g2
    return None


def find_subpermutations(f: Sequence[int], min_length: int = 3):
    """All (a1, b1, a2, b2, l, g) with f mapping {a1 + b1 i} onto {a2 + b2 i}, i in [l].

    Steps are bounded by n/2 and lengths by ``min_length``; g is the rescaled
    sub-permutation g(i) = (f(a1 + b1 i) - a2) / b2.
    """
    f = as_permutation(f)
    n = len(f)
    if min_length < 2:
        raise ValueError("min_length must be >= 2")
    out = set()
    for b1 in range(1, max(n // 2, 1) + 1):
        for a1 in range(0, n):
            for l in range(min_length, n + 1):
                last = a1 + b1 * l
                if a1 + b1 < 1 or last > n:
                    break
                image = sorted(f[a1 + b1 * i - 1] for i in range(1, l + 1))
                b2 = image[1] - image[0]
                if b2 < 1 or b2 > n // 2:
                    continue
                if any(image[i + 1] - image[i] != b2 for i in range(l - 1)):
                    continue
                a2 = image[0] - b2
                g = _trusted((f[a1 + b1 * i - 1] - a2) // b2 for i in range(1, l + 1))
                out.add((a1, b1, a2, b2, l, g))
    return out


def family_disjointness(n: int) -> dict:
    """Pairwise intersection sizes of all construction families of order n."""
    sets = {}
    for method, size in methods_at_order(n).items():
        fam = enumerate_family(method, size)
        if fam:
            sets[method] = fam
    pairs = {}
    for a, b in combinations(sorted(sets), 2):
        pairs[f"{a}&{b}"] = len(sets[a] & sets[b])
    return {
        "order": n,
        "methods": {m: {"size": methods_at_order(n)[m], "count": len(s)} for m, s in sorted(sets.items())},
        "intersections": pairs,
    }
