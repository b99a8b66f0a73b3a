"""Permutations, difference triangles and Costas verification.

A permutation of order n is stored in one-line notation with 1-based values,
``f[i-1] == f(i)``.  The array picture puts a dot at (row f(i), column i).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import OrderTooSmall

__all__ = [
    "Permutation",
    "DifferenceTriangle",
    "EquivalenceClass",
    "TRANSFORMS",
    "as_permutation",
    "difference_triangle",
    "is_costas",
    "is_costas_fast",
    "naive_verify",
    "distance_vectors",
    "dihedral_transform",
    "equivalence_class",
    "is_symmetric",
]


class Permutation(tuple):
    """Immutable bijection on [n] in one-line notation.

    Indexing is 0-based like any tuple; calling is 1-based, ``f(i)``.
    """

    def __new__(cls, values: Iterable[int]):
        values = tuple(int(v) for v in values)
        n = len(values)
        if n == 0:
            raise ValueError("a permutation needs order >= 1")
        if sorted(values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {values}")
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self):
            raise IndexError(i)
        return self[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return tuple.__new__(Permutation, inv)

    def zero_based(self) -> tuple[int, ...]:
        return tuple(v - 1 for v in self)

    def __repr__(self):
        return f"Permutation({list(self)})"

    def __str__(self):
        return " ".join(map(str, self))


def as_permutation(f: Sequence[int]) -> Permutation:
    return f if isinstance(f, Permutation) else Permutation(f)


def _trusted(values) -> Permutation:
    # skips validation for values built internally from a valid permutation
    return tuple.__new__(Permutation, values)


@dataclass(frozen=True)
class DifferenceTriangle:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, k: int) -> tuple[int, ...]:
        """The 1-based row t_k."""
        return self.rows[k - 1]

    def __len__(self):
        return len(self.rows)


def difference_triangle(f: Sequence[int]) -> DifferenceTriangle:
    f = as_permutation(f)
    n = len(f)
    rows = tuple(tuple(f[j + k] - f[j] for j in range(n - k)) for k in range(1, n))
    return DifferenceTriangle(n, rows)


def _rows_distinct(f: Sequence[int], max_k: int) -> bool:
    n = len(f)
    seen = [0] * (2 * n)
    for k in range(1, max_k + 1):
        for j in range(n - k):
            d = f[j + k] - f[j] + n
            if seen[d] == k:
                return False
            seen[d] = k
    return True


def is_costas(f: Sequence[int]) -> bool:
    """True iff no row of the difference triangle repeats an entry."""
    f = as_permutation(f)
    return _rows_distinct(f, len(f) - 1)


def is_costas_fast(f: Sequence[int]) -> bool:
    """Same verdict as :func:`is_costas`, checking only rows k <= (n-1)//2.

    Chang's theorem guarantees the remaining rows are then duplicate-free.
    """
    f = as_permutation(f)
    return _rows_distinct(f, (len(f) - 1) // 2)


def naive_verify(f: Sequence[int]) -> tuple[bool, int]:
    """Compare every pair of entries in every row; returns (verdict, comparisons).

    No early exit, so the comparison count is always C(n, 3).
    """
    tri = difference_triangle(f)
    ok = True
    comparisons = 0
    for row in tri.rows:
        for a in range(len(row)):
            for b in range(a + 1, len(row)):
                comparisons += 1
                if row[a] == row[b]:
                    ok = False
    assert comparisons == comb(tri.n, 3)
    return ok, comparisons


def distance_vectors(f: Sequence[int]) -> list[tuple[int, int]]:
    """All (column difference, value difference) pairs for i > j."""
    n = len(f)
    return [(i - j, f[i] - f[j]) for j in range(n) for i in range(j + 1, n)]


def _flip_h(f):
    return f[::-1]


def _flip_v(f):
    n = len(f)
    return tuple(n + 1 - v for v in f)


def _transpose(f):
    inv = [0] * len(f)
    for i, v in enumerate(f, 1):
        inv[v - 1] = i
    return tuple(inv)


def _rot180(f):
    return _flip_v(_flip_h(f))


# rot90 turns the array a quarter turn; rot90 applied twice is rot180
TRANSFORMS = {
    "id": lambda f: tuple(f),
    "rot90": lambda f: _flip_h(_transpose(f)),
    "rot180": _rot180,
    "rot270": lambda f: _transpose(_flip_h(f)),
    "flip_h": _flip_h,
    "flip_v": _flip_v,
    "transpose": _transpose,
    "antitranspose": lambda f: _rot180(_transpose(f)),
}


def dihedral_transform(f: Sequence[int], t: str) -> Permutation:
    f = as_permutation(f)
    try:
        op = TRANSFORMS[t]
    except KeyError:
        raise ValueError(f"unknown transform {t!r}; choose from {sorted(TRANSFORMS)}") from None
    return _trusted(op(f))


@dataclass(frozen=True)
class EquivalenceClass:
    members: frozenset
    canonical: Permutation
    symmetric: bool

    def __len__(self):
        return len(self.members)

    def __contains__(self, f):
        return tuple(f) in self.members


def equivalence_class(f: Sequence[int]) -> EquivalenceClass:
    f = as_permutation(f)
    if len(f) <= 2:
        raise OrderTooSmall("equivalence classes are defined for n > 2")
    members = frozenset(_trusted(op(f)) for op in TRANSFORMS.values())
    return EquivalenceClass(
        members=members,
        canonical=min(members),
        symmetric=any(is_symmetric(g) for g in members),
    )


def is_symmetric(f: Sequence[int]) -> bool:
    """True iff f is an involution, i.e. the array equals its transpose."""
    f = as_permutation(f)
    return all(f[v - 1] == i for i, v in enumerate(f, 1))
