"""Relatives of Costas arrays: Sidon sets, Golomb rectangles, honeycombs, queens,
ruler conversion, and the interlace / concatenate combinators."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import Permutation, _trusted, as_permutation, distance_vectors, is_costas
from .errors import EvenOrder, NotCostas, SizeMismatch, TooFewDots, TooFewMarks, TooLarge

__all__ = [
    "DotSet",
    "Ruler",
    "is_sidon",
    "is_golomb_rectangle",
    "max_dots",
    "costas_to_ruler",
    "minimal_blank_rows",
    "is_honeycomb",
    "is_queens",
    "interlace",
    "concatenate",
    "common_distance_vector",
    "MAX_DOTS_CELLS",
]

MAX_DOTS_CELLS = 36


@dataclass(frozen=True)
class DotSet:
    """Dots (row, col), 1-based, inside an m x n rectangle."""

    m: int
    n: int
    dots: frozenset

    def __post_init__(self):
        for r, c in self.dots:
            if not (1 <= r <= self.m and 1 <= c <= self.n):
                raise ValueError(f"dot {(r, c)} outside {self.m}x{self.n}")

    @classmethod
    def from_permutation(cls, f: Sequence[int]) -> "DotSet":
        f = as_permutation(f)
        return cls(len(f), len(f), frozenset((v, i) for i, v in enumerate(f, 1)))

    def as_permutation(self) -> Permutation | None:
        """The permutation this dot set draws, if it is a square permutation array."""
        if self.m != self.n or len(self.dots) != self.n:
            return None
        by_col = {c: r for r, c in self.dots}
        if len(by_col) != self.n or len({r for r, _ in self.dots}) != self.n:
            return None
        return Permutation(by_col[c] for c in range(1, self.n + 1))

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "n": self.n, "dots": sorted(map(list, self.dots))}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "DotSet":
        d = json.loads(text)
        return cls(d["m"], d["n"], frozenset(tuple(x) for x in d["dots"]))


@dataclass(frozen=True)
class Ruler:
    length: int
    marks: tuple[int, ...]

    def __str__(self):
        return " ".join(map(str, self.marks))

    @classmethod
    def parse(cls, line: str) -> "Ruler":
        marks = tuple(sorted(int(x) for x in line.split()))
        base = marks[0]
        marks = tuple(x - base for x in marks)
        return cls(marks[-1], marks)


def is_sidon(marks: Iterable[int]) -> bool:
    marks = sorted(set(marks))
    if len(marks) < 2:
        raise TooFewMarks("a Sidon set needs at least two marks")
    diffs = [b - a for a, b in combinations(marks, 2)]
    return len(diffs) == len(set(diffs))


def _vectors_distinct(dots) -> bool:
    seen = set()
    for (r1, c1), (r2, c2) in combinations(dots, 2):
        d = (r1 - r2, c1 - c2)
        if d in seen or (-d[0], -d[1]) in seen:
            return False
        seen.add(d)
    return True


def is_golomb_rectangle(d: DotSet) -> bool:
    """All difference vectors between dots distinct (autocorrelation in {N, 1, 0})."""
    if len(d.dots) <= 2:
        raise TooFewDots("a Golomb rectangle needs more than two dots")
    return _vectors_distinct(d.dots)


def max_dots(m: int, n: int, cap: int = MAX_DOTS_CELLS) -> tuple[int, DotSet]:
    """Largest number of dots in an m x n rectangle with distinct difference vectors.

    Branch and bound over cells in row-major order.  Any solution can be
    translated to touch the first row and the first column, so branches that
    leave row 1 or column 1 empty are cut.  Counts of one or two dots are
    always feasible and reported as such.
    """
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    if m * n > cap:
        raise TooLarge(f"{m}x{n} exceeds the {cap}-cell cap")
    cells = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    total = len(cells)
    # N dots give N(N-1) distinct nonzero ordered differences
    diff_room = (2 * m - 1) * (2 * n - 1) - 1
    limit = 1
    while (limit + 1) * limit <= diff_room and limit + 1 <= total:
        limit += 1
    best: list = [cells[:1]]
    chosen: list = []
    used: set = set()

    def touches(sel):
        return any(r == 1 for r, _ in sel) and any(c == 1 for _, c in sel)

    def search(idx):
        if len(chosen) > len(best[0]) and touches(chosen):
            best[0] = chosen[:]
        if len(best[0]) >= limit:
            return
        if idx == total or len(chosen) + (total - idx) <= len(best[0]):
            return
        # row 1 has no dot and we have moved past it
        if idx >= n and not any(r == 1 for r, _ in chosen):
            return
        cell = cells[idx]
        new = []
        ok = True
        for other in chosen:
            d = (cell[0] - other[0], cell[1] - other[1])
            e = (-d[0], -d[1])
            if d in used or e in used or d in new or e in new:
                ok = False
                break
            new.append(d)
            new.append(e)
        if ok:
            chosen.append(cell)
            used.update(new)
            search(idx + 1)
            chosen.pop()
            used.difference_update(new)
            if len(best[0]) >= limit:
                return
        search(idx + 1)

    search(0)
    sel = best[0]
    return len(sel), DotSet(m, n, frozenset(sel))


def costas_to_ruler(f: Sequence[int], blank_rows: int) -> Ruler | None:
    """Stack the columns of f (with ``blank_rows`` empty rows added) into a ruler.

    Mark positions are (col-1)(n+blank_rows) + f(col) - 1; returns None unless
    they form a Sidon set.
    """
    f = as_permutation(f)
    n = len(f)
    if blank_rows < 0:
        raise ValueError("blank_rows must be >= 0")
    height = n + blank_rows
    marks = sorted((i - 1) * height + v - 1 for i, v in enumerate(f, 1))
    if len(marks) < 2 or not is_sidon(marks):
        return None
    base = marks[0]
    marks = [x - base for x in marks]
    return Ruler(marks[-1], tuple(marks))


def minimal_blank_rows(f: Sequence[int]) -> int:
    """Fewest blank rows for which :func:`costas_to_ruler` succeeds (at most n-2)."""
    f = as_permutation(f)
    n = len(f)
    if n <= 1:
        return 0
    for b in range(0, max(n - 2, 0) + 1):
        if costas_to_ruler(f, b) is not None:
            return b
    raise NotCostas("no ruler even with n-2 blank rows; input is not Costas")


def is_honeycomb(f: Sequence[int]) -> bool:
    """Costas array of odd order 2r+1 with one dot on each central anti-diagonal.

    The 2r+1 sums i + f(i) add up to n(n+1), so n distinct consecutive sums
    are exactly the central band n+1-r .. n+1+r.
    """
    f = as_permutation(f)
    n = len(f)
    if n % 2 == 0:
        raise EvenOrder("honeycomb arrays have odd order")
    if not is_costas(f):
        raise NotCostas("honeycomb test needs a Costas array")
    sums = sorted(i + v for i, v in enumerate(f, 1))
    return all(b - a == 1 for a, b in zip(sums, sums[1:]))


def is_queens(f: Sequence[int]) -> bool:
    """No two dots share a diagonal in either direction."""
    f = as_permutation(f)
    n = len(f)
    return len({i + v for i, v in enumerate(f)}) == n and len({i - v for i, v in enumerate(f)}) == n


def interlace(a1: Sequence[int], a2: Sequence[int]) -> DotSet:
    """A1 on the odd/odd cells and A2 on the even/even cells of a doubled grid."""
    a1, a2 = as_permutation(a1), as_permutation(a2)
    n1, n2 = len(a1), len(a2)
    if n2 not in (n1, n1 - 1):
        raise SizeMismatch(f"second array must have order {n1} or {n1 - 1}, got {n2}")
    size = n1 + n2
    dots = {(2 * v - 1, 2 * i - 1) for i, v in enumerate(a1, 1)}
    dots |= {(2 * v, 2 * i) for i, v in enumerate(a2, 1)}
    return DotSet(size, size, frozenset(dots))


def concatenate(a1: Sequence[int], a2: Sequence[int]) -> Permutation:
    """Block-diagonal join: A1 in the top-left corner, A2 below and to the right."""
    a1, a2 = as_permutation(a1), as_permutation(a2)
    n1 = len(a1)
    return _trusted(tuple(a1) + tuple(v + n1 for v in a2))


def common_distance_vector(a1: Sequence[int], a2: Sequence[int]) -> tuple[int, int] | None:
    """Smallest (column difference, value difference) shared by both arrays, if any."""
    shared = set(distance_vectors(a1)) & set(distance_vectors(a2))
    return min(shared) if shared else None
