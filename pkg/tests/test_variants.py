from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from costas.core import is_costas
from costas.enumeration import enumerate_costas
from costas.errors import EvenOrder, NotCostas, SizeMismatch, TooFewDots, TooFewMarks, TooLarge
from costas.finfield import field_of_order
from costas.generators import ConstructionSpec, welch_generate, w1exp
from costas.variants import (
    DotSet,
    Ruler,
    common_distance_vector,
    concatenate,
    costas_to_ruler,
    interlace,
    is_golomb_rectangle,
    is_honeycomb,
    is_queens,
    is_sidon,
    max_dots,
    minimal_blank_rows,
)
from oracles import all_costas, best_ruler_marks, distinct_vectors, hex_honeycomb

COSTAS = {n: all_costas(n) for n in range(1, 8)}


def _sidon_oracle(marks):
    diffs = [abs(a - b) for a, b in combinations(marks, 2)]
    return len(diffs) == len(set(diffs))


def test_sidon_examples():
    assert is_sidon({0, 1, 3})
    assert not is_sidon({0, 1, 2})
    assert is_sidon({0, 1, 3, 7})
    with pytest.raises(TooFewMarks):
        is_sidon({4})


@settings(max_examples=200, deadline=None)
@given(st.sets(st.integers(-30, 30), min_size=2, max_size=8))
def test_sidon_oracle(marks):
    assert is_sidon(marks) == _sidon_oracle(sorted(marks))


def test_dotset_roundtrip_and_bounds():
    d = DotSet(3, 4, frozenset({(1, 1), (3, 4)}))
    assert DotSet.from_json(d.to_json()) == d
    with pytest.raises(ValueError):
        DotSet(2, 2, frozenset({(3, 1)}))
    assert DotSet.from_permutation((2, 1, 3)).as_permutation() == (2, 1, 3)
    assert d.as_permutation() is None


def test_golomb_rectangle_examples():
    for f in COSTAS[5]:
        assert is_golomb_rectangle(DotSet.from_permutation(f))
    full = DotSet(2, 2, frozenset(product((1, 2), repeat=2)))
    assert not is_golomb_rectangle(full)
    d = DotSet(3, 3, frozenset({(1, 1), (1, 2), (2, 3), (3, 1)}))
    assert is_golomb_rectangle(d) == distinct_vectors(d.dots)
    with pytest.raises(TooFewDots):
        is_golomb_rectangle(DotSet(2, 2, frozenset({(1, 1), (2, 2)})))


@settings(max_examples=150, deadline=None)
@given(st.sets(st.tuples(st.integers(1, 5), st.integers(1, 5)), min_size=3, max_size=9))
def test_golomb_rectangle_oracle(dots):
    assert is_golomb_rectangle(DotSet(5, 5, frozenset(dots))) == distinct_vectors(dots)


@pytest.mark.parametrize("n", range(2, 12))
def test_max_dots_one_row_is_optimal_ruler(n):
    assert max_dots(1, n)[0] == best_ruler_marks(n - 1)


def _max_dots_oracle(m, n):
    cells = list(product(range(1, m + 1), range(1, n + 1)))
    best = 1
    for k in range(2, len(cells) + 1):
        if any(distinct_vectors(sel) for sel in combinations(cells, k)):
            best = k
        else:
            break
    return best


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 5)])
def test_max_dots_small_rectangles(m, n):
    count, witness = max_dots(m, n)
    assert count == _max_dots_oracle(m, n) == len(witness.dots)
    assert distinct_vectors(witness.dots)


def test_max_dots_examples():
    assert max_dots(2, 2)[0] == 3
    assert max_dots(1, 2)[0] == 2
    with pytest.raises(TooLarge):
        max_dots(6, 7)
    with pytest.raises(TooLarge):
        max_dots(3, 3, cap=8)
    assert max_dots(3, 3, cap=9)[0] == 5


def test_ruler_examples():
    assert costas_to_ruler((1,), 0) is None
    r = costas_to_ruler((2, 1, 3), 1)
    assert r.marks[0] == 0 and r.length == r.marks[-1] and is_sidon(r.marks)
    assert Ruler.parse(str(r)) == r


@pytest.mark.parametrize("n", range(2, 8))
def test_ruler_with_n_minus_2_blanks(n):
    for f in COSTAS[n]:
        r = costas_to_ruler(f, n - 2)
        assert r is not None and _sidon_oracle(r.marks)


def test_fewer_blank_rows_sometimes_suffice():
    assert any(costas_to_ruler(f, 0) is not None for f in COSTAS[6])


def _full_scan_minimum(f):
    n = len(f)
    found = None
    for b in range(n - 2, -1, -1):
        h = n + b
        marks = sorted((i - 1) * h + v - 1 for i, v in enumerate(f, 1))
        if _sidon_oracle(marks):
            found = b
    return found


@pytest.mark.parametrize("n", range(2, 7))
def test_minimal_blank_rows_oracle(n):
    for f in COSTAS[n]:
        assert minimal_blank_rows(f) == _full_scan_minimum(f) <= n - 2
    assert minimal_blank_rows((1,)) == 0


def test_blank_rows_not_monotone():
    # works with none, fails with one: the scan cannot stop at the first failure
    f = (2, 4, 3, 1)
    assert costas_to_ruler(f, 0) is not None and costas_to_ruler(f, 1) is None


def test_honeycomb_examples():
    assert is_honeycomb((1,))
    assert not is_honeycomb((2, 1, 3))
    with pytest.raises(EvenOrder):
        is_honeycomb((2, 1))
    with pytest.raises(NotCostas):
        is_honeycomb((1, 2, 3))


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_honeycomb_matches_hex_oracle(n):
    verdicts = [is_honeycomb(f) for f in COSTAS[n]]
    assert verdicts == [hex_honeycomb(f) for f in COSTAS[n]]
    # no honeycomb exists at order 5
    assert sum(verdicts) == {1: 1, 3: 2, 5: 0, 7: 8}[n]


def test_queens_examples():
    assert is_queens((1,))
    assert is_queens((2, 4, 1, 3))
    # the 4-queens solution repeats 2 in its first triangle row, so the combined verdict is false
    assert not (is_costas((2, 4, 1, 3)) and is_queens((2, 4, 1, 3)))
    assert not is_queens((1, 2))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_queens_oracle(f):
    attacks = any(abs(i - j) == abs(f[i] - f[j]) for i, j in combinations(range(len(f)), 2))
    assert is_queens(f) == (not attacks)


def test_interlace_basics():
    d = interlace((1,), (1,))
    assert d.dots == {(1, 1), (2, 2)} and d.m == 2
    assert distinct_vectors(d.dots)
    d = interlace((2, 1, 3), (1, 2))
    assert len(d.dots) == 5 and d.as_permutation() is not None
    with pytest.raises(SizeMismatch):
        interlace((1, 2, 3), (1,))


@pytest.mark.parametrize("n1,n2", [(3, 3), (4, 3), (4, 4), (5, 4), (5, 5)])
def test_interlace_fails(n1, n2):
    for a in COSTAS[n1]:
        for b in COSTAS[n2]:
            d = interlace(a, b)
            assert len(d.dots) == n1 + n2
            assert not is_golomb_rectangle(d)
            assert not distinct_vectors(d.dots)


def test_concatenate():
    # a W1 array with c = 0 is the corner dot [1] followed by a W2 array
    for p in (5, 7, 11, 13):
        for a in field_of_order(p).primitive_codes():
            w2 = welch_generate(ConstructionSpec("W2", p=p, alpha=a)).permutation
            joined = concatenate((1,), w2)
            assert joined == w1exp(p, a, 0) and is_costas(joined)
    pairs = [(a, b) for a in COSTAS[4] for b in COSTAS[4]]
    costas_pairs = sum(is_costas(concatenate(a, b)) for a, b in pairs)
    assert costas_pairs == sum(distinct_vectors([(v, i) for i, v in enumerate(tuple(a) + tuple(x + 4 for x in b), 1)])
                               for a, b in pairs)
    assert costas_pairs < len(pairs) / 2
    assert len(concatenate((2, 1, 3), (1, 2))) == 5


def _vectors(f):
    return {(i - j, f[i] - f[j]) for i in range(len(f)) for j in range(i)}


def test_common_distance_vector_examples():
    f = (2, 4, 1, 5, 3)
    assert common_distance_vector(f, f) in _vectors(f)
    assert common_distance_vector((1,), f) is None


def test_common_vector_scan():
    # smallest order 3 is not enough: some order-7 arrays miss every vector of [1,3,2] and its images
    misses = {}
    for n1 in range(3, 8):
        for n2 in range(max(n1, 5), 8):
            count = 0
            for a in COSTAS[n1]:
                for b in COSTAS[n2]:
                    got = common_distance_vector(a, b)
                    assert (got is None) == (not _vectors(a) & _vectors(b))
                    count += got is None
            misses[(n1, n2)] = count
    assert misses.pop((3, 7)) == 8
    assert all(v == 0 for v in misses.values())
