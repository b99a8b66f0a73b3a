from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from costas.analysis import (
    count_roots_exp,
    count_roots_power,
    cycle_structure,
    family_disjointness,
    find_subpermutations,
    find_twins,
    fixed_points,
    g2_necessary_property,
    golomb_shift_stability,
    is_anti_reflective,
    is_circular_costas,
    is_single_periodic,
    parity_census,
    welch_shift_stability,
)
from costas.core import is_costas
from costas.enumeration import enumerate_costas
from costas.errors import GcdViolation, NotPrimitive, OddOrder, OrderMismatch
from costas.finfield import field_of_order
from costas.generators import enumerate_family, g2, w1exp
from oracles import SlowField, costas_by_vectors, primitive_roots_mod

TABLE2 = (1, 2, 4, 8, 5, 10, 9, 7, 3, 6)


def test_cycle_examples():
    cyc = cycle_structure(TABLE2)
    assert set(cyc.cycles) == {(1,), (2,), (5,), (3, 4, 8, 7, 9), (6, 10)}
    assert cyc.order == 10
    ident = cycle_structure(range(1, 6))
    assert len(ident.cycles) == 5 and ident.order == 1
    assert cycle_structure((2, 3, 1)).cycles == ((1, 2, 3),) and cycle_structure((2, 3, 1)).order == 3


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_cycle_order_property(f):
    cyc = cycle_structure(f)
    assert sorted(x for c in cyc.cycles for x in c) == list(range(1, len(f) + 1))
    for c in cyc.cycles:
        assert all(f[c[k] - 1] == c[(k + 1) % len(c)] for k in range(len(c)))
    ident = tuple(range(1, len(f) + 1))
    g = ident
    for k in range(1, cyc.order + 1):
        g = tuple(f[x - 1] for x in g)
        assert (g == ident) == (k == cyc.order)


def test_fixed_points_examples():
    assert fixed_points(TABLE2) == {1, 2, 5}
    assert fixed_points((2, 1)) == set()
    assert fixed_points((1, 3, 2)) == {1}


def test_count_roots_exp_examples():
    assert count_roots_exp(11, 6, 2) == 3 == len(fixed_points(w1exp(11, 2, 0)))
    assert count_roots_exp(3, 1, 2) == sum(1 for i in (1, 2) if i % 3 == pow(2, i, 3))
    assert count_roots_exp(5, 1, 2) == sum(1 for i in range(1, 5) if i == pow(2, i, 5))
    with pytest.raises(NotPrimitive):
        count_roots_exp(7, 1, 2)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19])
def test_w1_fixed_points_equal_root_count(p):
    for a in primitive_roots_mod(p):
        for c in range(p - 1):
            C = pow(a, c - 1, p)
            assert len(fixed_points(w1exp(p, a, c))) == count_roots_exp(p, C, a)


def test_count_roots_power_examples():
    assert count_roots_power(5, 1) == (1, 1)
    # in GF(2), x + x = 0 for every x, so nothing solves x + x = 1
    assert count_roots_power(2, 1) == (0, 0)
    S = SlowField(3, 2)
    raw = [x for x in S.elements if S.add(S.power(x, 7), x) == S.one()]
    assert count_roots_power(9, 7) == (len(raw), sum(1 for x in raw if x != S.one()))
    with pytest.raises(GcdViolation):
        count_roots_power(9, 2)


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13, 16])
def test_root_count_is_g2_fixed_point_count(q):
    F = field_of_order(q)
    for r in range(1, q - 1):
        try:
            _, excl = count_roots_power(q, r)
        except GcdViolation:
            continue
        for a in F.primitive_codes():
            assert len(fixed_points(g2(q, a, F.pow(a, r)))) == excl


def test_parity_examples():
    c = parity_census((2, 1, 3))
    assert c.as_tuple() == (0, 1, 1, 1)
    assert parity_census((1, 2, 3, 4)).as_tuple() == (2, 0, 0, 2)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 17, 19, 23, 25, 27])
def test_g2_parity_independent_of_roots(q):
    assert len({parity_census(f).as_tuple() for f in enumerate_family("G2", q)}) == 1


@pytest.mark.parametrize("p", [5, 13, 17])
def test_w1_parity_independent_of_roots(p):
    # p = 1 mod 4 only; at p = 3 mod 4 the census depends on further arithmetic
    assert len({parity_census(f).as_tuple() for f in enumerate_family("W1", p)}) == 1


def test_anti_reflective_examples():
    assert is_anti_reflective(TABLE2)
    assert is_anti_reflective((1, 2))
    assert not is_anti_reflective((2, 1, 4, 3))
    with pytest.raises(OddOrder):
        is_anti_reflective((1, 2, 3))


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 17, 19, 23, 25, 27])
def test_g2_necessary_property_holds(q):
    assert all(g2_necessary_property(f, q) for f in enumerate_family("G2", q))


def test_g2_necessary_property_examples():
    assert g2_necessary_property((2, 1, 3), 5)
    with pytest.raises(OrderMismatch):
        g2_necessary_property((1, 2), 5)


@pytest.mark.parametrize("q,extra", [(7, 4), (9, 4), (11, 0), (13, 0)])
def test_g2_necessary_property_on_other_arrays(q, extra):
    # at orders 5 and 7 a few non-G2 arrays pass; from order 9 on none do
    g2s = enumerate_family("G2", q)
    passing = [f for f in enumerate_costas(q - 2, store=True).arrays if g2_necessary_property(f, q)]
    assert len(set(passing) - g2s) == extra


def test_single_periodic():
    assert is_single_periodic(w1exp(11, 2, 0))
    assert is_single_periodic((1,))
    for n in (3, 5, 7):
        assert not any(is_single_periodic(f) for f in enumerate_costas(n, store=True).arrays)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_w1exp_single_periodic(p):
    assert all(is_single_periodic(f) for f in enumerate_family("W1exp", p))


def test_circular_costas():
    assert is_circular_costas((0,))
    for p in (5, 7, 11, 13):
        for f in enumerate_family("W1exp", p):
            assert is_circular_costas(tuple(v - 1 for v in f))
    # the logarithmic half is not circular (its natural modulus is p - 1, not p)
    assert not any(is_circular_costas(tuple(v - 1 for v in f)) for f in enumerate_family("W1log", 11))
    for n in (3, 5):
        assert not any(is_circular_costas(f) for f in permutations(range(n)))


def _circular_oracle(f):
    n = len(f)
    for k in range(1, n):
        seen = set()
        for i in range(n):
            d = (f[(i + k) % n] - f[i]) % (n + 1)
            if d in seen:
                return False
            seen.add(d)
    return True


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(n)))))
def test_circular_matches_oracle(f):
    assert is_circular_costas(tuple(f)) == _circular_oracle(f)


def test_shift_stability():
    for p in (7, 11):
        assert all(welch_shift_stability(f) for f in enumerate_family("W1exp", p))
    for q in (7, 8, 9):
        assert all(golomb_shift_stability(f) for f in enumerate_family("G2", q))
    assert not welch_shift_stability((1, 2, 3))
    assert not golomb_shift_stability((1, 2, 3))


def test_twins():
    assert find_twins((1,)) is None
    for n in range(1, 9):
        for f in enumerate_costas(n, store=True).arrays:
            res = find_twins(f)
            if res is not None:
                assert all(costas_by_vectors(g) for g in res)
    # a hand-built pair checks the construction itself
    g1, g2_ = [1, 3, 2, 4], [4, 3, 2, 1]
    assert (find_twins((2, 1)) is None) == (not (costas_by_vectors(g1) and costas_by_vectors(g2_)))


def test_subpermutation_examples():
    f = (2, 4, 1, 5, 3)
    assert (0, 1, 0, 1, 5, f) in find_subpermutations(f, 3)
    ident = find_subpermutations((1, 2, 3, 4), 2)
    assert (0, 2, 0, 2, 2, (1, 2)) in ident


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_subpermutation_rescaling(f):
    for a1, b1, a2, b2, l, g in find_subpermutations(f, 3):
        assert sorted(g) == list(range(1, l + 1))
        assert all(g[i - 1] == (f[a1 + b1 * i - 1] - a2) // b2 for i in range(1, l + 1))
        assert all((f[a1 + b1 * i - 1] - a2) % b2 == 0 for i in range(1, l + 1))


def test_g2_contains_subfield_g2():
    small = enumerate_family("G2", 7)
    for f in enumerate_family("G2", 49):
        subs = find_subpermutations(f, 5)
        assert any(s[1] == 8 and s[3] == 8 and s[5] in small for s in subs)


def _rg1_from(g, t1, t2):
    n = len(g) + 1
    return tuple(t2 if i == t1 else (g[(i - t1 - 1) % n] + t2 - 1) % n + 1 for i in range(1, n + 1))


def test_order7_overlap_by_independent_fields():
    # the 4 shared arrays come from GF(9) directly and from GF(8) after a shift
    S9, S8 = SlowField(3, 2), SlowField(2, 3)
    g2_9 = {S9.g2(a, b) for a in S9.primitive() for b in S9.primitive()}
    g2_8 = {S8.g2(a, b) for a in S8.primitive() for b in S8.primitive()}
    rg1 = {_rg1_from(g, t1, t2) for g in g2_8 for t1 in range(2, 7) for t2 in range(2, 7)}
    rg1 = {f for f in rg1 if costas_by_vectors(f)}
    shared = g2_9 & rg1
    assert len(shared) == 4
    assert all(f[3] == 4 for f in shared)


@pytest.mark.parametrize("n", range(6, 17))
def test_family_disjointness(n):
    rep = family_disjointness(n)
    expected = {"G2&RG1": 4} if n == 7 else {}
    nonempty = {k: v for k, v in rep["intersections"].items() if v}
    assert nonempty == expected
