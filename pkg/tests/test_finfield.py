from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from costas.errors import FieldMismatch, NotPrime, NotPrimitive, ZeroArgument
from costas.finfield import (
    discrete_log,
    euler_phi,
    field_of_order,
    is_irreducible,
    make_field,
    prime_power,
    primitive_elements,
    primitive_pairs_summing_to_one,
)
from oracles import SlowField

SMALL = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]


def test_make_field_basic():
    F = make_field(5, 1)
    assert F.q == 5 and F.modulus == (0, 1)
    assert make_field(2, 4).q == 16
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(3, 0)


@pytest.mark.parametrize("p,m", SMALL)
def test_modulus_matches_slow_oracle(p, m):
    assert make_field(p, m).modulus == SlowField(p, m).mod


def test_modulus_is_irreducible_over_gf2_degree4():
    # every monic quartic over GF(2), brute-force factor check
    F = make_field(2, 4)
    reducible = set()
    for d in (1, 2, 3):
        for a in product(range(2), repeat=d):
            for b in product(range(2), repeat=4 - d):
                pa, pb = a + (1,), b + (1,)
                prod = [0] * 5
                for i, x in enumerate(pa):
                    for j, y in enumerate(pb):
                        prod[i + j] ^= x & y
                reducible.add(tuple(prod))
    assert F.modulus not in reducible
    assert is_irreducible(list(F.modulus), 2)


@pytest.mark.parametrize("p,m", SMALL)
def test_multiplication_matches_slow_oracle(p, m):
    F, S = make_field(p, m), SlowField(p, m)
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul(a, b) == S.code(S.mul(S.from_code(a), S.from_code(b)))
            assert F.add(a, b) == S.code(S.add(S.from_code(a), S.from_code(b)))


@pytest.mark.parametrize("p,m", SMALL)
def test_primitive_elements_by_brute_force(p, m):
    F, S = make_field(p, m), SlowField(p, m)
    prims = {x.rep for x in primitive_elements(F)}
    assert prims == {S.code(a) for a in S.primitive()}
    assert len(prims) == euler_phi(F.q - 1)


def test_primitive_examples():
    assert {x.rep for x in primitive_elements(make_field(5))} == {2, 3}
    assert {x.rep for x in primitive_elements(make_field(2))} == {1}
    assert {x.rep for x in primitive_elements(make_field(7))} == {3, 5}


def test_discrete_log_examples():
    F = make_field(5)
    assert discrete_log(F, 2, 1) == 0
    assert discrete_log(F, 2, 3) == 3
    with pytest.raises(ZeroArgument):
        discrete_log(F, 2, 0)
    with pytest.raises(NotPrimitive):
        discrete_log(F, 4, 1)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 16, 25, 27, 32])
def test_log_inverts_power(q):
    F = field_of_order(q)
    for a in F.primitive_codes():
        for e in range(q - 1):
            assert discrete_log(F, a, F.pow(a, e)) == e


def test_primitive_pairs_examples():
    pairs = lambda F: {(a.rep, b.rep) for a, b in primitive_pairs_summing_to_one(F)}  # noqa: E731
    assert pairs(make_field(5)) == {(3, 3)}
    assert pairs(make_field(3)) == {(2, 2)}
    assert pairs(make_field(2)) == set()
    assert pairs(make_field(2, 2))


def test_primitive_pairs_are_ordered_and_valid():
    F = field_of_order(13)
    pairs = {(a.rep, b.rep) for a, b in primitive_pairs_summing_to_one(F)}
    for a, b in pairs:
        assert (b, a) in pairs
        assert F.add(a, b) == 1 and F.is_primitive(a) and F.is_primitive(b)


def test_elements_reject_mixing():
    a, b = make_field(5)(2), make_field(7)(2)
    with pytest.raises(FieldMismatch):
        a + b
    x = make_field(5)(2)
    assert (x * x).rep == 4 and (x ** 3).rep == 3 and (x - x).rep == 0
    assert (x / x).rep == 1


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None
    assert prime_power(1) is None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([5, 7, 8, 9, 11, 16, 25, 27, 49, 64]), st.data())
def test_field_axioms(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
