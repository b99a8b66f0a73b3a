"""Both kernel backends against each other and against brute force."""
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BACKENDS
from oracles import all_costas, costas_by_vectors, max_overlap

perm = st.integers(2, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_oracle(kern, n):
    total, _, arrays = kern.enumerate_costas(n, [], max(n - 1, 0), True)
    assert [tuple(a) for a in arrays] == all_costas(n)
    assert total == len(arrays)


def test_enumeration_prefix_and_chang_rows(kern):
    for n in (6, 8):
        full = kern.enumerate_costas(n, [], n - 1, True)[2]
        chang = kern.enumerate_costas(n, [], (n - 1) // 2, True)[2]
        assert [tuple(a) for a in full] == [tuple(a) for a in chang]
        first = kern.enumerate_costas(n, [2], n - 1, True)[2]
        assert [tuple(a) for a in first] == [tuple(a) for a in full if a[0] == 2]


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 9).flatmap(
    lambda n: st.lists(st.permutations(list(range(1, n + 1))), min_size=1, max_size=5)))
def test_batch_and_deficiency(arrays):
    for kern in BACKENDS:
        assert kern.costas_batch([list(a) for a in arrays]) == [costas_by_vectors(a) for a in arrays]
        for a in arrays:
            assert (kern.deficiency(list(a)) == 0) == costas_by_vectors(a)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.permutations(list(range(1, n + 1))),
                                                     st.permutations(list(range(1, n + 1))))))
def test_max_cross_matches_overlap_oracle(pair):
    f, g = pair
    expected = max_overlap(f, g)
    for kern in BACKENDS:
        assert kern.max_cross(list(f), list(g)) == expected


def test_family_max_agrees(kern):
    arrays = [list(a) for a in all_costas(5)]
    labels = [i % 3 for i in range(len(arrays))]
    expected = max(max_overlap(arrays[i], arrays[j]) for i in range(len(arrays))
                   for j in range(i + 1, len(arrays)) if labels[i] != labels[j])
    assert kern.family_max(arrays, labels) == expected


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, COSTAS_PURE_PYTHON="1")
    code = ("import costas; from costas.enumeration import enumerate_costas;"
            "r = enumerate_costas(6); print(costas.BACKEND, r.total, r.symmetric)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "116", "10"]
