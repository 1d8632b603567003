from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seshadri.enumeration import (
    ClassQuery,
    TailMode,
    distinct_permutations,
    enumerate_classes,
    phi_set,
    psi_set,
)
from seshadri.errors import InputError
from seshadri.lattice import ClassVector, degK, pair

V = ClassVector.of


def brute(s, selfint, degk, alpha_max, tail_mode):
    """Every integer vector in a box that is certainly large enough."""
    out = []
    for alpha in range(alpha_max + 1):
        for beta in product(range(-2, alpha + 3), repeat=s):
            v = ClassVector(alpha, beta)
            if pair(v, v) != selfint or degK(v) != degk:
                continue
            if tail_mode is TailMode.TAIL_GE_ONE and beta[-1] < 1:
                continue
            out.append(v)
    return sorted(out)


def test_small_sets():
    assert phi_set(2, 6) == [V(1, 1, 1)]
    assert psi_set(2, 6) == [V(0, -1, 1)]
    assert phi_set(1, 6) == []
    assert psi_set(1, 6) == []


def test_contains_nodal_cubic():
    assert V(3, 1, 1, 1, 1, 1, 1, 2) in phi_set(7, 6)


def test_classical_counts():
    assert [len(phi_set(s, 6, TailMode.ALL)) for s in (3, 4, 5, 6, 7, 8)] == [6, 10, 16, 27, 56, 240]


def test_tail_subset():
    full = phi_set(8, 6, TailMode.ALL)
    tail = phi_set(8, 6)
    assert tail == [v for v in full if v.beta[-1] >= 1]


@pytest.mark.parametrize("s", [3, 4, 5])
@pytest.mark.parametrize("family", [(-1, 1), (-2, 0)])
def test_matches_brute_force(s, family):
    for mode in TailMode:
        got = enumerate_classes(ClassQuery(s, *family, 4, mode))
        assert got == brute(s, *family, 4, mode)


def test_sorted_and_valid():
    for v in psi_set(7, 6, TailMode.ALL):
        assert pair(v, v) == -2 and degK(v) == 0
    out = phi_set(7, 6)
    assert out == sorted(out)


def test_workers_do_not_change_output():
    assert phi_set(8, 6, workers=2) == phi_set(8, 6, workers=1)


def test_query_validation():
    with pytest.raises(InputError):
        ClassQuery(3, -3, 1, 4)
    with pytest.raises(InputError):
        ClassQuery(3, -1, 1, -1)


@given(st.lists(st.integers(-2, 3), max_size=6))
def test_distinct_permutations(values):
    perms = list(distinct_permutations(values))
    assert perms == sorted(set(perms))
    assert len(perms) == len(set(perms))
    assert all(sorted(p) == sorted(values) for p in perms)
