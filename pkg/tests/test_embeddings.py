from fractions import Fraction
from functools import lru_cache
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seshadri.embeddings import eps_min_dp, jet_obstruction, jv_equality_check, v_of
from seshadri.engine import eps_gen
from seshadri.errors import InputError
from seshadri.lattice import ClassVector, Polarization, SurfaceSpec

P = Polarization.p2
V = ClassVector.of


@lru_cache(maxsize=None)
def raw_classes(s):
    """(-1)-classes found by scanning a box of integer vectors, independent of the DFS."""
    return [(a, b) for a in range(7) for b in product(range(-1, 4), repeat=s)
            if a * a - sum(x * x for x in b) == -1 and 3 * a - sum(b) == 1]


def brute_v(L):
    classes = raw_classes(L.r) + ([(1, (1,))] if L.r == 1 else [])  # the ruling of F_1
    return min(a * L.a - sum(x * y for x, y in zip(b, L.b)) for a, b in classes)


def test_raw_class_counts():
    assert [len(raw_classes(s)) for s in (1, 2, 6, 7)] == [1, 3, 27, 56]


def test_v_examples():
    res = v_of(P(2, 1))
    assert (res.value, res.witness) == (1, V(0, -1))
    assert res.literal_value is None  # no (-1)-class on one point has a positive last entry
    res = v_of(P(4, 3))
    assert (res.value, res.witness) == (1, V(1, 1))
    assert eps_min_dp(P(4, 3)) == 1
    res = v_of(P(4, *[1] * 6))
    assert (res.value, res.literal_value) == (1, 2)
    res = v_of(P(6, 2, 2, 2, 2, 2, 2, 1))
    assert (res.value, res.witness, res.literal_value) == (1, V(0, 0, 0, 0, 0, 0, 0, -1), 3)
    assert res.literal_differs


def test_v_without_coordinate_minimum():
    res = v_of(P(10, 4, 3, 3, 3, 3, 3, 3, 3))
    assert res.value == 3 and not res.literal_differs


def test_eps_min_examples():
    assert eps_min_dp(P(4, *[1] * 6)) == 1
    assert eps_min_dp(P(6, 2, 2, 2, 2, 2, 2, 1)) == 1
    assert eps_min_dp(P(4, *[1] * 7)) == 1
    assert eps_min_dp(P(10, 4, 3, 3, 3, 3, 3, 3, 3)) == Fraction(5, 2)


def test_jet_obstruction():
    assert jet_obstruction(P(6, 2, 2, 2, 2, 2, 2, 1), 3)
    assert jet_obstruction(P(4, *[1] * 6), 2)
    assert not jet_obstruction(P(2, 1), 1)
    assert jet_obstruction(P(10, 4, 3, 3, 3, 3, 3, 3, 3), 3)
    assert not jet_obstruction(P(10, 4, 3, 3, 3, 3, 3, 3, 3), 2)
    with pytest.raises(InputError):
        jet_obstruction(P(2, 1), 0)


def test_jv_check():
    rep = jv_equality_check(P(4, *[1] * 6))
    assert rep.equal and rep.condition_b is None
    rep = jv_equality_check(P(4, *[1] * 7))
    assert rep.equal and rep.condition_b
    rep = jv_equality_check(P(6, 2, 2, 2, 2, 2, 2, 1))
    assert rep.equal and rep.condition_b and rep.v == 1
    rep = jv_equality_check(P(10, 4, 3, 3, 3, 3, 3, 3, 3))
    assert (rep.equal, rep.condition_b, rep.v, rep.eps_min) == (False, False, 3, Fraction(5, 2))


def test_preconditions():
    with pytest.raises(InputError):
        v_of(P(3, 1, 1, 1))  # proportional to -K
    with pytest.raises(InputError):
        v_of(P(6, 2, 2, 2))
    with pytest.raises(InputError):
        v_of(P(3))
    with pytest.raises(InputError):
        v_of(P(2, 1, 1))  # not ample
    with pytest.raises(InputError):
        v_of(Polarization(SurfaceSpec.p2(9), 4, (1,) * 9))


ample7 = st.tuples(st.integers(4, 14), st.lists(st.integers(1, 4), min_size=1, max_size=7))


def _ample_or_none(a, b):
    try:
        return P(a, *b) if v_of(P(a, *b)) else None
    except InputError:
        return None


@given(ample7)
def test_v_matches_raw_scan(data):
    L = _ample_or_none(*data)
    if L is None:
        return
    assert v_of(L).value == brute_v(L)


@given(ample7)
def test_eps_min_below_v_and_general_value(data):
    L = _ample_or_none(*data)
    if L is None:
        return
    assert eps_min_dp(L) <= v_of(L).value
    assert eps_min_dp(L) <= eps_gen(L).value
