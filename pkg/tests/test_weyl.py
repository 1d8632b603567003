import pytest
from hypothesis import given
from hypothesis import strategies as st

from seshadri.enumeration import TailMode, phi_set
from seshadri.errors import InputError
from seshadri.lattice import ClassVector, degK, pair
from seshadri.weyl import Seed, apply_cremona, crosscheck, orbit_enumerate, orbit_representatives

V = ClassVector.of


def test_cremona_examples():
    assert apply_cremona(V(0, -1, 0, 0), 1, 2, 3) == V(1, 0, 1, 1)
    assert apply_cremona(V(1, 0, 1, 1), 1, 2, 3) == V(0, -1, 0, 0)
    # E1 - E2 is orthogonal to H - E1 - E2 - E3, so the reflection fixes it
    image = apply_cremona(V(0, -1, 1, 0), 1, 2, 3)
    assert image == V(0, -1, 1, 0)
    assert pair(image, image) == -2 and degK(image) == 0


def test_cremona_needs_three_points():
    with pytest.raises(InputError):
        apply_cremona(V(1, 1, 1), 1, 2, 3)
    with pytest.raises(InputError):
        apply_cremona(V(1, 1, 1, 0), 1, 1, 2)


vectors = st.integers(3, 9).flatmap(
    lambda s: st.tuples(st.integers(-5, 10), st.lists(st.integers(-5, 5), min_size=s, max_size=s),
                        st.permutations(range(1, s + 1))))


@given(vectors, vectors)
def test_cremona_is_isometric_involution(x, y):
    alpha, beta, idx = x
    u = ClassVector(alpha, tuple(beta))
    i, j, k = idx[:3]
    w = apply_cremona(u, i, j, k)
    assert apply_cremona(w, i, j, k) == u
    assert pair(w, w) == pair(u, u)
    assert degK(w) == degK(u)
    v = ClassVector(y[0], tuple((y[1] * 3)[: u.s]))
    assert pair(apply_cremona(v, i, j, k), w) == pair(v, u)


def test_small_s_orbits():
    assert orbit_enumerate(Seed.PHI, 2, 6) == [V(1, 1, 1)]
    assert orbit_enumerate(Seed.PSI, 2, 6) == [V(0, -1, 1)]
    assert {V(1, 0, 1, 1), V(1, 1, 0, 1)} <= set(orbit_enumerate(Seed.PHI, 3, 6))


def test_finite_orbits_without_cap():
    sizes = {s: len(orbit_enumerate(Seed.PHI, s, None, TailMode.ALL)) for s in (6, 7, 8)}
    assert sizes == {6: 27, 7: 56, 8: 240}
    assert len(orbit_enumerate(Seed.PSI, 8, None, TailMode.ALL)) == 240
    with pytest.raises(InputError):
        orbit_representatives(Seed.PHI, 9, None)


@pytest.mark.parametrize("s,alpha_max", [(7, 6), (9, 8), (3, 0), (5, 6)])
def test_crosscheck_agrees(s, alpha_max):
    rep = crosscheck(s, alpha_max)
    assert rep.phi_equal and rep.psi_equal


def test_three_points_psi_orbit_misses_collinear_class():
    # W on three points splits as A2 x A1; H - E1 - E2 - E3 is not a conjugate of E1 - E2
    rep = crosscheck(3, 2)
    assert rep.phi_equal
    assert rep.diffs["psi"] == {"orbit_only": [], "enumeration_only": [V(1, 1, 1, 1)]}


def test_phi_orbit_matches_enumeration_for_all_tails():
    assert orbit_enumerate(Seed.PHI, 7, 6, TailMode.ALL) == phi_set(7, 6, TailMode.ALL)


def test_crosscheck_rejects_small_s():
    with pytest.raises(InputError):
        crosscheck(2, 4)
