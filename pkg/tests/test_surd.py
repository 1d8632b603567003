from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from seshadri.surd import QuadSurd, sign_double, sign_single


def high_precision(x: QuadSurd) -> Decimal:
    getcontext().prec = 80
    return (Decimal(x.p) + Decimal(x.q) * Decimal(x.d).sqrt()) / Decimal(x.e)


def test_perfect_square_collapses():
    x = QuadSurd(1, 2, 9, 7)
    assert x.is_rational
    assert x.to_fraction() == 1
    assert (x.q, x.d) == (0, 0)


def test_sqrt_of_fraction():
    x = QuadSurd.sqrt(Fraction(3, 4))
    assert x == QuadSurd(0, 1, 3, 2)
    assert QuadSurd.sqrt(Fraction(1)) == 1


def test_sign_single_cases():
    assert sign_single(Fraction(3), Fraction(-1), 8) == 1  # 3 > sqrt(8)
    assert sign_single(Fraction(3), Fraction(-1), 10) == -1
    assert sign_single(Fraction(3), Fraction(-1), 9) == 0
    assert sign_single(Fraction(0), Fraction(0), 5) == 0


def test_sign_double():
    assert sign_double(Fraction(0), Fraction(1), 2, Fraction(-1), 3) == -1
    assert sign_double(Fraction(-1), Fraction(1), 2, Fraction(1), 3) == 1
    assert sign_double(Fraction(-4), Fraction(1), 2, Fraction(1), 3) == -1


def test_order_and_floor():
    assert QuadSurd.sqrt(Fraction(7)) < Fraction(8, 3)
    assert QuadSurd.sqrt(Fraction(7)).floor() == 2
    assert (-QuadSurd.sqrt(Fraction(7))).floor() == -3
    assert QuadSurd(3, -1, 7, 4) > 0


def test_unhashable():
    with pytest.raises(TypeError):
        hash(QuadSurd(1, 1, 2))


surds = st.builds(QuadSurd, st.integers(-50, 50), st.integers(-20, 20),
                  st.integers(0, 60), st.integers(1, 30))


@given(surds, surds)
def test_compare_matches_high_precision(x, y):
    dx, dy = high_precision(x), high_precision(y)
    assume(abs(dx - dy) > Decimal("1e-50") or x == y)
    assert (x < y) == (dx < dy)
    assert (x == y) == (abs(dx - dy) < Decimal("1e-50"))


@given(surds, st.fractions(max_denominator=20).filter(lambda f: abs(f) < 100))
def test_rational_shift_is_exact(x, f):
    assert (x + f) - f == x
    assert (x + f > x) == (f > 0)
