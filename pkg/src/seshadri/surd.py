"""Exact numbers of the form ``(p + q*sqrt(d)) / e`` with a total order.

Comparison never touches floating point.  The sign of an expression with two
different radicals ``A + B*sqrt(d1) + C*sqrt(d2)`` is decided by isolating one
radical and squaring once, which leaves a single-radical sign problem that is
settled by one more squaring.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

Number = Union[int, Fraction, "QuadSurd"]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_single(p: Fraction, q: Fraction, d: int) -> int:
    """Sign of ``p + q*sqrt(d)`` for rational p, q and integer d >= 0."""
    sp, sq = _sign(p), _sign(q) if d else 0
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger magnitude wins
    return sp * _sign(p * p - q * q * d)


def sign_double(a: Fraction, b: Fraction, d1: int, c: Fraction, d2: int) -> int:
    """Sign of ``a + b*sqrt(d1) + c*sqrt(d2)``."""
    su = sign_single(a, b, d1)
    sv = _sign(c) if d2 else 0
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # |u| vs |v| through u^2 - v^2 = (a^2 + b^2 d1 - c^2 d2) + 2ab sqrt(d1)
    return su * sign_single(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


@total_ordering
class QuadSurd:
    """The real number ``(p + q*sqrt(d)) / e`` with integers p, q, d >= 0, e > 0.

    Instances are immutable and kept in canonical form: a perfect-square
    radicand (or ``q == 0``) collapses to a plain rational with ``q = d = 0``,
    and ``gcd(p, q, e) == 1``.
    """

    __slots__ = ("p", "q", "d", "e")
    __hash__ = None  # equal values may carry different radicands, e.g. sqrt(8) and 2*sqrt(2)

    def __init__(self, p: int, q: int = 0, d: int = 0, e: int = 1):
        if e == 0:
            raise ZeroDivisionError("QuadSurd denominator is zero")
        if d < 0:
            raise ValueError("QuadSurd radicand must be nonnegative")
        if e < 0:
            p, q, e = -p, -q, -e
        if q and d:
            root = math.isqrt(d)
            if root * root == d:
                p, q, d = p + q * root, 0, 0
        else:
            q, d = 0, 0
        g = math.gcd(math.gcd(p, q), e)
        if g > 1:
            p, q, e = p // g, q // g, e // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("QuadSurd is immutable")

    @classmethod
    def from_rational(cls, x) -> QuadSurd:
        x = _as_fraction(x)
        return cls(x.numerator, 0, 0, x.denominator)

    @classmethod
    def sqrt(cls, x) -> QuadSurd:
        """Exact square root of a nonnegative rational."""
        x = _as_fraction(x)
        if x < 0:
            raise ValueError("square root of a negative number")
        # sqrt(n/m) = sqrt(n*m) / m
        return cls(0, 1, x.numerator * x.denominator, x.denominator)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Fraction:
        if self.q:
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self.p, self.e)

    # parts as rationals: value = rat + irr * sqrt(d)
    def _parts(self) -> tuple[Fraction, Fraction, int]:
        return Fraction(self.p, self.e), Fraction(self.q, self.e), self.d

    @classmethod
    def _from_parts(cls, rat: Fraction, irr: Fraction, d: int) -> QuadSurd:
        den = rat.denominator * irr.denominator // math.gcd(rat.denominator, irr.denominator)
        return cls(int(rat * den), int(irr * den), d, den)

    def sign(self) -> int:
        return sign_single(Fraction(self.p), Fraction(self.q), self.d)

    def floor(self) -> int:
        """Largest integer not exceeding the value."""
        n = math.floor(float(self))
        while self < n:
            n -= 1
        while self >= n + 1:
            n += 1
        return n

    def _coerce(self, other) -> QuadSurd | None:
        if isinstance(other, QuadSurd):
            return other
        if isinstance(other, (int, Rational)):
            return QuadSurd.from_rational(other)
        return None

    def compare(self, other) -> int:
        """Return -1, 0 or 1 as ``self`` is less than, equal to or greater than ``other``."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadSurd with {type(other).__name__}")
        a1, b1, d1 = self._parts()
        a2, b2, d2 = o._parts()
        if b2 == 0:
            return sign_single(a1 - a2, b1, d1)
        if b1 == 0:
            return sign_single(a1 - a2, -b2, d2)
        if d1 == d2:
            return sign_single(a1 - a2, b1 - b2, d1)
        return sign_double(a1 - a2, b1, d1, -b2, d2)

    def __eq__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.compare(other) < 0

    # arithmetic: closed over rationals and over surds sharing a radicand
    def __neg__(self) -> QuadSurd:
        return QuadSurd(-self.p, -self.q, self.d, self.e)

    def __add__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, d1 = self._parts()
        a2, b2, d2 = o._parts()
        if b1 and b2 and d1 != d2:
            raise ValueError("cannot add surds with different radicands")
        return QuadSurd._from_parts(a1 + a2, b1 + b2, d1 or d2)

    __radd__ = __add__

    def __sub__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadSurd:
        return (-self) + other

    def __mul__(self, other) -> QuadSurd:
        if isinstance(other, QuadSurd):
            if other.q:
                if self.q:
                    raise ValueError("product of two irrational surds is not supported")
                return other * self.to_fraction()
            other = other.to_fraction()
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        k = _as_fraction(other)
        a, b, d = self._parts()
        return QuadSurd._from_parts(a * k, b * k, d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QuadSurd:
        if isinstance(other, QuadSurd):
            other = other.to_fraction()
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        k = _as_fraction(other)
        if k == 0:
            raise ZeroDivisionError("QuadSurd division by zero")
        return self * (1 / k)

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.d)) / self.e

    def __repr__(self) -> str:
        return f"QuadSurd({self.p}, {self.q}, {self.d}, {self.e})"

    def __str__(self) -> str:
        if not self.q:
            return str(Fraction(self.p, self.e))
        num = f"{self.p} + {self.q}*sqrt({self.d})" if self.p else f"{self.q}*sqrt({self.d})"
        return num if self.e == 1 else f"({num})/{self.e}"
