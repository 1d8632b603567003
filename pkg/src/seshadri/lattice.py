"""Picard lattice of a blown-up plane or Hirzebruch surface.

A class ``(alpha; beta_1, ..., beta_s)`` stands for ``alpha*H - sum(beta_i*E_i)``
where H is the pullback of a line and E_i are the exceptional curves, so the
intersection form has signature (1, s) and ``-K = (3; 1, ..., 1)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError
from .surd import QuadSurd


@dataclass(frozen=True, order=True)
class ClassVector:
    """Integer class ``(alpha; beta)`` on the blow-up of P2 at ``len(beta)`` points."""

    alpha: int
    beta: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.beta, tuple):
            object.__setattr__(self, "beta", tuple(self.beta))

    @classmethod
    def of(cls, alpha: int, *beta: int) -> ClassVector:
        return cls(alpha, tuple(beta))

    @property
    def s(self) -> int:
        return len(self.beta)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.alpha, *self.beta)

    def __neg__(self) -> ClassVector:
        return ClassVector(-self.alpha, tuple(-b for b in self.beta))

    def __str__(self) -> str:
        return f"({self.alpha};{','.join(map(str, self.beta))})"


def anticanonical(s: int) -> ClassVector:
    """``-K`` of the s-point blow-up of P2."""
    return ClassVector(3, (1,) * s)


def pair(u: ClassVector, v: ClassVector) -> int:
    """Intersection number ``alpha_u*alpha_v - sum(beta_u[i]*beta_v[i])``."""
    if u.s != v.s:
        raise InputError(f"dimension mismatch: {u} has s={u.s}, {v} has s={v.s}")
    return u.alpha * v.alpha - sum(x * y for x, y in zip(u.beta, v.beta))


def degK(u: ClassVector) -> int:
    """Intersection with ``-K``, i.e. ``3*alpha - sum(beta)``."""
    return 3 * u.alpha - sum(u.beta)


class ClassType(enum.Enum):
    MINUS_ONE = "MinusOneClass"
    MINUS_TWO = "MinusTwoClass"
    OTHER = "Other"


def classify(u: ClassVector) -> ClassType:
    sq, k = pair(u, u), degK(u)
    if sq == -1 and k == 1:
        return ClassType.MINUS_ONE
    if sq == -2 and k == 0:
        return ClassType.MINUS_TWO
    return ClassType.OTHER


class Base(enum.Enum):
    P2 = "p2"
    HIRZEBRUCH = "fn"


class Pencil(enum.Enum):
    AUTO = "auto"
    ASSERTED = "asserted"


@dataclass(frozen=True)
class SurfaceSpec:
    """The surface: P2 or F_n (n >= 2) blown up at ``r`` points.

    ``pencil`` records whether ``dim|-K| >= 1`` is automatic (P2 with at most
    eight points) or asserted by the caller.
    """

    base: Base
    r: int
    n: int = 0
    pencil: Pencil = Pencil.AUTO

    def __post_init__(self):
        if self.r < 0:
            raise InputError("number of blown-up points must be nonnegative")
        if self.base is Base.HIRZEBRUCH and self.n < 2:
            raise InputError("Hirzebruch surfaces F_0 and F_1 are handled as blow-ups of P2; need n >= 2")
        if self.base is Base.P2 and self.n:
            raise InputError("n is only meaningful for a Hirzebruch base")
        if self.pencil is Pencil.AUTO and not (self.base is Base.P2 and self.r <= 8):
            raise InputError(
                "an anticanonical pencil is automatic only for P2 blown up at <= 8 points; "
                "assert it explicitly"
            )

    @classmethod
    def p2(cls, r: int, pencil: Pencil | None = None) -> SurfaceSpec:
        if pencil is None:
            pencil = Pencil.AUTO if r <= 8 else Pencil.ASSERTED
        return cls(Base.P2, r, 0, pencil)

    @classmethod
    def hirzebruch(cls, n: int, r: int) -> SurfaceSpec:
        return cls(Base.HIRZEBRUCH, r, n, Pencil.ASSERTED)


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError("booleans are not coefficients")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {x!r}") from exc
    raise InputError(f"not a rational number: {x!r}")


@dataclass(frozen=True)
class Polarization:
    """A divisor ``L`` on a :class:`SurfaceSpec`.

    Over P2, ``L = a*H - sum(b_i*E_i)`` with ``len(b) == r``.  Over F_n the
    divisor is ``a*h + b*f - sum(c_i*E_i)`` and is stored as ``a`` together with
    ``b = (b, c_1, ..., c_r)``.
    """

    surface: SurfaceSpec
    a: Fraction
    b: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", _to_fraction(self.a))
        object.__setattr__(self, "b", tuple(_to_fraction(x) for x in self.b))
        expected = self.surface.r + (1 if self.is_hirzebruch else 0)
        if len(self.b) != expected:
            raise InputError(f"expected {expected} coefficients after a, got {len(self.b)}")

    @classmethod
    def p2(cls, a, *b, surface: SurfaceSpec | None = None) -> Polarization:
        return cls(surface or SurfaceSpec.p2(len(b)), a, tuple(b))

    @property
    def is_hirzebruch(self) -> bool:
        return self.surface.base is Base.HIRZEBRUCH

    @property
    def r(self) -> int:
        return self.surface.r

    @property
    def c(self) -> tuple[Fraction, ...]:
        """Exceptional coefficients: ``b`` over P2, ``c_1..c_r`` over F_n."""
        return self.b[1:] if self.is_hirzebruch else self.b

    def entries(self) -> tuple[Fraction, ...]:
        return (self.a, *self.b)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries())

    def is_primitive(self) -> bool:
        if not self.is_integral():
            return False
        g = 0
        for x in self.entries():
            g = math.gcd(g, int(x))
        return g == 1

    def scaled(self, k) -> Polarization:
        k = _to_fraction(k)
        return Polarization(self.surface, self.a * k, tuple(x * k for x in self.b))

    def with_surface(self, surface: SurfaceSpec) -> Polarization:
        return Polarization(surface, self.a, self.b)

    def dot(self, u: ClassVector) -> Fraction:
        """``L . u`` for a class on the same P2 blow-up."""
        if self.is_hirzebruch:
            raise InputError("use fn_dot for Hirzebruch classes")
        if u.s != self.r:
            raise InputError(f"class {u} lives on s={u.s}, polarization on r={self.r}")
        return self.a * u.alpha - sum(x * y for x, y in zip(self.b, u.beta))

    def __str__(self) -> str:
        return f"({self.a};{','.join(map(str, self.b))})"


def parse_entries(text: str | Iterable) -> list[Fraction]:
    """Parse ``"3,1,1"`` or ``"5/2,1/2"`` (or an iterable) into rationals."""
    items = text.split(",") if isinstance(text, str) else list(text)
    items = [x for x in items if not (isinstance(x, str) and not x.strip())]
    if not items:
        raise InputError("empty coefficient list")
    return [_to_fraction(x) for x in items]


def primitive_normalize(L: Polarization) -> tuple[Polarization, Fraction]:
    """Split ``L = k * L0`` with ``L0`` integral and primitive."""
    entries = L.entries()
    if all(x == 0 for x in entries):
        raise InputError("zero divisor has no primitive part")
    den = 1
    for x in entries:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in entries]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    L0 = Polarization(L.surface, Fraction(ints[0] // g), tuple(Fraction(v // g) for v in ints[1:]))
    return L0, Fraction(g, den)


def fn_pair(n: int, u: Sequence, v: Sequence):
    """Intersection on F_n blown up, classes given as ``(a, b, c_1, ..., c_r)``.

    ``h^2 = -n``, ``h.f = 1``, ``f^2 = 0`` and ``E_i.E_j = -delta_ij``.
    """
    if len(u) != len(v):
        raise InputError("dimension mismatch")
    a1, b1, *c1 = u
    a2, b2, *c2 = v
    return -n * a1 * a2 + a1 * b2 + a2 * b1 - sum(x * y for x, y in zip(c1, c2))


def fn_anticanonical(n: int, r: int) -> tuple[int, ...]:
    """``-K = 2h + (n+2)f - sum(E_i)`` on F_n blown up at r points."""
    return (2, n + 2) + (1,) * r


def self_intersection(L: Polarization) -> Fraction:
    if L.is_hirzebruch:
        return fn_pair(L.surface.n, L.entries(), L.entries())
    return L.a * L.a - sum(x * x for x in L.b)


def anticanonical_degree(L: Polarization) -> Fraction:
    """``-K . L``."""
    if L.is_hirzebruch:
        return fn_pair(L.surface.n, fn_anticanonical(L.surface.n, L.r), L.entries())
    return 3 * L.a - sum(L.b)


def lsq_bnext(L: Polarization) -> tuple[Fraction, QuadSurd]:
    """``L^2`` and its exact square root (the weight at the extra point)."""
    lsq = self_intersection(L)
    if lsq <= 0:
        raise InputError(f"not ample: L^2 = {lsq} <= 0")
    return lsq, QuadSurd.sqrt(lsq)


class Ratio(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


def ratio_vs_3(L: Polarization) -> Ratio:
    """Compare ``(sum(b) + sqrt(L^2)) / a`` with 3, exactly.

    Equivalent to comparing ``sqrt(L^2)`` with ``3a - sum(b)``; both sides are
    positive for an ample L, so squaring preserves the order.
    """
    lsq, _ = lsq_bnext(L)
    k = anticanonical_degree(L)
    if k <= 0:
        raise InputError(f"not ample: -K.L = {k} <= 0")
    if lsq < k * k:
        return Ratio.LESS
    if lsq == k * k:
        return Ratio.EQUAL
    return Ratio.GREATER
