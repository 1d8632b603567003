"""Embedding invariants on del Pezzo surfaces (P2 blown up at 1..8 general points).

``v(L)`` is the smallest degree of L on a (-1)-class of X.  ``eps_min(L)`` is
the smallest Seshadri constant of L over all points of X, which on a del Pezzo
surface has a closed form in terms of ``v(L)`` and the anticanonical degree.
A Seshadri constant below k rules out k-jet ampleness.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enumeration import TailMode, phi_set
from .errors import InconsistencyError, InputError
from .lattice import Base, ClassVector, Polarization, anticanonical_degree
from .engine import check_ample_necessary

CLASS_CAP = 6  # every (-1)-class on at most 8 points has alpha <= 6
RULING = ClassVector(1, (1,))


@dataclass(frozen=True)
class VResult:
    value: Fraction
    witness: ClassVector
    literal_value: Fraction | None  # minimum over classes with beta_r >= 1 only

    @property
    def literal_differs(self) -> bool:
        return self.literal_value != self.value


@dataclass(frozen=True)
class JVReport:
    equal: bool
    v: Fraction
    eps_min: Fraction
    condition_b: bool | None


def _validate(L: Polarization) -> None:
    if L.surface.base is not Base.P2:
        raise InputError("embedding invariants are defined for blow-ups of P2 only")
    if not 1 <= L.r <= 8:
        raise InputError(f"need 1 <= r <= 8 points, got r = {L.r}")
    if not L.is_integral():
        raise InputError("embedding invariants need integer coefficients")
    if all(3 * x == L.a for x in L.b):
        raise InputError("L is proportional to the anticanonical class")
    report = check_ample_necessary(L)
    if not report.passed:
        first = report.violations[0]
        raise InputError(f"not ample: {first['kind']} {first['vector']} gives {first['value']}")


def v_of(L: Polarization) -> VResult:
    """Minimum of ``L.D`` over all (-1)-classes D of X (and the ruling when r = 1),
    with the lex-smallest minimizer."""
    _validate(L)
    best: tuple[Fraction, ClassVector] | None = None
    literal: Fraction | None = None
    candidates = phi_set(L.r, CLASS_CAP, TailMode.ALL)
    if L.r == 1:
        candidates.append(RULING)  # one point: the lines through it are fibres of degree a - b
    for d in sorted(candidates):
        value = L.dot(d)
        if best is None or value < best[0]:
            best = (value, d)
        if d != RULING and d.beta[-1] >= 1 and (literal is None or value < literal):
            literal = value
    return VResult(best[0], best[1], literal)


def eps_min_dp(L: Polarization) -> Fraction:
    """Smallest Seshadri constant of L over the points of X."""
    v = v_of(L).value
    if L.r <= 6:
        return v
    return min(v, anticanonical_degree(L) / 2)


def jet_obstruction(L: Polarization, k: int) -> bool:
    """True when ``eps_min(L) < k``, which proves L is not k-jet ample."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InputError("k must be a positive integer")
    return eps_min_dp(L) < k


def jv_equality_check(L: Polarization) -> JVReport:
    """Compare ``eps_min`` with ``v``; for 7 or 8 points the two agree exactly when
    half the anticanonical degree is at least ``v``."""
    v = v_of(L).value
    eps = eps_min_dp(L)
    condition_b = None
    if L.r in (7, 8):
        condition_b = anticanonical_degree(L) / 2 >= v
        if (eps == v) != condition_b:
            raise InconsistencyError(f"equality criterion broken for {L}")
    return JVReport(eps == v, v, eps, condition_b)
