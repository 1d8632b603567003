"""Certified caps on the degree ``alpha`` of candidate classes.

A cap only has to over-approximate: every (-1)-class paired with the nef
class gives a valid upper bound on the Seshadri constant, while classes past
the true threshold cannot reach below ``sqrt(L^2)``.  Caps are therefore found
by an exact integer search rather than by solving for the real root.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .lattice import Polarization, Ratio, anticanonical_degree, lsq_bnext, primitive_normalize, ratio_vs_3
from .surd import QuadSurd

log = logging.getLogger(__name__)

SMALL_R_CAP = 6


class CapCase(enum.Enum):
    SMALL_R = "SmallR"
    RATIO_LESS = "RatioLess3"
    RATIO_GREATER = "RatioGreater3"
    RATIO_EQUAL = "RatioEqual3"
    UNDEFINED = "Undefined"


@dataclass(frozen=True)
class CapResult:
    cap: int
    case_tag: CapCase
    exact: bool = False
    value: Fraction | None = None  # closed-form threshold, equal-ratio case only


def _ceil_sqrt(n: int) -> int:
    root = math.isqrt(n)
    return root if root * root == n else root + 1


def _last_failure(curve: Callable[[int], QuadSurd], target: QuadSurd, majorant: int) -> int:
    """Smallest M with ``curve(t) < target`` for every integer t >= M.

    ``majorant`` is an integer C with ``curve(t) <= C / t`` for all t >= 1, which
    certifies the tail; below that point every integer is checked exactly.
    """
    start = 1
    while Fraction(majorant, start) >= target:
        start *= 2
    for t in range(start - 1, 0, -1):
        if not curve(t) < target:
            return t + 1
    return 1


def _targets(L: Polarization) -> tuple[Ratio, QuadSurd]:
    """The ratio trichotomy and ``|3 - (sum(b) + sqrt(L^2)) / a|``."""
    ratio = ratio_vs_3(L)
    _, bnext = lsq_bnext(L)
    gap = (bnext - anticanonical_degree(L)) / L.a
    return ratio, (-gap if ratio is Ratio.LESS else gap)


def m_bound(L: Polarization) -> CapResult:
    """Cap for the degree of candidate (-1)-classes."""
    L, _ = primitive_normalize(L)
    r = L.r
    if r <= 7:
        return CapResult(SMALL_R_CAP, CapCase.SMALL_R, exact=True)
    ratio, target = _targets(L)
    if ratio is Ratio.EQUAL:
        m = (L.a * L.a - 1) / (2 * L.a)
        return CapResult(math.ceil(m), CapCase.RATIO_EQUAL, exact=True, value=m)
    if ratio is Ratio.LESS:
        # (t + 3 + sqrt((r-8)t^2 + 6t + r)) / (t^2 + 1) < target
        def curve(t):
            return QuadSurd(t + 3, 1, (r - 8) * t * t + 6 * t + r, t * t + 1)

        majorant = math.ceil(4 + _ceil_sqrt(r - 8) + _ceil_sqrt(r + 6))
        return CapResult(_last_failure(curve, target, majorant), CapCase.RATIO_LESS)
    if r <= 9:
        if r == 8:
            log.warning("ratio > 3 at r = 8 should be impossible for an ample L: %s", L)
        return CapResult(SMALL_R_CAP, CapCase.UNDEFINED)

    def curve(t):
        return QuadSurd(-t - 3, 1, (r - 8) * t * t + 6 * t + r, t * t + 1)

    majorant = _ceil_sqrt(r - 8) + _ceil_sqrt(r + 6)
    return CapResult(_last_failure(curve, target, majorant), CapCase.RATIO_GREATER)


def n_bound(L: Polarization) -> CapResult:
    """Cap for the degree of candidate (-2)-classes."""
    L, _ = primitive_normalize(L)
    r = L.r
    if r <= 7:
        return CapResult(SMALL_R_CAP, CapCase.SMALL_R, exact=True)
    ratio, target = _targets(L)
    if ratio is Ratio.EQUAL:
        n = (2 * L.a * L.a - 1) / (2 * L.a)
        return CapResult(math.ceil(n), CapCase.RATIO_EQUAL, exact=True, value=n)
    if ratio is Ratio.LESS:
        # (6 + sqrt(2(r-8)t^2 + 4(r+1))) / (t^2 + 2) < target
        def curve(t):
            return QuadSurd(6, 1, 2 * (r - 8) * t * t + 4 * (r + 1), t * t + 2)

        majorant = 6 + _ceil_sqrt(2 * (r - 8)) + 2 * _ceil_sqrt(r + 1)
        return CapResult(_last_failure(curve, target, majorant), CapCase.RATIO_LESS)
    if r == 8:
        log.warning("ratio > 3 at r = 8 should be impossible for an ample L: %s", L)
        return CapResult(SMALL_R_CAP, CapCase.UNDEFINED)

    def curve(t):
        return QuadSurd(-6, 1, 2 * (r - 8) * t * t + 4 * (r + 1), t * t + 2)

    majorant = _ceil_sqrt(2 * (r - 8)) + 2 * _ceil_sqrt(r + 1)
    return CapResult(_last_failure(curve, target, majorant), CapCase.RATIO_GREATER)
