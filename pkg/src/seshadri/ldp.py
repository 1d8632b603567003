"""Log del Pezzo surfaces obtained by contracting curves on a 5-point blow-up of P2.

Five points on a line are blown up, grouped into blocks of infinitely near
points.  The strict transform of the line is a (-4)-curve and every block of
length k contributes a chain of k-1 (-2)-curves ``E_i - E_{i+1}``.  Contracting
them gives a surface Z whose anticanonical class pulls back to
``-K_Y - sum(a_i F_i)``; the Seshadri constant at a general point is computed
on Y from that rational divisor.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import EpsResult, eps_gen
from .errors import InconsistencyError, InputError
from .lattice import ClassVector, Pencil, Polarization, SurfaceSpec, anticanonical, degK, pair

POINTS = 5
SEVEN_TUPLES = ((1, 1, 1, 1, 1), (2, 1, 1, 1), (3, 1, 1), (2, 2, 1), (3, 2), (4, 1), (5,))


@dataclass(frozen=True)
class ResolutionConfig:
    k: tuple[int, ...]
    curves: tuple[ClassVector, ...]
    intersection_matrix: tuple[tuple[int, ...], ...]


def build_configuration(k) -> ResolutionConfig:
    k = tuple(k)
    if not k or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in k):
        raise InputError("block lengths must be positive integers")
    if sum(k) != POINTS:
        raise InputError(f"block lengths must sum to {POINTS}, got {sum(k)}")
    curves = [ClassVector(1, (1,) * POINTS)]
    start = 0
    for length in k:
        for i in range(start, start + length - 1):
            beta = [0] * POINTS
            beta[i], beta[i + 1] = -1, 1
            curves.append(ClassVector(0, tuple(beta)))
        start += length
    matrix = tuple(tuple(pair(u, v) for v in curves) for u in curves)
    return ResolutionConfig(k, tuple(curves), matrix)


def _solve(matrix, rhs) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if pivot is None:
            raise InconsistencyError("singular intersection matrix")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return [row[n] for row in rows]


def discrepancies(cfg: ResolutionConfig) -> tuple[Fraction, ...]:
    """Coefficients a_i with ``(K_Y + sum(a_i F_i)).F_j = 0`` for every j."""
    rhs = [degK(f) for f in cfg.curves]  # -K_Y . F_j
    a = _solve(cfg.intersection_matrix, rhs)
    for j, f in enumerate(cfg.curves):
        residual = sum(a[i] * cfg.intersection_matrix[i][j] for i in range(len(a))) - degK(f)
        if residual != 0:
            raise InconsistencyError(f"nonzero residual {residual} for curve {f}")
    if not all(0 <= x < 1 for x in a):
        raise InconsistencyError(f"discrepancies {a} are not log terminal")
    return tuple(a)


def pullback_anticanonical(cfg: ResolutionConfig) -> Polarization:
    """``-K_Y - sum(a_i F_i)`` as a rational divisor on Y."""
    a = discrepancies(cfg)
    alpha = Fraction(3)
    beta = [Fraction(1)] * POINTS
    for ai, f in zip(a, cfg.curves):
        alpha -= ai * f.alpha
        beta = [x - ai * y for x, y in zip(beta, f.beta)]
    return Polarization(SurfaceSpec.p2(POINTS, Pencil.AUTO), alpha, tuple(beta))


def eps_gen_ldp(k) -> EpsResult:
    return eps_gen(pullback_anticanonical(build_configuration(k)))


def a_r_table(r: int) -> Fraction:
    """Seshadri constant of ``-K`` at a general point of P2 blown up at r general points."""
    if isinstance(r, bool) or not isinstance(r, int) or not 1 <= r <= 8:
        raise InputError("r must be an integer in 1..8")
    return eps_gen(Polarization(SurfaceSpec.p2(r), anticanonical(r).alpha, anticanonical(r).beta)).value
