"""Generate (-1)- and (-2)-classes as Weyl group orbits.

The group is generated by coordinate permutations of ``beta`` and the
quadratic Cremona reflection on three coordinates.  This is an independent
route to the sets produced by :mod:`seshadri.enumeration` and is used to
cross-check them.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .enumeration import TailMode, expand, phi_set, psi_set
from .errors import InputError
from .lattice import ClassVector

SLACK = 4


class Seed(enum.Enum):
    PHI = "phi"  # orbit of an exceptional curve
    PSI = "psi"  # orbit of a difference of two exceptional curves

    def vector(self, s: int) -> ClassVector:
        beta = [0] * s
        beta[0] = -1
        if self is Seed.PSI:
            if s < 2:
                raise InputError("the (-2) seed needs s >= 2")
            beta[1] = 1
        return ClassVector(0, tuple(beta))


def apply_cremona(u: ClassVector, i: int, j: int, k: int) -> ClassVector:
    """Quadratic transformation centred at points i, j, k (1-based)."""
    if u.s < 3:
        raise InputError("Cremona undefined for s < 3")
    if len({i, j, k}) != 3 or not all(1 <= t <= u.s for t in (i, j, k)):
        raise InputError(f"need three distinct indices in 1..{u.s}, got {(i, j, k)}")
    x, b = u.alpha, list(u.beta)
    bi, bj, bk = b[i - 1], b[j - 1], b[k - 1]
    b[i - 1] = x - bj - bk
    b[j - 1] = x - bi - bk
    b[k - 1] = x - bi - bj
    return ClassVector(2 * x - bi - bj - bk, tuple(b))


def _canonical(alpha: int, beta) -> tuple[int, tuple[int, ...]]:
    return alpha, tuple(sorted(beta, reverse=True))


def _neighbours(alpha: int, beta: tuple[int, ...]):
    seen = set()
    for i, j, k in combinations(range(len(beta)), 3):
        key = (beta[i], beta[j], beta[k])
        if key in seen:  # equal values give the same canonical image
            continue
        seen.add(key)
        bi, bj, bk = key
        nb = list(beta)
        nb[i], nb[j], nb[k] = alpha - bj - bk, alpha - bi - bk, alpha - bi - bj
        yield _canonical(2 * alpha - bi - bj - bk, nb)


def orbit_representatives(seed: Seed, s: int, alpha_max: int | None) -> set[tuple[int, tuple[int, ...]]]:
    """Breadth-first closure of the seed over canonical (sorted) representatives.

    With ``alpha_max`` set, nodes outside ``0 <= alpha <= SLACK * alpha_max``
    are not expanded.  ``alpha_max=None`` explores the whole orbit, which is
    finite only for ``s <= 8``.
    """
    if alpha_max is None and s > 8:
        raise InputError("the orbit is infinite for s > 8; give alpha_max")
    limit = None if alpha_max is None else SLACK * alpha_max
    v = seed.vector(s)
    start = _canonical(v.alpha, v.beta)
    visited = {start}
    frontier = deque([start])
    while frontier:
        alpha, beta = frontier.popleft()
        if s < 3:
            continue
        for nxt in _neighbours(alpha, beta):
            if nxt in visited:
                continue
            if limit is not None and not 0 <= nxt[0] <= limit:
                continue
            visited.add(nxt)
            frontier.append(nxt)
    return visited


def orbit_enumerate(seed: Seed, s: int, alpha_max: int | None,
                    tail_mode: TailMode = TailMode.TAIL_GE_ONE) -> list[ClassVector]:
    """Orbit elements with ``0 <= alpha <= alpha_max``, sorted lexicographically.

    With ``alpha_max=None`` every orbit element is returned (s <= 8 only).
    For s <= 2 there is no Cremona generator and the permutation orbit misses
    classes such as (1;1,1), so the Diophantine enumeration is returned instead.
    """
    if s < 1:
        raise InputError("s must be positive")
    if s <= 2:
        if alpha_max is None:
            alpha_max = 1  # every (-1)- or (-2)-class on two points has alpha <= 1
        direct = phi_set if seed is Seed.PHI else psi_set
        return direct(s, alpha_max, tail_mode)
    found = []
    for alpha, beta in orbit_representatives(seed, s, alpha_max):
        if alpha_max is not None and not 0 <= alpha <= alpha_max:
            continue
        found.extend((alpha, *v) for v in expand(beta, tail_mode))
    found.sort()
    return [ClassVector(t[0], t[1:]) for t in found]


@dataclass
class CrosscheckReport:
    s: int
    alpha_max: int
    phi_equal: bool
    psi_equal: bool
    diffs: dict = field(default_factory=dict)


def crosscheck(s: int, alpha_max: int, tail_mode: TailMode = TailMode.TAIL_GE_ONE) -> CrosscheckReport:
    """Compare the orbit construction with the Diophantine enumeration."""
    if s < 3:
        raise InputError("crosscheck needs s >= 3; for s <= 2 the Diophantine enumeration is authoritative")
    diffs = {}
    equal = {}
    for name, seed, direct in (("phi", Seed.PHI, phi_set), ("psi", Seed.PSI, psi_set)):
        orbit = set(orbit_enumerate(seed, s, alpha_max, tail_mode))
        dioph = set(direct(s, alpha_max, tail_mode))
        equal[name] = orbit == dioph
        if orbit != dioph:
            diffs[name] = {
                "orbit_only": sorted(orbit - dioph),
                "enumeration_only": sorted(dioph - orbit),
            }
    return CrosscheckReport(s, alpha_max, equal["phi"], equal["psi"], diffs)
