"""Exhaustive enumeration of (-1)- and (-2)-classes on blow-ups of P2.

The search runs over non-increasing multisets of ``beta`` values with
branch-and-bound on the remaining linear and quadratic budgets, then expands
each multiset to the ordered vectors it represents.
"""
from __future__ import annotations

import enum
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InputError
from .lattice import ClassVector

log = logging.getLogger(__name__)

PHI = (-1, 1)  # (self-intersection, -K degree) of a (-1)-class
PSI = (-2, 0)


class TailMode(enum.Enum):
    TAIL_GE_ONE = "ge1"  # last coordinate >= 1
    ALL = "all"


@dataclass(frozen=True)
class ClassQuery:
    s: int
    selfint: int
    degk: int
    alpha_max: int
    tail_mode: TailMode = TailMode.TAIL_GE_ONE

    def __post_init__(self):
        if (self.selfint, self.degk) not in (PHI, PSI):
            raise InputError(f"unsupported family (selfint, degk) = {(self.selfint, self.degk)}")
        if self.alpha_max < 0:
            raise InputError("alpha_max must be nonnegative")
        if self.s < 0:
            raise InputError("s must be nonnegative")


def _fill(k: int, rs: int, rq: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing k-tuples with entries <= hi, sum rs and square sum rq."""
    if k == 1:
        if rs <= hi and rs * rs == rq:
            yield (rs,)
        return
    top = min(hi, math.isqrt(rq))
    bottom = max(-(-rs // k), -math.isqrt(rq))  # the first entry is the largest
    for v in range(top, bottom - 1, -1):
        ns, nq = rs - v, rq - v * v
        # Cauchy-Schwarz on the tail, and sum of squares >= |sum| for integers
        if ns * ns > (k - 1) * nq or nq < abs(ns):
            continue
        for rest in _fill(k - 1, ns, nq, v):
            yield (v, *rest)


@lru_cache(maxsize=4096)
def class_multisets(s: int, selfint: int, degk: int, alpha: int) -> tuple[tuple[int, ...], ...]:
    """All non-increasing ``beta`` of length s for one value of alpha.

    Solutions of ``alpha^2 - sum(beta^2) = selfint`` and
    ``3*alpha - sum(beta) = degk``, in decreasing lexicographic order.
    """
    if s <= 0:
        return ()
    rs = 3 * alpha - degk
    rq = alpha * alpha - selfint
    if rq < 0 or rs * rs > s * rq or (rs - rq) % 2:
        return ()
    return tuple(_fill(s, rs, rq, math.isqrt(rq)))


def _multisets_for(args):
    s, selfint, degk, alpha = args
    return alpha, class_multisets(s, selfint, degk, alpha)


def multisets_upto(s: int, selfint: int, degk: int, alpha_max: int, *,
                   alpha_min: int = 0, workers: int = 1) -> list[tuple[int, tuple[int, ...]]]:
    """``(alpha, beta_multiset)`` pairs for ``alpha_min <= alpha <= alpha_max``, in alpha order."""
    jobs = [(s, selfint, degk, alpha) for alpha in range(alpha_min, alpha_max + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_multisets_for, jobs))
    else:
        results = [_multisets_for(job) for job in jobs]
    out = []
    for alpha, sets in results:  # pool.map preserves job order
        out.extend((alpha, beta) for beta in sets)
    return out


def distinct_permutations(values) -> Iterator[tuple]:
    """Distinct orderings of a multiset, in increasing lexicographic order."""
    counts = Counter(values)
    keys = sorted(counts)
    n = len(values)
    out: list = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    yield from rec()


def expand(beta: tuple[int, ...], tail_mode: TailMode) -> Iterator[tuple[int, ...]]:
    """Ordered vectors with the multiset ``beta``, filtered by the tail rule."""
    if tail_mode is TailMode.ALL:
        yield from distinct_permutations(beta)
        return
    for last in sorted(set(beta)):
        if last < 1:
            continue
        rest = list(beta)
        rest.remove(last)
        for head in distinct_permutations(rest):
            yield (*head, last)


def _check_no_negative_phi(s: int, alpha_max: int) -> None:
    for alpha in range(-alpha_max, 0):
        assert not class_multisets(s, *PHI, alpha), f"(-1)-class with alpha={alpha} for s={s}"


def enumerate_classes(q: ClassQuery, *, workers: int = 1) -> list[ClassVector]:
    """Every integer class matching the query, sorted by ``(alpha, beta_1, ...)``."""
    if q.s == 0:
        return []
    if log.isEnabledFor(logging.DEBUG) and (q.selfint, q.degk) == PHI:
        _check_no_negative_phi(q.s, q.alpha_max)
    found = []
    for alpha, beta in multisets_upto(q.s, q.selfint, q.degk, q.alpha_max, workers=workers):
        found.extend((alpha, *v) for v in expand(beta, q.tail_mode))
    found.sort()
    log.debug("enumerated %d classes for %s", len(found), q)
    return [ClassVector(t[0], t[1:]) for t in found]


def phi_set(s: int, alpha_max: int, tail_mode: TailMode = TailMode.TAIL_GE_ONE, *,
            workers: int = 1) -> list[ClassVector]:
    return enumerate_classes(ClassQuery(s, *PHI, alpha_max, tail_mode), workers=workers)


def psi_set(s: int, alpha_max: int, tail_mode: TailMode = TailMode.TAIL_GE_ONE, *,
            workers: int = 1) -> list[ClassVector]:
    return enumerate_classes(ClassQuery(s, *PSI, alpha_max, tail_mode), workers=workers)
