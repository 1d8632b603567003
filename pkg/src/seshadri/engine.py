"""Seshadri constants on rational surfaces with an anticanonical pencil.

The constant at a point is the minimum of a few families of terms:

* ``A``: (-1)-classes on the blow-up at the point, ``(alpha*a - beta.b) / beta_x``;
* ``B``: (-2)-classes asserted to pass through the point with the right incidence;
* ``C``: negative curves of self-intersection <= -2 through the point, ``L.C``;
* the anticanonical degree ``3a - sum(b)``, halved when the point is the
  singular point of an irreducible anticanonical curve (8 or 9 points only).

Point-specific geometry cannot be read off the numbers, so it comes in through
an :class:`IncidenceOracle` supplied by the caller.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bounds import CapResult, m_bound, n_bound
from .enumeration import PHI, TailMode, expand, multisets_upto
from .errors import InconsistencyError, InputError
from .lattice import (
    Base,
    ClassType,
    ClassVector,
    Pencil,
    Polarization,
    Ratio,
    SurfaceSpec,
    anticanonical_degree,
    classify,
    degK,
    fn_pair,
    pair,
    primitive_normalize,
    ratio_vs_3,
    self_intersection,
)

log = logging.getLogger(__name__)

# witness kinds
A_CLASS = "A-class"
B_CLASS = "B-class"
C_CURVE = "C-curve"
ANTICANONICAL = "AntiCanonicalTerm"
Z_TERM = "ZTerm"
FIBER = "FiberTerm"
LINE = "LineTerm"

_KIND_ORDER = {A_CLASS: 0, B_CLASS: 1, C_CURVE: 2, FIBER: 3, LINE: 3, ANTICANONICAL: 4, Z_TERM: 5}


@dataclass(frozen=True)
class IncidenceOracle:
    """Caller-asserted facts about the point x.

    ``psi_witnesses`` are (-2)-classes on the blow-up at x (``s = r + 1``) whose
    incidence condition holds at x; ``fixed_curves`` are classes on X (``s = r``)
    of curves with self-intersection <= -2 through x.  On a Hirzebruch surface
    with few points the fixed curves are read as ``alpha*h + beta[0]*f - sum(beta[i]*E_i)``.
    """

    in_Z: bool = False
    psi_witnesses: tuple[ClassVector, ...] = ()
    fixed_curves: tuple[ClassVector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "psi_witnesses", tuple(self.psi_witnesses))
        object.__setattr__(self, "fixed_curves", tuple(self.fixed_curves))

    @classmethod
    def from_dict(cls, doc: dict) -> IncidenceOracle:
        def vectors(key):
            out = []
            for item in doc.get(key, []) or []:
                try:
                    out.append(ClassVector(int(item["alpha"]), tuple(int(x) for x in item["beta"])))
                except (KeyError, TypeError, ValueError) as exc:
                    raise InputError(f"malformed {key} entry: {item!r}") from exc
            return tuple(out)

        if not isinstance(doc, dict):
            raise InputError("oracle document must be an object")
        unknown = set(doc) - {"in_Z", "psi_witnesses", "fixed_curves"}
        if unknown:
            raise InputError(f"unknown oracle fields: {sorted(unknown)}")
        in_z = doc.get("in_Z", False)
        if not isinstance(in_z, bool):
            raise InputError("in_Z must be a boolean")
        return cls(in_z, vectors("psi_witnesses"), vectors("fixed_curves"))

    @property
    def empty(self) -> bool:
        return not (self.in_Z or self.psi_witnesses or self.fixed_curves)


@dataclass(frozen=True)
class Witness:
    kind: str
    vector: ClassVector | tuple | None = None


@dataclass(frozen=True)
class EpsResult:
    value: Fraction
    witness: Witness
    case_tag: str
    caps: dict = field(default_factory=dict)
    terms: dict = field(default_factory=dict)
    scale: Fraction = Fraction(1)
    primitive: Polarization | None = None


def validate_oracle(L: Polarization, oracle: IncidenceOracle) -> None:
    """Arithmetic sanity of the oracle for a P2 problem with r points."""
    r = L.r
    if oracle.in_Z and r not in (8, 9):
        raise InputError(f"x in Z is only possible for r = 8, 9 (got r = {r})")
    for w in oracle.psi_witnesses:
        if w.s != r + 1:
            raise InputError(f"psi witness {w} must have {r + 1} beta entries")
        if classify(w) is not ClassType.MINUS_TWO or w.beta[-1] < 1:
            raise InputError(f"psi witness {w} is not a (-2)-class with last entry >= 1")
    for c in oracle.fixed_curves:
        if c.s != r:
            raise InputError(f"fixed curve {c} must have {r} beta entries")
        sq = pair(c, c)
        if sq > -2 or sq + degK(c) != -2:
            raise InputError(f"fixed curve {c} is not a (-m)-class with m >= 2")


# ---------------------------------------------------------------- A, B, C terms

def _groups(b: Sequence[Fraction]) -> list[list[int]]:
    """Positions grouped by equal weight, heaviest group first."""
    order = sorted(range(len(b)), key=lambda i: (-b[i], i))
    groups: list[list[int]] = []
    for i in order:
        if groups and b[groups[-1][0]] == b[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _best_arrangement(values: Sequence[int], groups: list[list[int]], n: int) -> tuple[int, ...]:
    """Lexicographically smallest placement of ``values`` (non-increasing) that pairs
    larger values with larger weights."""
    out = [0] * n
    pos = 0
    for grp in groups:
        chunk = sorted(values[pos:pos + len(grp)])
        for i, v in zip(sorted(grp), chunk):
            out[i] = v
        pos += len(grp)
    return tuple(out)


def _max_pairing(values: Sequence[int], b_sorted: Sequence[Fraction]) -> Fraction:
    return sum((v * w for v, w in zip(values, b_sorted)), Fraction(0))


def a_min(L: Polarization, cap: int, *, workers: int = 1) -> tuple[Fraction, ClassVector] | None:
    """Minimum of ``(alpha*a - sum(beta_i*b_i)) / beta_{r+1}`` over (-1)-classes
    on the (r+1)-point blow-up with ``beta_{r+1} >= 1`` and ``alpha <= cap``.

    For each multiset of ``beta`` values only the arrangement sorted along ``b``
    can be optimal, so the search never expands orderings.
    """
    r = L.r
    b = L.c
    b_sorted = sorted(b, reverse=True)
    best: Fraction | None = None
    achievers: list[tuple[int, tuple[int, ...], int]] = []
    for alpha, beta in multisets_upto(r + 1, *PHI, cap, workers=workers):
        for last in sorted(set(beta)):
            if last < 1:
                continue
            rest = list(beta)
            rest.remove(last)
            value = (alpha * L.a - _max_pairing(rest, b_sorted)) / last
            if best is None or value < best:
                best, achievers = value, [(alpha, tuple(rest), last)]
            elif value == best:
                achievers.append((alpha, tuple(rest), last))
    if best is None:
        return None
    groups = _groups(b)
    witness = min((alpha, *_best_arrangement(rest, groups, r), last) for alpha, rest, last in achievers)
    return best, ClassVector(witness[0], witness[1:])


def _ratio(L: Polarization, w: ClassVector) -> Fraction:
    head = ClassVector(w.alpha, w.beta[:-1])
    return L.dot(head) / w.beta[-1]


def b_min(L: Polarization, oracle: IncidenceOracle) -> tuple[Fraction, ClassVector] | None:
    """Minimum ratio over the asserted (-2)-classes through the point."""
    best = None
    for w in oracle.psi_witnesses:
        if w.s != L.r + 1 or classify(w) is not ClassType.MINUS_TWO or w.beta[-1] < 1:
            raise InputError(f"malformed psi witness {w}")
        value = _ratio(L, w)
        if value <= 0:
            raise InconsistencyError(f"oracle inconsistent with ampleness: psi witness {w} gives {value}")
        if best is None or (value, w) < best:
            best = (value, w)
    return best


def c_min(L: Polarization, oracle: IncidenceOracle) -> tuple[Fraction, ClassVector] | None:
    """Minimum of ``L.C`` over asserted negative curves through the point."""
    best = None
    for c in oracle.fixed_curves:
        if c.s != L.r:
            raise InputError(f"malformed fixed curve {c}")
        value = L.dot(c)
        if value <= 0:
            raise InconsistencyError(f"oracle inconsistent with ampleness: curve {c} has L.C = {value}")
        if best is None or (value, c) < best:
            best = (value, c)
    return best


# ---------------------------------------------------------------- ampleness

@dataclass
class AmpleReport:
    passed: bool
    violations: list = field(default_factory=list)
    cap: int | None = None


def check_ample_necessary(L: Polarization, *, cap: int | None = None, workers: int = 1) -> AmpleReport:
    """Necessary conditions for ampleness: ``L^2 > 0``, ``-K.L > 0`` and
    positivity on every (-1)-class of X (plus the ruling when r = 1).

    For at most eight points in general position these conditions are also
    sufficient.  Special positions can add (-2)-curves or fixed anticanonical
    components that this test does not see.
    """
    violations = []
    lsq = self_intersection(L)
    if lsq <= 0:
        violations.append({"kind": "self-intersection", "vector": None, "value": lsq})
    k = anticanonical_degree(L)
    if k <= 0:
        violations.append({"kind": "anticanonical", "vector": None, "value": k})
    if L.is_hirzebruch:
        n = L.surface.n
        zeros = (0,) * L.r
        curves = [("section", (1, 0) + zeros), ("fiber", (0, 1) + zeros)]
        for i in range(L.r):
            e = [0] * (L.r + 2)
            e[1], e[i + 2] = 1, 1
            curves.append(("fiber-minus-exceptional", tuple(e)))
        for kind, vec in curves:
            value = fn_pair(n, vec, L.entries())
            if value <= 0:
                violations.append({"kind": kind, "vector": vec, "value": value})
        for i, c in enumerate(L.c):
            if c <= 0:
                e = [0] * (L.r + 2)
                e[i + 2] = -1
                violations.append({"kind": "exceptional", "vector": tuple(e), "value": c})
        return AmpleReport(not violations, violations, None)

    r = L.r
    if r == 0:
        return AmpleReport(not violations, violations, None)
    if cap is None:
        cap = 6
        if not violations:
            bound = m_bound(L)
            cap = max(cap, bound.cap)
    b_sorted = sorted(L.b, reverse=True)
    tests = []
    for alpha, beta in multisets_upto(r, *PHI, cap, workers=workers):
        # the worst ordering pairs large beta with large b; expand only if it fails
        if alpha * L.a - _max_pairing(beta, b_sorted) > 0:
            continue
        tests.extend(ClassVector(alpha, v) for v in expand(beta, TailMode.ALL))
    if r == 1:
        tests.append(ClassVector(1, (1,)))
    for d in sorted(tests):
        value = L.dot(d)
        if value <= 0:
            violations.append({"kind": "class", "vector": d, "value": value})
    return AmpleReport(not violations, violations, cap)


def _require_ample(L: Polarization, cap: int | None, workers: int) -> None:
    report = check_ample_necessary(L, cap=cap, workers=workers)
    if not report.passed:
        first = report.violations[0]
        if first["vector"] is None:
            raise InputError(f"not ample: {first['kind']} degree is {first['value']}")
        raise InputError(f"not ample: {first['kind']} {first['vector']} has intersection {first['value']} with L")


# ---------------------------------------------------------------- main formula

def _pick(terms: list[tuple[Fraction, str, object]]) -> tuple[Fraction, Witness]:
    value = min(t[0] for t in terms)
    tied = [t for t in terms if t[0] == value]
    tied.sort(key=lambda t: (_KIND_ORDER[t[1]], t[2].as_tuple() if isinstance(t[2], ClassVector) else ()))
    return value, Witness(tied[0][1], tied[0][2])


def _check_result(L: Polarization, value: Fraction) -> None:
    if value <= 0:
        raise InconsistencyError(f"non-positive Seshadri value {value}")
    if value > anticanonical_degree(L) or value * value > self_intersection(L):
        raise InconsistencyError(
            f"value {value} exceeds a universal bound (-K.L = {anticanonical_degree(L)}, "
            f"L^2 = {self_intersection(L)}); the input violates the standing hypotheses"
        )


def _caps(L0: Polarization, alpha_cap: int | None, unsafe_cap: bool) -> tuple[CapResult, CapResult, int]:
    m, n = m_bound(L0), n_bound(L0)
    cap = m.cap
    if alpha_cap is not None:
        cap = alpha_cap if unsafe_cap else max(alpha_cap, m.cap)
    return m, n, cap


def eps_at_point(L: Polarization, oracle: IncidenceOracle | None = None, *,
                 alpha_cap: int | None = None, unsafe_cap: bool = False, workers: int = 1) -> EpsResult:
    """Seshadri constant of L at a point described by ``oracle``.

    Accepts non-primitive and rational L (the result scales linearly) and
    Hirzebruch bases.  With an empty oracle this is the value at a very
    general point.
    """
    oracle = oracle or IncidenceOracle()
    if L.is_hirzebruch:
        n = L.surface.n
        if L.r <= n - 2:
            return eps_fn_direct(L, oracle)
        return eps_at_point(transform_fn_to_p2(L), oracle,
                            alpha_cap=alpha_cap, unsafe_cap=unsafe_cap, workers=workers)

    validate_oracle(L, oracle)
    L0, k = primitive_normalize(L)
    r = L0.r
    if r == 0:
        if L0.a <= 0:
            raise InputError("not ample: a <= 0")
        return EpsResult(k * L0.a, Witness(LINE, ClassVector(1, (1,))), "P2-lines",
                         terms={"line": k * L0.a}, scale=k, primitive=L0)
    if r >= 9 and L0.surface.pencil is not Pencil.ASSERTED:
        raise InputError("r >= 9 needs an asserted anticanonical pencil")
    _require_ample(L0, None, workers)

    ratio = ratio_vs_3(L0)
    m, n, cap = _caps(L0, alpha_cap, unsafe_cap)
    antik = anticanonical_degree(L0)
    special = r in (8, 9)
    include_a = not (special and ratio is not Ratio.LESS)

    terms: list[tuple[Fraction, str, object]] = []
    found = {}
    if include_a:
        a_term = a_min(L0, cap, workers=workers)
        if a_term:
            terms.append((a_term[0], A_CLASS, a_term[1]))
            found["A"] = a_term[0]
    if oracle.in_Z:
        terms.append((antik / 2, Z_TERM, None))
        found["Z"] = antik / 2
        case = "case1-Z" if ratio is Ratio.LESS else "case2-Z"
    else:
        b_term, c_term = b_min(L0, oracle), c_min(L0, oracle)
        if b_term:
            terms.append((b_term[0], B_CLASS, b_term[1]))
            found["B"] = b_term[0]
        if c_term:
            terms.append((c_term[0], C_CURVE, c_term[1]))
            found["C"] = c_term[0]
        case = ("case1" if ratio is Ratio.LESS else "case2") if special else "case3"
    # -K of the blow-up at x is effective, so this bound is always valid
    terms.append((antik, ANTICANONICAL, None))
    found["anticanonical"] = antik

    value, witness = _pick(terms)
    if unsafe_cap:
        log.warning("unsafe cap %d in use; the value %s is only an upper bound", cap, value)
    else:
        _check_result(L0, value)
    caps = {"m_cap": cap, "n_cap": n.cap, "m_case": m.case_tag.value, "n_case": n.case_tag.value}
    return EpsResult(value * k, witness, case, caps,
                     {key: v * k for key, v in found.items()}, k, L0)


def eps_gen(L: Polarization, **kwargs) -> EpsResult:
    """Seshadri constant at a very general point."""
    return eps_at_point(L, IncidenceOracle(), **kwargs)


# ---------------------------------------------------------------- Hirzebruch bases

def transform_fn_to_p2(L: Polarization) -> Polarization:
    """Rewrite ``a*h + b*f - sum(c_i*E_i)`` on F_n blown up at r >= n-1 points
    as a divisor on P2 blown up at r+1 points.

    The first n-1 points are placed off the negative section on distinct
    fibres, which realizes the surface as a blow-up of P2.
    """
    if not L.is_hirzebruch:
        raise InputError("transform_fn_to_p2 needs a Hirzebruch polarization")
    n, r = L.surface.n, L.r
    if r < n - 1:
        raise InputError(f"need r >= n-1 = {n - 1} points for the reduction to P2; use the direct branch")
    a, b, c = L.a, L.b[0], L.c
    head = sum(c[: n - 1], Fraction(0))
    new_b = (-a + b - head, *(a - ci for ci in c[: n - 1]), *c[n - 1:])
    return Polarization(SurfaceSpec.p2(r + 1, Pencil.ASSERTED), b - head, new_b)


def eps_fn_direct(L: Polarization, oracle: IncidenceOracle | None = None) -> EpsResult:
    """F_n blown up at r <= n-2 points: the fibre through x or a negative curve through x."""
    oracle = oracle or IncidenceOracle()
    if not L.is_hirzebruch or L.r > L.surface.n - 2:
        raise InputError("the direct branch needs a Hirzebruch base with r <= n-2")
    if oracle.in_Z or oracle.psi_witnesses:
        raise InputError("only fixed_curves are meaningful on the direct Hirzebruch branch")
    L0, k = primitive_normalize(L)
    _require_ample(L0, None, 1)
    n = L0.surface.n
    fiber = (0, 1) + (0,) * L0.r
    terms = [(fn_pair(n, fiber, L0.entries()), FIBER, ClassVector(0, fiber[1:]))]
    for curve in oracle.fixed_curves:
        coeffs = curve.as_tuple()
        if len(coeffs) != L0.r + 2:
            raise InputError(f"curve {curve} needs {L0.r + 1} entries after alpha")
        if fn_pair(n, coeffs, coeffs) > -1:
            raise InputError(f"curve {curve} does not have negative self-intersection")
        value = fn_pair(n, coeffs, L0.entries())
        if value <= 0:
            raise InconsistencyError(f"oracle inconsistent with ampleness: curve {curve} has L.C = {value}")
        terms.append((value, C_CURVE, curve))
    value, witness = _pick(terms)
    return EpsResult(value * k, witness, "fn-direct", {}, {"fiber": terms[0][0] * k}, k, L0)
