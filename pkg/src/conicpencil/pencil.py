"""Classification of pencils a*p + b*q of two quadratic forms.

The determinant cubic det(a*M(p) + b*M(q)) decides everything: its projective
roots are exactly the factorizable members.  When it vanishes identically the
whole pencil splits, and one of two structural reasons must hold:

* the generators share a linear factor, or
* the four factor lines of p and q pass through one point, so that p and q
  are binary forms in two linear forms through that point.

Both witnesses are computed independently of the cubic and cross-checked.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import (
    DEFAULT_TOLERANCE,
    BinaryCubic,
    BivariateQuadratic,
    Direction,
    LinearForm2,
    LinearForm3,
    Point3,
    TernaryQuadratic,
    Tolerance,
    cross,
    det3,
    det_pencil_cubic,
    homogenize,
    magnitude,
    proportional,
)
from .errors import (
    DegreeTooLow,
    DependentGenerators,
    InternalInconsistency,
    NotDegenerate,
    PreconditionFailed,
)
from .factorizer import SplitPair, factor_ternary_quadratic, is_degenerate


class Verdict(str, enum.Enum):
    ALL_FACTORIZABLE = "ALL_FACTORIZABLE"
    FINITE = "FINITE"


class Reason(str, enum.Enum):
    COMMON_FACTOR = "COMMON_FACTOR"
    CONCURRENT_LINES = "CONCURRENT_LINES"


class BivariateReason(str, enum.Enum):
    A_PRIME = "A_PRIME"
    B_PRIME = "B_PRIME"
    C_PRIME = "C_PRIME"


class LineGeometry(str, enum.Enum):
    COMMON_FACTOR = "COMMON_FACTOR"
    PARALLEL = "PARALLEL"
    COINCIDENT = "COINCIDENT"


ALL = Verdict.ALL_FACTORIZABLE


@dataclass(frozen=True)
class FactorizableDirection:
    direction: Direction
    factors: SplitPair


@dataclass(frozen=True)
class PencilReport:
    verdict: Verdict
    reasons: tuple[Reason, ...]
    det_cubic: BinaryCubic
    common_line: LinearForm3 | None = None
    concurrency_point: Point3 | None = None
    directions: tuple[FactorizableDirection, ...] = ()
    generator_factors: tuple[SplitPair, SplitPair] | None = None


@dataclass(frozen=True)
class BivariateReport:
    verdict: Verdict
    reasons: tuple[BivariateReason, ...]
    homogeneous: PencilReport
    line_geometry: LineGeometry | None = None
    common_line: LinearForm2 | None = None
    # (s, t) with p = f(s, t), q = g(s, t); for B_PRIME t is the constant 1
    b_prime_forms: tuple[LinearForm2, LinearForm2] | None = None
    c_prime_forms: tuple[LinearForm2, LinearForm2] | None = None

    @property
    def directions(self) -> tuple[FactorizableDirection, ...]:
        return self.homogeneous.directions

    @property
    def concurrency_point(self) -> Point3 | None:
        return self.homogeneous.concurrency_point

    @property
    def det_cubic(self) -> BinaryCubic:
        return self.homogeneous.det_cubic


@dataclass(frozen=True)
class ProductPencilCheck:
    holds: bool
    reasons: tuple[Reason, ...]
    report: PencilReport


# --------------------------------------------------------------------------
# structural probes


def check_linear_independence(p: TernaryQuadratic, q: TernaryQuadratic,
                              tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    if p.is_zero() or q.is_zero():
        return False
    return not proportional(p.coefficients, q.coefficients, tol)


def _shared_line(fp: SplitPair, fq: SplitPair, tol: Tolerance) -> LinearForm3 | None:
    for a in fp.lines():
        for b in fq.lines():
            if a.same_line(b, tol):
                return a.normalized()
    return None


def check_common_line(p: TernaryQuadratic, q: TernaryQuadratic,
                      tol: Tolerance = DEFAULT_TOLERANCE) -> LinearForm3 | None:
    """A line dividing both p and q, if there is one.  Both must be degenerate."""
    return _shared_line(factor_ternary_quadratic(p, tol),
                        factor_ternary_quadratic(q, tol), tol)


def check_concurrency(lines: Sequence[LinearForm3],
                      tol: Tolerance = DEFAULT_TOLERANCE) -> Point3 | None:
    """Common point of the lines, or None when their coefficient matrix has rank 3."""
    rows = [[c / magnitude(l.coefficients) for c in l.coefficients] for l in lines]
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if not tol.is_zero(det3([rows[i], rows[j], rows[k]])):
                    return None
    best, best_size = None, 0.0
    for i in range(n):
        for j in range(i + 1, n):
            c = cross(rows[i], rows[j])
            if magnitude(c) > best_size:
                best, best_size = c, magnitude(c)
    if best is None or tol.is_zero(best_size):
        # all lines coincide: any point of that line will do
        line = rows[0]
        k = min(range(3), key=lambda i: abs(line[i]))
        e = [0, 0, 0]
        e[k] = 1
        best = cross(line, e)
    return Point3(*best).normalized()


# --------------------------------------------------------------------------
# roots of the determinant cubic


def _pow2_scale(s: float) -> float:
    # exact rescaling keeps axis and rational roots bit-stable
    return 2.0 ** math.ceil(math.log2(max(s, 1.0)))


def _horner(coefs: Sequence[complex], t: complex) -> complex:
    acc = 0j
    for c in coefs:
        acc = acc * t + c
    return acc


def _polish(coefs: Sequence[complex], t: complex, steps: int = 8) -> complex:
    """Newton refinement in whichever chart keeps the root inside the unit disc."""
    flip = abs(t) > 1
    poly = list(reversed(coefs)) if flip else list(coefs)
    u = 1 / t if flip else t
    deriv = [c * (len(poly) - 1 - k) for k, c in enumerate(poly[:-1])]
    best, best_res = u, abs(_horner(poly, u))
    for _ in range(steps):
        d = _horner(deriv, u)
        if d == 0:
            break
        u = u - _horner(poly, u) / d
        res = abs(_horner(poly, u))
        if res < best_res:
            best, best_res = u, res
        if res == 0:
            break
    return 1 / best if flip else best


def _simple_quadratic_roots(a: complex, b: complex, c: complex) -> list[complex]:
    d = np.sqrt(complex(b * b - 4 * a * c))
    if (b.conjugate() * d).real < 0:
        d = -d
    w = -(b + d) / 2
    return [w / a, c / w]


def _poly_roots(coefs: list[complex], tol: Tolerance) -> list[complex]:
    """Distinct roots of a polynomial of degree <= 3 with nonzero ends."""
    m = magnitude(coefs)
    coefs = [c / m for c in coefs]
    n = len(coefs) - 1
    if n == 0:
        return []
    if n == 1:
        return [-coefs[1] / coefs[0]]
    if n == 2:
        a, b, c = coefs
        if tol.is_zero(b * b - 4 * a * c):
            return [-b / (2 * a)]
        return [_polish(coefs, r) for r in _simple_quadratic_roots(a, b, c)]
    a, b, c, d = coefs
    disc = 18 * a * b * c * d - 4 * b ** 3 * d + b * b * c * c - 4 * a * c ** 3 - 27 * a * a * d * d
    if tol.is_zero(disc):
        h = b * b - 3 * a * c
        if tol.is_zero(h):
            return [-b / (3 * a)]
        double = (9 * a * d - b * c) / (2 * h)
        simple = (4 * a * b * c - 9 * a * a * d - b ** 3) / (a * h)
        return [double, _polish(coefs, simple)]
    return [_polish(coefs, complex(r)) for r in np.roots(coefs)]


def _cubic_directions(cubic: BinaryCubic, tol: Tolerance) -> list[Direction]:
    sp, sq = _pow2_scale(cubic.p_scale), _pow2_scale(cubic.q_scale)
    # work with generators p/sp, q/sq; zero tests use the exact weights
    coefs = [c / w for c, w in zip(cubic.coefficients, (sp ** 3, sp * sp * sq, sp * sq * sq, sq ** 3))]
    is_zero = [tol.is_zero(c) for c in cubic.normalized_coefficients()]
    found: list[tuple[complex, complex]] = []
    lo, hi = 0, 4
    while is_zero[lo]:
        lo += 1
    while is_zero[hi - 1]:
        hi -= 1
    if lo > 0:
        found.append((1, 0))
    if hi < 4:
        found.append((0, 1))
    found.extend((t, 1) for t in _poly_roots(coefs[lo:hi], tol))

    dirs: list[Direction] = []
    for a, b in found:
        d = Direction(a / sp, b / sq).normalized(tol)
        if not any(d.collinear(e, tol) for e in dirs):
            dirs.append(d)
    return dirs


def factorizable_directions(p: TernaryQuadratic, q: TernaryQuadratic,
                            tol: Tolerance = DEFAULT_TOLERANCE):
    """``ALL`` when every member splits, otherwise the list of split directions."""
    if not check_linear_independence(p, q, tol):
        raise DependentGenerators("generators are linearly dependent")
    cubic = det_pencil_cubic(p, q)
    if cubic.is_identically_zero(tol):
        return ALL
    return _cubic_directions(cubic, tol)


# --------------------------------------------------------------------------
# classifiers


def classify_pencil(p: TernaryQuadratic, q: TernaryQuadratic,
                    tol: Tolerance = DEFAULT_TOLERANCE) -> PencilReport:
    dirs = factorizable_directions(p, q, tol)
    cubic = det_pencil_cubic(p, q)
    if dirs is ALL:
        try:
            fp = factor_ternary_quadratic(p, tol)
            fq = factor_ternary_quadratic(q, tol)
        except NotDegenerate as exc:
            raise InternalInconsistency(f"cubic vanishes but a generator is irreducible: {exc}")
        common = _shared_line(fp, fq, tol)
        point = check_concurrency(fp.lines() + fq.lines(), tol)
        reasons = []
        if common is not None:
            reasons.append(Reason.COMMON_FACTOR)
        if point is not None:
            reasons.append(Reason.CONCURRENT_LINES)
        if not reasons:
            raise InternalInconsistency(
                "determinant cubic vanishes but neither a common factor nor concurrency was found")
        return PencilReport(Verdict.ALL_FACTORIZABLE, tuple(reasons), cubic,
                            common_line=common, concurrency_point=point,
                            generator_factors=(fp, fq))

    found = []
    for d in dirs:
        try:
            found.append(FactorizableDirection(d, factor_ternary_quadratic(d.combine(p, q), tol)))
        except NotDegenerate as exc:
            raise InternalInconsistency(f"root {d} of the determinant cubic does not split: {exc}")
    return PencilReport(Verdict.FINITE, (), cubic, directions=tuple(found))


def check_product_pencil_theorem(fp: SplitPair, fq: SplitPair, d1: Direction, d2: Direction,
                                 tol: Tolerance = DEFAULT_TOLERANCE) -> ProductPencilCheck:
    """Two split members off the axes force the whole product pencil to split.

    Raises PreconditionFailed when the supplied data do not meet the hypotheses.
    """
    p, q = fp.product(), fq.product()
    if not check_linear_independence(p, q, tol):
        raise PreconditionFailed("p and q are linearly dependent")
    if d1.collinear(d2, tol):
        raise PreconditionFailed("directions are collinear")
    for d in (d1, d2):
        s = max(abs(d.alpha), abs(d.beta))
        if tol.is_zero(d.alpha / s) or tol.is_zero(d.beta / s):
            raise PreconditionFailed(f"direction {d} has a zero component")
        if not is_degenerate(d.combine(p, q), tol):
            raise PreconditionFailed(f"combination at {d} is not degenerate")
    report = classify_pencil(p, q, tol)
    if report.verdict is not Verdict.ALL_FACTORIZABLE:
        raise InternalInconsistency("hypotheses hold but the pencil is not all-factorizable")
    return ProductPencilCheck(True, report.reasons, report)


def _independent_pair(lines: Sequence[LinearForm3]) -> tuple[LinearForm3, LinearForm3]:
    best, best_size = (lines[0], lines[-1]), -1.0
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            u = [c / magnitude(lines[i].coefficients) for c in lines[i].coefficients]
            v = [c / magnitude(lines[j].coefficients) for c in lines[j].coefficients]
            size = magnitude(cross(u, v))
            if size > best_size:
                best, best_size = (lines[i], lines[j]), size
    return best


def classify_bivariate_pencil(p: BivariateQuadratic, q: BivariateQuadratic,
                              tol: Tolerance = DEFAULT_TOLERANCE) -> BivariateReport:
    for name, g in (("p", p), ("q", q)):
        if not g.has_degree_two(tol):
            raise DegreeTooLow(f"{name} has degree below two")
    report = classify_pencil(homogenize(p), homogenize(q), tol)
    if report.verdict is Verdict.FINITE:
        return BivariateReport(Verdict.FINITE, (), report)

    reasons = []
    common = None
    geometry = None
    b_forms = c_forms = None
    if report.common_line is not None:
        reasons.append(BivariateReason.A_PRIME)
        common = report.common_line.dehomogenize()
        geometry = LineGeometry.COMMON_FACTOR
    point = report.concurrency_point
    if point is not None:
        fp, fq = report.generator_factors
        s, t = _independent_pair(fp.lines() + fq.lines())
        if point.at_infinity(tol):
            # z passes through the point too, so p and q are binary forms in (s, z)
            x0, y0, _ = point.coordinates
            reasons.append(BivariateReason.B_PRIME)
            b_forms = (LinearForm2(y0, -x0, 0), LinearForm2(0, 0, 1))
            geometry = LineGeometry.PARALLEL
        else:
            geometry = LineGeometry.COINCIDENT
        reasons.append(BivariateReason.C_PRIME)
        c_forms = (s.dehomogenize(), t.dehomogenize())
    return BivariateReport(Verdict.ALL_FACTORIZABLE, tuple(reasons), report,
                           line_geometry=geometry, common_line=common,
                           b_prime_forms=b_forms, c_prime_forms=c_forms)
