"""Splitting a single quadratic form into two linear forms."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .algebra import (
    DEFAULT_TOLERANCE,
    LinearForm3,
    TernaryQuadratic,
    Tolerance,
    adjugate3,
    inverse3,
    magnitude,
    substitute_linear,
)
from .errors import NotDegenerate, ZeroForm

BinaryLinear = tuple[complex, complex]


def expand_product(l1: LinearForm3, l2: LinearForm3) -> TernaryQuadratic:
    a1, b1, c1 = l1.coefficients
    a2, b2, c2 = l2.coefficients
    return TernaryQuadratic(
        a1 * a2, b1 * b2, c1 * c2,
        a1 * b2 + a2 * b1, a1 * c2 + a2 * c1, b1 * c2 + b2 * c1,
    )


def _order_key(line: LinearForm3):
    return tuple((round(c.real, 9), round(c.imag, 9)) for c in line.normalized().coefficients)


@dataclass(frozen=True)
class SplitPair:
    """Two linear forms whose product is a given quadratic.

    Built through :meth:`canonical`, which puts the lines in a fixed order and
    moves the overall scalar onto ``l1``.
    """

    l1: LinearForm3
    l2: LinearForm3

    @classmethod
    def canonical(cls, l1: LinearForm3, l2: LinearForm3,
                  target: TernaryQuadratic | None = None) -> SplitPair:
        n1, n2 = sorted((l1.normalized(), l2.normalized()), key=_order_key)
        if target is None:
            target = expand_product(l1, l2)
        prod = expand_product(n1, n2).coefficients
        j = max(range(6), key=lambda k: abs(prod[k]))
        return cls(n1.scaled(target.coefficients[j] / prod[j]), n2)

    def product(self) -> TernaryQuadratic:
        return expand_product(self.l1, self.l2)

    def lines(self) -> tuple[LinearForm3, LinearForm3]:
        return (self.l1, self.l2)

    def same_lines(self, l1: LinearForm3, l2: LinearForm3,
                   tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        """Projective match against an unordered pair."""
        a, b = self.l1, self.l2
        return ((a.same_line(l1, tol) and b.same_line(l2, tol))
                or (a.same_line(l2, tol) and b.same_line(l1, tol)))


def factor_binary_quadratic(a: complex, b: complex, c: complex,
                            tol: Tolerance = DEFAULT_TOLERANCE
                            ) -> tuple[BinaryLinear, BinaryLinear]:
    """Factor a*s^2 + b*s*t + c*t^2 as (u1*s + v1*t)(u2*s + v2*t).

    Each factor is returned as its coefficient pair ``(u, v)``.
    """
    a, b, c = complex(a), complex(b), complex(c)
    if all(tol.is_zero(v) for v in (a, b, c)):
        raise ZeroForm("binary quadratic is zero")
    scale = magnitude((a, b, c))
    if tol.is_zero(a, scale):
        # root at infinity: t divides the form
        return (0j, 1 + 0j), (b, c)
    d = cmath.sqrt(b * b - 4 * a * c)
    # pick the sign that avoids cancellation
    if (b.conjugate() * d).real < 0:
        d = -d
    w = -(b + d) / 2
    if w == 0:
        r1 = r2 = 0j
    else:
        r1, r2 = w / a, c / w
    return (a, -a * r1), (1 + 0j, -r2)


@dataclass(frozen=True)
class Degeneracy:
    degenerate: bool
    det: complex

    def __bool__(self):
        return self.degenerate


def _require_nonzero(p: TernaryQuadratic, tol: Tolerance):
    if all(tol.is_zero(c) for c in p.coefficients):
        raise ZeroForm("quadratic form is identically zero")


def is_degenerate(p: TernaryQuadratic, tol: Tolerance = DEFAULT_TOLERANCE) -> Degeneracy:
    """Singular-matrix test; the determinant is returned as a witness."""
    _require_nonzero(p, tol)
    det = p.matrix().det()
    return Degeneracy(tol.is_zero(det, p.scale, 3), det)


def matrix_rank(p: TernaryQuadratic, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    m = p.matrix().rows()
    s = p.scale
    if all(tol.is_zero(v, s) for row in m for v in row):
        return 0
    adj = adjugate3(m)
    if all(tol.is_zero(v, s, 2) for row in adj for v in row):
        return 1
    return 3 if not tol.is_zero(p.matrix().det(), s, 3) else 2


def factor_ternary_quadratic(p: TernaryQuadratic,
                             tol: Tolerance = DEFAULT_TOLERANCE) -> SplitPair:
    test = is_degenerate(p, tol)
    if not test:
        raise NotDegenerate(f"form is irreducible (det = {test.det})")
    m = p.matrix().rows()
    adj = adjugate3(m)
    if all(tol.is_zero(v, p.scale, 2) for row in adj for v in row):
        # rank one: M = c * l l^t, so row k over sqrt(M_kk) is sqrt(c) * l
        k = max(range(3), key=lambda i: abs(m[i][i]))
        root = cmath.sqrt(m[k][k])
        line = LinearForm3(*(v / root for v in m[k]))
        return SplitPair.canonical(line, line, p)

    # rank two: adj(M) = c * v v^t with v spanning the kernel (the singular point)
    col = max(range(3), key=lambda j: magnitude([adj[i][j] for i in range(3)]))
    v = [adj[i][col] for i in range(3)]
    k = max(range(3), key=lambda i: abs(v[i]))
    i, j = (n for n in range(3) if n != k)
    t = [[0j] * 3 for _ in range(3)]
    t[i][0] = 1
    t[j][1] = 1
    for r in range(3):
        t[r][2] = v[r]
    pulled = substitute_linear(p, t)
    (u1, v1), (u2, v2) = factor_binary_quadratic(pulled.cxx, pulled.cxy, pulled.cyy, tol)
    tinv = inverse3(t)
    lines = [LinearForm3(*(u * tinv[0][n] + w * tinv[1][n] for n in range(3)))
             for u, w in ((u1, v1), (u2, v2))]
    return SplitPair.canonical(lines[0], lines[1], p)
