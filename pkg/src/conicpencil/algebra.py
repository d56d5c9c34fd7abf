"""Value types for quadratic and linear forms over the complex numbers.

Every coefficient is a Python ``complex``.  Ternary quadratics store their
coefficients in the fixed order (x^2, y^2, z^2, xy, xz, yz); bivariate
quadratics use the matching order (x^2, y^2, 1, xy, x, y) so that
homogenization is a relabelling of the same six slots.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, fields
from typing import Iterable, Sequence

Matrix3 = Sequence[Sequence[complex]]


def _as_complex(value) -> complex:
    c = complex(value)
    if not cmath.isfinite(c):
        raise ValueError(f"non-finite coefficient: {value!r}")
    return c


@dataclass(frozen=True)
class Tolerance:
    """Relative zero test shared by every predicate.

    A quantity of algebraic degree ``d`` in inputs of magnitude ``scale`` is
    zero iff ``|q| <= rel * max(scale, 1) ** d``.
    """

    rel: float = 1e-9

    def __post_init__(self):
        if not self.rel > 0:
            raise ValueError("tolerance must be positive")

    def threshold(self, scale: float = 1.0, degree: int = 1) -> float:
        return self.rel * max(scale, 1.0) ** degree

    def is_zero(self, value: complex, scale: float = 1.0, degree: int = 1) -> bool:
        return abs(value) <= self.threshold(scale, degree)


DEFAULT_TOLERANCE = Tolerance()


def magnitude(values: Iterable[complex]) -> float:
    """Largest absolute value in ``values`` (0 for an empty iterable)."""
    return max((abs(v) for v in values), default=0.0)


def _lead_index(values: Sequence[complex]) -> int:
    # first index within a hair of the max, so near-ties resolve the same way every time
    m = magnitude(values)
    for k, v in enumerate(values):
        if abs(v) >= m * (1 - 1e-9):
            return k
    return 0


def proportional(u: Sequence[complex], v: Sequence[complex],
                 tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff ``u`` and ``v`` span the same complex line.

    Both vectors are scaled to unit max-norm, then every 2x2 minor must vanish.
    Zero vectors are proportional only to each other.
    """
    mu, mv = magnitude(u), magnitude(v)
    if mu == 0 or mv == 0:
        return mu == mv
    a = [x / mu for x in u]
    b = [x / mv for x in v]
    n = len(a)
    return all(tol.is_zero(a[i] * b[j] - a[j] * b[i])
               for i in range(n) for j in range(i + 1, n))


def normalize_vector(values: Sequence[complex]) -> tuple[complex, ...]:
    """Divide by the leading (largest-magnitude) entry so it becomes 1."""
    lead = values[_lead_index(values)]
    if lead == 0:
        raise ValueError("cannot normalize a zero vector")
    return tuple(v / lead for v in values)


# --------------------------------------------------------------------------
# linear forms


@dataclass(frozen=True)
class LinearForm3:
    """The projective line a*x + b*y + c*z = 0."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _as_complex(getattr(self, f.name)))
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ValueError("linear form must not be identically zero")

    @property
    def coefficients(self) -> tuple[complex, complex, complex]:
        return (self.a, self.b, self.c)

    def normalized(self) -> LinearForm3:
        return LinearForm3(*normalize_vector(self.coefficients))

    def scaled(self, k: complex) -> LinearForm3:
        return LinearForm3(k * self.a, k * self.b, k * self.c)

    def same_line(self, other: LinearForm3, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return proportional(self.coefficients, other.coefficients, tol)

    def evaluate(self, point: Sequence[complex]) -> complex:
        x, y, z = point
        return self.a * x + self.b * y + self.c * z

    def dehomogenize(self) -> LinearForm2:
        return LinearForm2(self.a, self.b, self.c)


@dataclass(frozen=True)
class LinearForm2:
    """The affine form a*x + b*y + c.  A constant form is allowed."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _as_complex(getattr(self, f.name)))

    @property
    def coefficients(self) -> tuple[complex, complex, complex]:
        return (self.a, self.b, self.c)

    def homogenize(self) -> LinearForm3:
        return LinearForm3(self.a, self.b, self.c)

    def has_linear_part(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        s = magnitude(self.coefficients)
        return not (tol.is_zero(self.a, s) and tol.is_zero(self.b, s))

    def evaluate(self, x: complex, y: complex) -> complex:
        return self.a * x + self.b * y + self.c


# --------------------------------------------------------------------------
# quadratic forms


@dataclass(frozen=True)
class TernaryQuadratic:
    """cxx*x^2 + cyy*y^2 + czz*z^2 + cxy*xy + cxz*xz + cyz*yz."""

    cxx: complex = 0j
    cyy: complex = 0j
    czz: complex = 0j
    cxy: complex = 0j
    cxz: complex = 0j
    cyz: complex = 0j

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _as_complex(getattr(self, f.name)))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[complex]) -> TernaryQuadratic:
        return cls(*coeffs)

    @property
    def coefficients(self) -> tuple[complex, ...]:
        return (self.cxx, self.cyy, self.czz, self.cxy, self.cxz, self.cyz)

    @property
    def scale(self) -> float:
        return magnitude(self.coefficients)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def matrix(self) -> SymMatrix3:
        return SymMatrix3.from_quadratic(self)

    def evaluate(self, point: Sequence[complex]) -> complex:
        return evaluate(self, point)

    def __add__(self, other: TernaryQuadratic) -> TernaryQuadratic:
        return TernaryQuadratic(*(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: TernaryQuadratic) -> TernaryQuadratic:
        return TernaryQuadratic(*(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __rmul__(self, k: complex) -> TernaryQuadratic:
        return TernaryQuadratic(*(k * c for c in self.coefficients))

    def __neg__(self) -> TernaryQuadratic:
        return (-1) * self


@dataclass(frozen=True)
class BivariateQuadratic:
    """cxx*x^2 + cyy*y^2 + c + cxy*xy + cx*x + cy*y, degree at most two."""

    cxx: complex = 0j
    cyy: complex = 0j
    c: complex = 0j
    cxy: complex = 0j
    cx: complex = 0j
    cy: complex = 0j

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _as_complex(getattr(self, f.name)))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[complex]) -> BivariateQuadratic:
        return cls(*coeffs)

    @property
    def coefficients(self) -> tuple[complex, ...]:
        return (self.cxx, self.cyy, self.c, self.cxy, self.cx, self.cy)

    @property
    def scale(self) -> float:
        return magnitude(self.coefficients)

    def has_degree_two(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        s = self.scale
        return any(not tol.is_zero(v, s) for v in (self.cxx, self.cyy, self.cxy))

    def evaluate(self, x: complex, y: complex) -> complex:
        return (self.cxx * x * x + self.cyy * y * y + self.c + self.cxy * x * y
                + self.cx * x + self.cy * y)

    def __add__(self, other: BivariateQuadratic) -> BivariateQuadratic:
        return BivariateQuadratic(*(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __rmul__(self, k: complex) -> BivariateQuadratic:
        return BivariateQuadratic(*(k * c for c in self.coefficients))


def homogenize(p: BivariateQuadratic) -> TernaryQuadratic:
    """Associated homogeneous form: x^i y^j -> x^i y^j z^(2-i-j)."""
    return TernaryQuadratic(*p.coefficients)


def dehomogenize(p: TernaryQuadratic) -> BivariateQuadratic:
    """Set z = 1."""
    return BivariateQuadratic(*p.coefficients)


def evaluate(p: TernaryQuadratic, point: Sequence[complex]) -> complex:
    x, y, z = point
    return (p.cxx * x * x + p.cyy * y * y + p.czz * z * z
            + p.cxy * x * y + p.cxz * x * z + p.cyz * y * z)


# --------------------------------------------------------------------------
# symmetric matrices and small dense helpers


@dataclass(frozen=True)
class SymMatrix3:
    """Symmetric 3x3 matrix; each off-diagonal entry is stored once."""

    m00: complex
    m11: complex
    m22: complex
    m01: complex
    m02: complex
    m12: complex

    @classmethod
    def from_quadratic(cls, p: TernaryQuadratic) -> SymMatrix3:
        return cls(p.cxx, p.cyy, p.czz, p.cxy / 2, p.cxz / 2, p.cyz / 2)

    @classmethod
    def from_rows(cls, rows: Matrix3) -> SymMatrix3:
        # symmetrize; callers hand over matrices that are symmetric up to rounding
        return cls(rows[0][0], rows[1][1], rows[2][2],
                   (rows[0][1] + rows[1][0]) / 2,
                   (rows[0][2] + rows[2][0]) / 2,
                   (rows[1][2] + rows[2][1]) / 2)

    def to_quadratic(self) -> TernaryQuadratic:
        return TernaryQuadratic(self.m00, self.m11, self.m22,
                                2 * self.m01, 2 * self.m02, 2 * self.m12)

    def rows(self) -> list[list[complex]]:
        return [[self.m00, self.m01, self.m02],
                [self.m01, self.m11, self.m12],
                [self.m02, self.m12, self.m22]]

    def det(self) -> complex:
        return det3(self.rows())


def det3(m: Matrix3) -> complex:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def adjugate3(m: Matrix3) -> list[list[complex]]:
    """Classical adjoint, so that m @ adj(m) = det(m) * I."""
    def cof(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
        return minor if (i + j) % 2 == 0 else -minor
    return [[cof(j, i) for j in range(3)] for i in range(3)]


def matmul3(a: Matrix3, b: Matrix3) -> list[list[complex]]:
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def transpose3(a: Matrix3) -> list[list[complex]]:
    return [[a[j][i] for j in range(3)] for i in range(3)]


def inverse3(m: Matrix3) -> list[list[complex]]:
    d = det3(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    return [[v / d for v in row] for row in adjugate3(m)]


def cross(u: Sequence[complex], v: Sequence[complex]) -> tuple[complex, complex, complex]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def substitute_linear(p: TernaryQuadratic, t: Matrix3) -> TernaryQuadratic:
    """Pull ``p`` back along X -> T X; the result has matrix T^t M T."""
    m = p.matrix().rows()
    return SymMatrix3.from_rows(matmul3(transpose3(t), matmul3(m, t))).to_quadratic()


# --------------------------------------------------------------------------
# pencil determinant


@dataclass(frozen=True)
class BinaryCubic:
    """c3*a^3 + c2*a^2*b + c1*a*b^2 + c0*b^3 in the pencil parameters (a, b).

    ``p_scale``/``q_scale`` record the coefficient magnitudes of the two
    generators so that each coefficient can be tested at its own weight.
    """

    c3: complex
    c2: complex
    c1: complex
    c0: complex
    p_scale: float = 1.0
    q_scale: float = 1.0

    @property
    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        return (self.c3, self.c2, self.c1, self.c0)

    def weights(self) -> tuple[float, float, float, float]:
        sp, sq = max(self.p_scale, 1.0), max(self.q_scale, 1.0)
        return (sp ** 3, sp * sp * sq, sp * sq * sq, sq ** 3)

    def normalized_coefficients(self) -> tuple[complex, ...]:
        """Coefficients of the cubic for the generators scaled to unit size."""
        return tuple(c / w for c, w in zip(self.coefficients, self.weights()))

    def __call__(self, alpha: complex, beta: complex) -> complex:
        return (self.c3 * alpha ** 3 + self.c2 * alpha ** 2 * beta
                + self.c1 * alpha * beta ** 2 + self.c0 * beta ** 3)

    def is_identically_zero(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return all(tol.is_zero(c) for c in self.normalized_coefficients())


def _mixed_det(a: Matrix3, b: Matrix3, from_b: tuple[bool, bool, bool]) -> complex:
    cols = [[(b if from_b[j] else a)[i][j] for j in range(3)] for i in range(3)]
    return det3(cols)


def det_pencil_cubic(p: TernaryQuadratic, q: TernaryQuadratic) -> BinaryCubic:
    """Expand det(a*M(p) + b*M(q)) by multilinearity in the columns."""
    a = p.matrix().rows()
    b = q.matrix().rows()
    one_b = [(True, False, False), (False, True, False), (False, False, True)]
    two_b = [(False, True, True), (True, False, True), (True, True, False)]
    return BinaryCubic(
        c3=det3(a),
        c2=sum(_mixed_det(a, b, s) for s in one_b),
        c1=sum(_mixed_det(a, b, s) for s in two_b),
        c0=det3(b),
        p_scale=p.scale,
        q_scale=q.scale,
    )


# --------------------------------------------------------------------------
# pencil parameters and points


@dataclass(frozen=True)
class Direction:
    """Projective pencil parameter (alpha : beta)."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", _as_complex(self.alpha))
        object.__setattr__(self, "beta", _as_complex(self.beta))
        if self.alpha == 0 and self.beta == 0:
            raise ValueError("direction (0, 0) is not a projective point")

    def collinear(self, other: Direction, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return proportional((self.alpha, self.beta), (other.alpha, other.beta), tol)

    def normalized(self, tol: Tolerance = DEFAULT_TOLERANCE) -> Direction:
        """Scale so beta = 1, or alpha = 1 for the direction (1 : 0)."""
        s = max(abs(self.alpha), abs(self.beta))
        if tol.is_zero(self.beta / s):
            return Direction(1, 0)
        return Direction(self.alpha / self.beta, 1)

    def combine(self, p, q):
        return self.alpha * p + self.beta * q


@dataclass(frozen=True)
class Point3:
    """Projective point (x : y : z)."""

    x: complex
    y: complex
    z: complex

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _as_complex(getattr(self, f.name)))
        if self.x == 0 and self.y == 0 and self.z == 0:
            raise ValueError("(0 : 0 : 0) is not a projective point")

    @property
    def coordinates(self) -> tuple[complex, complex, complex]:
        return (self.x, self.y, self.z)

    def normalized(self) -> Point3:
        return Point3(*normalize_vector(self.coordinates))

    def same_point(self, other: Point3, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return proportional(self.coordinates, other.coordinates, tol)

    def at_infinity(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return tol.is_zero(self.z / magnitude(self.coordinates))
