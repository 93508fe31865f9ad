"""Exact barycentric kernel.

Points are rational triples relative to a fixed reference triangle ABC.
Euclidean quantities come from a 3x3 metric matrix K: the dot product of
vectors PQ and RT is ``(Q - P) K (T - R)^T``. The canonical choice is
``K_H = diag(S_A, S_B, S_C)``; any matrix that differs from it by a member
of the gauge family ``f(m, n, l)`` gives the same dot products.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from barymetric import _kernels

Rational = Fraction

__all__ = [
    "A",
    "B",
    "C",
    "AngleCot",
    "BaryPoint",
    "DegenerateTriangle",
    "GeometryError",
    "IdenticalLines",
    "IdenticalPoints",
    "InfiniteMisuse",
    "Kind",
    "Line",
    "MetricMatrix",
    "Rational",
    "TriangleShape",
    "Triple",
    "ZeroVector",
    "as_rational",
    "bracket",
    "conway",
    "cot_angle",
    "cross_product_coeff",
    "dist2",
    "dot",
    "gauge",
    "gauge_witness",
    "inner_product",
    "intersect",
    "is_gauge_equivalent",
    "is_perpendicular",
    "line_through",
    "metric_KH",
    "metric_KO",
    "side_line",
    "squared_area",
    "vertex",
]


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateTriangle(GeometryError):
    pass


class InfiniteMisuse(GeometryError):
    """A point at infinity was used where a finite point is required."""


class ZeroVector(GeometryError):
    pass


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


def as_rational(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}; pass an int, Fraction or 'p/q' string")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Kind(enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"


class Triple(tuple):
    """A homogeneous rational triple with componentwise linear arithmetic.

    Results whose coordinates sum to 1 (or to 0, not all zero) come back as
    :class:`BaryPoint`; anything else stays a plain ``Triple``.
    """

    __slots__ = ()

    def __new__(cls, x, y, z):
        return super().__new__(cls, (as_rational(x), as_rational(y), as_rational(z)))

    @classmethod
    def _raw(cls, coords):
        return tuple.__new__(cls, coords)

    @property
    def total(self) -> Fraction:
        return self[0] + self[1] + self[2]

    def is_zero(self) -> bool:
        return not (self[0] or self[1] or self[2])

    def normalized(self) -> BaryPoint:
        """Scale to a finite point, or return as a point at infinity if the sum is 0."""
        s = self.total
        if s == 0:
            return BaryPoint(*self)
        return BaryPoint._raw((self[0] / s, self[1] / s, self[2] / s))

    def __add__(self, other):
        if not isinstance(other, tuple) or len(other) != 3:
            return NotImplemented
        return _wrap((self[0] + other[0], self[1] + other[1], self[2] + other[2]))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, tuple) or len(other) != 3:
            return NotImplemented
        return _wrap((self[0] - other[0], self[1] - other[1], self[2] - other[2]))

    def __rsub__(self, other):
        if not isinstance(other, tuple) or len(other) != 3:
            return NotImplemented
        return _wrap((other[0] - self[0], other[1] - self[1], other[2] - self[2]))

    def __neg__(self):
        return _wrap((-self[0], -self[1], -self[2]))

    def __mul__(self, scalar):
        if isinstance(scalar, tuple):
            return NotImplemented
        t = as_rational(scalar)
        return _wrap((self[0] * t, self[1] * t, self[2] * t))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        t = as_rational(scalar)
        return _wrap((self[0] / t, self[1] / t, self[2] / t))

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self)})"


def _wrap(coords) -> Triple:
    s = coords[0] + coords[1] + coords[2]
    if s == 1 or (s == 0 and (coords[0] or coords[1] or coords[2])):
        return BaryPoint._raw(coords)
    return Triple._raw(coords)


class BaryPoint(Triple):
    """Normalised barycentric point: finite (sum 1) or at infinity (sum 0)."""

    __slots__ = ()

    def __new__(cls, alpha, beta, gamma):
        self = super().__new__(cls, alpha, beta, gamma)
        s = self.total
        if s == 1:
            return self
        if s == 0 and not self.is_zero():
            return self
        if s == 0:
            raise GeometryError("(0, 0, 0) is not a point")
        raise GeometryError(f"coordinates must sum to 1 or 0, got {s}")

    @classmethod
    def from_homogeneous(cls, x, y, z) -> BaryPoint:
        t = Triple(x, y, z)
        if t.is_zero():
            raise GeometryError("(0, 0, 0) is not a point")
        return t.normalized()

    @property
    def alpha(self) -> Fraction:
        return self[0]

    @property
    def beta(self) -> Fraction:
        return self[1]

    @property
    def gamma(self) -> Fraction:
        return self[2]

    @property
    def kind(self) -> Kind:
        return Kind.FINITE if self.total == 1 else Kind.INFINITE

    @property
    def is_finite(self) -> bool:
        return self.total == 1


A = BaryPoint(1, 0, 0)
B = BaryPoint(0, 1, 0)
C = BaryPoint(0, 0, 1)
_VERTICES = {"A": A, "B": B, "C": C}


def vertex(name: str) -> BaryPoint:
    try:
        return _VERTICES[name.upper()]
    except (KeyError, AttributeError):
        raise ValueError(f"vertex must be one of 'A', 'B', 'C', got {name!r}") from None


def _vertex_index(name: str) -> int:
    vertex(name)
    return "ABC".index(name.upper())


# --------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True, eq=True)
class MetricMatrix:
    """Symmetric 3x3 rational matrix used as a bilinear form on triples."""

    entries: tuple
    _flat: tuple = field(init=False, repr=False, compare=False)
    _diag: tuple | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("metric matrix must be 3x3")
        for i in range(3):
            for j in range(i + 1, 3):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"metric matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "_flat", rows[0] + rows[1] + rows[2])
        off = rows[0][1] or rows[0][2] or rows[1][2]
        object.__setattr__(self, "_diag", None if off else (rows[0][0], rows[1][1], rows[2][2]))

    @classmethod
    def diagonal(cls, d0, d1, d2) -> MetricMatrix:
        return cls(((d0, 0, 0), (0, d1, 0), (0, 0, d2)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: MetricMatrix) -> MetricMatrix:
        return MetricMatrix(tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: MetricMatrix) -> MetricMatrix:
        return self + (-other)

    def __neg__(self) -> MetricMatrix:
        return MetricMatrix(tuple(tuple(-x for x in r) for r in self.entries))

    def form(self, u, v) -> Fraction:
        """Return ``u K v^T``."""
        if self._diag is not None:
            return _kernels.bilinear_diag(self._diag, u, v)
        return _kernels.bilinear(self._flat, u, v)

    def row(self, u) -> tuple:
        """Return the coefficient row ``u K``."""
        return tuple(
            sum((u[i] * self.entries[i][j] for i in range(3)), Fraction(0)) for j in range(3)
        )


def conway(a, b, c) -> tuple[Fraction, Fraction, Fraction]:
    """Return the Conway symbols (S_A, S_B, S_C) of a triangle with sides a, b, c."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    _check_sides(a, b, c)
    a2, b2, c2 = a * a, b * b, c * c
    return (b2 + c2 - a2) / 2, (c2 + a2 - b2) / 2, (a2 + b2 - c2) / 2


def _check_sides(a, b, c):
    for name, side in (("a", a), ("b", b), ("c", c)):
        if side <= 0:
            raise DegenerateTriangle(f"side {name} = {side} must be positive")
    for (n1, x), (n2, y), (n3, z) in (
        (("b", b), ("c", c), ("a", a)),
        (("c", c), ("a", a), ("b", b)),
        (("a", a), ("b", b), ("c", c)),
    ):
        if x + y <= z:
            raise DegenerateTriangle(
                f"triangle inequality violated: {n1} + {n2} = {x + y} <= {n3} = {z}"
            )


@dataclass(frozen=True)
class TriangleShape:
    """Reference triangle given by its side lengths a = |BC|, b = |CA|, c = |AB|."""

    a: Fraction
    b: Fraction
    c: Fraction
    sA: Fraction = field(init=False, repr=False)
    sB: Fraction = field(init=False, repr=False)
    sC: Fraction = field(init=False, repr=False)
    s2: Fraction = field(init=False, repr=False)
    p: Fraction = field(init=False, repr=False)
    K: MetricMatrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a, b, c = as_rational(self.a), as_rational(self.b), as_rational(self.c)
        sA, sB, sC = conway(a, b, c)
        setter = object.__setattr__
        setter(self, "a", a)
        setter(self, "b", b)
        setter(self, "c", c)
        setter(self, "sA", sA)
        setter(self, "sB", sB)
        setter(self, "sC", sC)
        setter(self, "s2", (sB * sC + sC * sA + sA * sB) / 4)
        setter(self, "p", (a + b + c) / 2)
        setter(self, "K", MetricMatrix.diagonal(sA, sB, sC))

    @property
    def sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c

    @property
    def conway(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.sA, self.sB, self.sC

    def scaled(self, t) -> TriangleShape:
        t = as_rational(t)
        return TriangleShape(self.a * t, self.b * t, self.c * t)


def squared_area(shape: TriangleShape) -> Fraction:
    return shape.s2


def metric_KH(shape: TriangleShape) -> MetricMatrix:
    return shape.K


def metric_KO(shape: TriangleShape) -> MetricMatrix:
    """The coordinate-free matrix -1/2 [[0, c², b²], [c², 0, a²], [b², a², 0]]."""
    a2, b2, c2 = shape.a ** 2, shape.b ** 2, shape.c ** 2
    h = Fraction(-1, 2)
    return MetricMatrix(((0, h * c2, h * b2), (h * c2, 0, h * a2), (h * b2, h * a2, 0)))


def gauge(m, n, l) -> MetricMatrix:
    """f(m, n, l): annihilates every pair of difference vectors."""
    m, n, l = as_rational(m), as_rational(n), as_rational(l)
    return MetricMatrix((
        (m, (m + n) / 2, (m + l) / 2),
        ((m + n) / 2, n, (n + l) / 2),
        ((m + l) / 2, (n + l) / 2, l),
    ))


def gauge_witness(K1: MetricMatrix, K2: MetricMatrix) -> tuple | None:
    """Return (m, n, l) with ``K1 - K2 == f(m, n, l)``, or None if no such triple exists."""
    D = K1 - K2
    for i in range(3):
        for j in range(i + 1, 3):
            if 2 * D[i, j] != D[i, i] + D[j, j]:
                return None
    return D[0, 0], D[1, 1], D[2, 2]


def is_gauge_equivalent(K1: MetricMatrix, K2: MetricMatrix) -> bool:
    return gauge_witness(K1, K2) is not None


# --------------------------------------------------------------------------
# Products


def _vector(P, Q) -> tuple:
    """Coordinates of the vector from P to Q.

    With ``P=None`` the second argument is taken to be a direction (a
    triple summing to zero) and returned as is.
    """
    if P is None:
        if Triple(*Q).total != 0:
            raise InfiniteMisuse("a lone vector argument must be a point at infinity (sum 0)")
        return tuple(Q)
    sp = P[0] + P[1] + P[2]
    sq = Q[0] + Q[1] + Q[2]
    if sp != sq:
        raise InfiniteMisuse("cannot subtract a point at infinity from a finite point")
    return (Q[0] - P[0], Q[1] - P[1], Q[2] - P[2])


def _require_finite(*points):
    for P in points:
        if P[0] + P[1] + P[2] != 1:
            raise InfiniteMisuse(f"{P!r} is not a finite point")


def dot(K: MetricMatrix, u, v) -> Fraction:
    """Dot product of two direction vectors (triples summing to 0)."""
    return K.form(u, v)


def inner_product(K: MetricMatrix, P, Q, R, T) -> Fraction:
    """Dot product of vectors PQ and RT.

    Pass ``P=None`` (or ``R=None``) to give the vector directly as a point
    at infinity in ``Q`` (or ``T``).
    """
    return K.form(_vector(P, Q), _vector(R, T))


def dist2(K: MetricMatrix, P, Q) -> Fraction:
    """Squared distance |PQ|² between two finite points."""
    _require_finite(P, Q)
    d = (P[0] - Q[0], P[1] - Q[1], P[2] - Q[2])
    return K.form(d, d)


def is_perpendicular(K: MetricMatrix, P, Q, R, T) -> bool:
    u, v = _vector(P, Q), _vector(R, T)
    if not (u[0] or u[1] or u[2]) or not (v[0] or v[1] or v[2]):
        raise ZeroVector("perpendicularity needs two nonzero vectors")
    return K.form(u, v) == 0


def bracket(P, Q, R) -> Fraction:
    """Determinant [P; Q; R] of the coordinate columns; the ratio S_PQR / S_ABC."""
    return _kernels.det3(P, Q, R)


def cross_product_coeff(P, Q, R, T) -> Fraction:
    """[P; Q; T - R]. The cross product PQ x RT equals 2·S_ABC times this."""
    v = _vector(R, T)
    if P is None:
        u = _vector(None, Q)
        return _kernels.det3(A, u, v)
    _vector(P, Q)
    if P[0] + P[1] + P[2] == 0:
        # two points at infinity: the base point drops out of the determinant
        return _kernels.det3(A, _vector(P, Q), v)
    return _kernels.det3(P, Q, v)


@dataclass(frozen=True)
class AngleCot:
    """Exact cotangent of an oriented angle, ``ip / (2·sqrt(s2)·bracket)``.

    Positive orientation is counterclockwise. Two values from the same
    triangle compare exactly through :meth:`compare`; only :meth:`value`
    takes a square root.
    """

    ip: Fraction
    bracket: Fraction
    s2: Fraction

    @property
    def is_degenerate(self) -> bool:
        return self.bracket == 0

    def value(self) -> float:
        if self.bracket == 0:
            return math.copysign(math.inf, self.ip) if self.ip else math.nan
        return float(self.ip / (2 * self.bracket)) / math.sqrt(self.s2)

    def squared(self) -> Fraction:
        if self.bracket == 0:
            raise ZeroDivisionError("collinear configuration has no finite cotangent")
        return self.ip ** 2 / (4 * self.s2 * self.bracket ** 2)

    def compare(self, other: AngleCot) -> int:
        """Sign of ``cot(self) - cot(other)``, computed without square roots.

        Both values must come from the same triangle and be nondegenerate.
        Bracket signs may differ; the cross-multiplication accounts for them.
        """
        if self.s2 != other.s2:
            raise ValueError("cotangents from different triangles are not comparable")
        if self.bracket == 0 or other.bracket == 0:
            raise ZeroDivisionError("collinear configuration has no finite cotangent")
        diff = (self.ip * other.bracket - other.ip * self.bracket) * self.bracket * other.bracket
        return (diff > 0) - (diff < 0)


def cot_angle(shape: TriangleShape, Q, P, R) -> AngleCot:
    """Cotangent of the oriented angle QPR, vertex P."""
    _require_finite(Q, P, R)
    u = (P[0] - Q[0], P[1] - Q[1], P[2] - Q[2])
    v = (P[0] - R[0], P[1] - R[1], P[2] - R[2])
    if not (u[0] or u[1] or u[2]) or not (v[0] or v[1] or v[2]):
        raise ZeroVector("angle arms must have nonzero length")
    return AngleCot(shape.K.form(u, v), _kernels.det3(P, Q, R), shape.s2)


# --------------------------------------------------------------------------
# Lines


@dataclass(frozen=True)
class Line:
    """Line l1·α + l2·β + l3·γ = 0, scaled so the first nonzero coefficient is 1."""

    l1: Fraction
    l2: Fraction
    l3: Fraction

    def __post_init__(self):
        coeffs = [as_rational(self.l1), as_rational(self.l2), as_rational(self.l3)]
        lead = next((x for x in coeffs if x), None)
        if lead is None:
            raise GeometryError("line coefficients cannot all be zero")
        for name, x in zip(("l1", "l2", "l3"), coeffs):
            object.__setattr__(self, name, x / lead)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.l1, self.l2, self.l3

    def evaluate(self, X) -> Fraction:
        return self.l1 * X[0] + self.l2 * X[1] + self.l3 * X[2]

    def contains(self, X) -> bool:
        return self.evaluate(X) == 0


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def line_through(P, Q) -> Line:
    coeffs = _cross3(P, Q)
    if not any(coeffs):
        raise IdenticalPoints("a line needs two distinct points")
    return Line(*coeffs)


def side_line(shape: TriangleShape, which: str) -> Line:
    """Side opposite ``which``: BC is α = 0, CA is β = 0, AB is γ = 0."""
    coeffs = [0, 0, 0]
    coeffs[_vertex_index(which)] = 1
    return Line(*coeffs)


def intersect(L1: Line, L2: Line) -> BaryPoint:
    coords = _cross3(L1.coefficients, L2.coefficients)
    if not any(coords):
        raise IdenticalLines("lines coincide")
    return Triple(*coords).normalized()
