"""Triangle centers X(1) to X(5), excenters, and the radii attached to them.

Radii are irrational in general, so only their squares and the products
R·r, R·r_a (which are rational) are exposed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from barymetric.kernel import (
    A,
    B,
    C,
    BaryPoint,
    TriangleShape,
    ZeroVector,
    _require_finite,
    _vertex_index,
)

__all__ = [
    "CenterSet",
    "center_set",
    "centroid",
    "circumcenter",
    "circumradius2",
    "euler_points",
    "excenter",
    "exradius2",
    "foot_of_perpendicular",
    "incenter",
    "inradius2",
    "midpoint",
    "nine_point_center",
    "orthocenter",
    "radius_product",
]

_THIRD = Fraction(1, 3)


def centroid(shape: TriangleShape) -> BaryPoint:
    return BaryPoint(_THIRD, _THIRD, _THIRD)


def _solve3(rows, rhs):
    """Cramer's rule on a 3x3 rational system."""

    def det(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    d = det(rows)
    if d == 0:
        raise ZeroDivisionError("singular system")
    out = []
    for j in range(3):
        m = [list(r) for r in rows]
        for i in range(3):
            m[i][j] = rhs[i]
        out.append(det(m) / d)
    return out


def orthocenter(shape: TriangleShape) -> BaryPoint:
    """Intersection of the altitudes from A and B, found by solving
    (B - C) K (X - A)^T = 0, (C - A) K (X - B)^T = 0, α + β + γ = 1."""
    K = shape.K
    r1 = K.row(B - C)
    r2 = K.row(C - A)
    rows = (r1, r2, (1, 1, 1))
    rhs = (
        r1[0] * A[0] + r1[1] * A[1] + r1[2] * A[2],
        r2[0] * B[0] + r2[1] * B[1] + r2[2] * B[2],
        1,
    )
    return BaryPoint(*_solve3(rows, rhs))


def circumcenter(shape: TriangleShape, H: BaryPoint | None = None) -> BaryPoint:
    if H is None:
        H = orthocenter(shape)
    return (3 * centroid(shape) - H) / 2


def nine_point_center(shape: TriangleShape) -> BaryPoint:
    H = orthocenter(shape)
    return (circumcenter(shape, H) + H) / 2


def incenter(shape: TriangleShape) -> BaryPoint:
    two_p = 2 * shape.p
    return BaryPoint(shape.a / two_p, shape.b / two_p, shape.c / two_p)


def excenter(shape: TriangleShape, which: str) -> BaryPoint:
    """Center of the excircle opposite vertex ``which``."""
    i = _vertex_index(which)
    weights = [shape.a, shape.b, shape.c]
    weights[i] = -weights[i]
    scale = 2 * (shape.p - shape.sides[i])
    return BaryPoint(*(w / scale for w in weights))


def midpoint(P, Q) -> BaryPoint:
    _require_finite(P, Q)
    return BaryPoint._raw(((P[0] + Q[0]) / 2, (P[1] + Q[1]) / 2, (P[2] + Q[2]) / 2))


def foot_of_perpendicular(shape: TriangleShape, P, Q, R) -> BaryPoint:
    """Orthogonal projection of P onto line QR."""
    _require_finite(P, Q, R)
    K = shape.K
    qr = (R[0] - Q[0], R[1] - Q[1], R[2] - Q[2])
    if not any(qr):
        raise ZeroVector("line needs two distinct points")
    qp = (P[0] - Q[0], P[1] - Q[1], P[2] - Q[2])
    t = K.form(qp, qr) / K.form(qr, qr)
    return BaryPoint._raw((Q[0] + t * qr[0], Q[1] + t * qr[1], Q[2] + t * qr[2]))


def euler_points(shape: TriangleShape, H: BaryPoint | None = None) -> tuple:
    """Midpoints of AH, BH, CH."""
    if H is None:
        H = orthocenter(shape)
    return midpoint(A, H), midpoint(B, H), midpoint(C, H)


def circumradius2(shape: TriangleShape) -> Fraction:
    """R² = a²b²c² / (16 S²)."""
    abc = shape.a * shape.b * shape.c
    return abc * abc / (16 * shape.s2)


def inradius2(shape: TriangleShape) -> Fraction:
    return shape.s2 / shape.p ** 2


def exradius2(shape: TriangleShape, which: str) -> Fraction:
    return shape.s2 / (shape.p - shape.sides[_vertex_index(which)]) ** 2


def radius_product(shape: TriangleShape, which: str | None = None) -> Fraction:
    """R·r, or R·r_a etc. when ``which`` names a vertex. Always rational."""
    abc = shape.a * shape.b * shape.c
    if which is None:
        return abc / (4 * shape.p)
    return abc / (4 * (shape.p - shape.sides[_vertex_index(which)]))


@dataclass(frozen=True)
class CenterSet:
    G: BaryPoint
    H: BaryPoint
    O: BaryPoint
    N: BaryPoint
    I: BaryPoint
    Ia: BaryPoint
    Ib: BaryPoint
    Ic: BaryPoint
    R2: Fraction
    r2: Fraction
    ra2: Fraction
    rb2: Fraction
    rc2: Fraction
    Rr: Fraction
    Rra: Fraction
    Rrb: Fraction
    Rrc: Fraction

    def excenters(self):
        return {"A": self.Ia, "B": self.Ib, "C": self.Ic}


def center_set(shape: TriangleShape) -> CenterSet:
    G = centroid(shape)
    H = orthocenter(shape)
    O = circumcenter(shape, H)
    return CenterSet(
        G=G,
        H=H,
        O=O,
        N=(O + H) / 2,
        I=incenter(shape),
        Ia=excenter(shape, "A"),
        Ib=excenter(shape, "B"),
        Ic=excenter(shape, "C"),
        R2=circumradius2(shape),
        r2=inradius2(shape),
        ra2=exradius2(shape, "A"),
        rb2=exradius2(shape, "B"),
        rc2=exradius2(shape, "C"),
        Rr=radius_product(shape),
        Rra=radius_product(shape, "A"),
        Rrb=radius_product(shape, "B"),
        Rrc=radius_product(shape, "C"),
    )
