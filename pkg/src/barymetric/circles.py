"""Circles as (center, squared radius) with exact power and tangency tests."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from barymetric import centers
from barymetric.kernel import (
    BaryPoint,
    GeometryError,
    InfiniteMisuse,
    TriangleShape,
    _require_finite,
    _vertex_index,
    as_rational,
    dist2,
)

__all__ = [
    "Circle",
    "ConcentricCircles",
    "Tangency",
    "circumcircle",
    "circumcircle_form",
    "classify_tangency",
    "excircle",
    "excircle_form",
    "incircle",
    "incircle_form",
    "nine_point_circle",
    "nine_point_form",
    "power_of_point",
]


class ConcentricCircles(GeometryError):
    pass


class Tangency(enum.Enum):
    EXTERNALLY_TANGENT = "ExternallyTangent"
    INTERNALLY_TANGENT = "InternallyTangent"
    NOT_TANGENT = "NotTangent"


@dataclass(frozen=True)
class Circle:
    """A circle in the plane of ``shape``."""

    shape: TriangleShape
    center: BaryPoint
    radius2: Fraction

    def __post_init__(self):
        if not self.center.is_finite:
            raise InfiniteMisuse("circle center must be a finite point")
        r2 = as_rational(self.radius2)
        if r2 < 0:
            raise GeometryError(f"squared radius must be nonnegative, got {r2}")
        object.__setattr__(self, "radius2", r2)

    def power(self, X) -> Fraction:
        return power_of_point(self, X)

    def contains(self, X) -> bool:
        return self.power(X) == 0


def power_of_point(circle: Circle, X) -> Fraction:
    """|XZ|² - ρ² for center Z and radius ρ: zero on the circle, negative inside."""
    _require_finite(X)
    return dist2(circle.shape.K, X, circle.center) - circle.radius2


def circumcircle(shape: TriangleShape) -> Circle:
    return Circle(shape, centers.circumcenter(shape), centers.circumradius2(shape))


def nine_point_circle(shape: TriangleShape) -> Circle:
    return Circle(shape, centers.nine_point_center(shape), centers.circumradius2(shape) / 4)


def incircle(shape: TriangleShape) -> Circle:
    return Circle(shape, centers.incenter(shape), centers.inradius2(shape))


def excircle(shape: TriangleShape, which: str) -> Circle:
    return Circle(shape, centers.excenter(shape, which), centers.exradius2(shape, which))


# Quadratic-form equations. Each agrees with the power of the matching circle
# at every finite X; they are kept separate so the two can be checked
# against one another.


def circumcircle_form(shape: TriangleShape, X) -> Fraction:
    """X K X^T - 3 G K X^T."""
    K = shape.K
    G = centers.centroid(shape)
    return K.form(X, X) - 3 * K.form(G, X)


def nine_point_form(shape: TriangleShape, X) -> Fraction:
    """X K X^T - (3/2) G K X^T."""
    K = shape.K
    G = centers.centroid(shape)
    return K.form(X, X) - Fraction(3, 2) * K.form(G, X)


def _tangent_form(K, Z, X):
    return K.form(X, X) - 2 * K.form(Z, X) + K.form(Z, Z) / 2


def incircle_form(shape: TriangleShape, X) -> Fraction:
    """X K X^T - 2 I K X^T + (1/2) I K I^T."""
    return _tangent_form(shape.K, centers.incenter(shape), X)


def excircle_form(shape: TriangleShape, which: str, X) -> Fraction:
    _vertex_index(which)
    return _tangent_form(shape.K, centers.excenter(shape, which), X)


def classify_tangency(c1: Circle, c2: Circle) -> Tangency:
    """Tangency without square roots.

    With d² the squared center distance and u = d² - ρ1² - ρ2², the circles
    touch iff u² = 4ρ1²ρ2²; the sign of u separates external from internal.
    """
    if c1.shape != c2.shape:
        raise ValueError("circles belong to different reference triangles")
    if c1.center == c2.center:
        raise ConcentricCircles("tangency is undefined for concentric circles")
    d2 = dist2(c1.shape.K, c1.center, c2.center)
    u = d2 - c1.radius2 - c2.radius2
    if u * u != 4 * c1.radius2 * c2.radius2:
        return Tangency.NOT_TANGENT
    # u == 0 only when a radius is zero; a point on a circle counts as external
    return Tangency.INTERNALLY_TANGENT if u < 0 else Tangency.EXTERNALLY_TANGENT
