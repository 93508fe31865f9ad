"""Floating-point Cartesian reference for the exact kernel.

The triangle is placed in the plane with textbook formulas, barycentric
points are mapped to (x, y), and every quantity is recomputed with ordinary
planar geometry. Nothing here calls into the rational kernel, so any
disagreement points at one side or the other.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from barymetric.kernel import InfiniteMisuse

__all__ = [
    "CartesianPoint",
    "DegenerateEmbedding",
    "Embedding",
    "compare",
    "embed",
    "from_cartesian",
    "gauge_residual",
    "oracle_area",
    "oracle_cot",
    "oracle_cross",
    "oracle_dist2",
    "oracle_dot",
    "oracle_metric",
    "to_cartesian",
]


class DegenerateEmbedding(ValueError):
    pass


class CartesianPoint(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Embedding:
    A: CartesianPoint
    B: CartesianPoint
    C: CartesianPoint
    placement: str

    def matrix(self) -> np.ndarray:
        """The 3x3 matrix with columns (x, y, 1) of A, B, C."""
        return np.array([
            [self.A.x, self.B.x, self.C.x],
            [self.A.y, self.B.y, self.C.y],
            [1.0, 1.0, 1.0],
        ])


def embed(shape, placement: str = "canonical", rng: random.Random | None = None) -> Embedding:
    """Place ``shape`` counterclockwise with B at the origin and C on the positive x-axis.

    ``placement="random"`` then applies a random rotation and translation.
    """
    a, b, c = (Fraction(x) for x in shape.sides)
    # law of cosines in exact arithmetic; floats here lose needle triangles
    xa = (a * a + c * c - b * b) / (2 * a)
    ya = math.sqrt(c * c - xa * xa)
    pts = [(float(xa), ya), (0.0, 0.0), (float(a), 0.0)]
    if placement == "canonical":
        pass
    elif placement == "random":
        rng = rng or random.Random()
        theta = rng.uniform(0, 2 * math.pi)
        tx, ty = rng.uniform(-10, 10), rng.uniform(-10, 10)
        ct, st = math.cos(theta), math.sin(theta)
        pts = [(ct * x - st * y + tx, st * x + ct * y + ty) for x, y in pts]
    else:
        raise ValueError(f"unknown placement {placement!r}")
    return Embedding(*(CartesianPoint(*p) for p in pts), placement=placement)


def to_cartesian(emb: Embedding, P) -> CartesianPoint:
    w = [float(t) for t in P]
    if abs(sum(w) - 1.0) > 1e-12:
        raise InfiniteMisuse("only finite points have Cartesian coordinates")
    x, y, _ = emb.matrix() @ np.array(w)
    return CartesianPoint(float(x), float(y))


def _signed_area(p, q, r) -> float:
    return 0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]))


def from_cartesian(emb: Embedding, pt) -> tuple[float, float, float]:
    """Barycentric coordinates of ``pt`` as floats, by ratios of signed areas."""
    total = _signed_area(emb.A, emb.B, emb.C)
    if total == 0.0:
        raise DegenerateEmbedding("triangle has zero area")
    return (
        _signed_area(pt, emb.B, emb.C) / total,
        _signed_area(emb.A, pt, emb.C) / total,
        _signed_area(emb.A, emb.B, pt) / total,
    )


def oracle_metric(emb: Embedding) -> np.ndarray:
    """S^T S for the coordinate matrix S of the embedding."""
    S = emb.matrix()
    return S.T @ S


def gauge_residual(M: np.ndarray, K: np.ndarray) -> float:
    """Largest violation of D[i, j] = (D[i, i] + D[j, j]) / 2 for D = M - K."""
    D = np.asarray(M, dtype=float) - np.asarray(K, dtype=float)
    diag = np.diag(D)
    return float(np.max(np.abs(D - (diag[:, None] + diag[None, :]) / 2)))


def oracle_dist2(emb: Embedding, P, Q) -> float:
    p, q = to_cartesian(emb, P), to_cartesian(emb, Q)
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


def oracle_dot(emb: Embedding, P, Q, R, T) -> float:
    p, q, r, t = (to_cartesian(emb, X) for X in (P, Q, R, T))
    return (q.x - p.x) * (t.x - r.x) + (q.y - p.y) * (t.y - r.y)


def oracle_area(emb: Embedding, P, Q, R) -> float:
    """Signed area of PQR, positive when counterclockwise."""
    return _signed_area(*(to_cartesian(emb, X) for X in (P, Q, R)))


def oracle_cross(emb: Embedding, P, Q, R, T) -> float:
    """z-component of PQ x RT."""
    p, q, r, t = (to_cartesian(emb, X) for X in (P, Q, R, T))
    return (q.x - p.x) * (t.y - r.y) - (q.y - p.y) * (t.x - r.x)


def oracle_cot(emb: Embedding, Q, P, R) -> float:
    """Cotangent of the oriented angle at P from PQ to PR."""
    p, q, r = (to_cartesian(emb, X) for X in (P, Q, R))
    ux, uy = q.x - p.x, q.y - p.y
    vx, vy = r.x - p.x, r.y - p.y
    return (ux * vx + uy * vy) / (ux * vy - uy * vx)


def compare(kernel_value, oracle_value: float, rel_tol: float) -> bool:
    """|kernel - oracle| <= rel_tol * max(1, |oracle|)."""
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    return abs(float(kernel_value) - oracle_value) <= rel_tol * max(1.0, abs(oracle_value))
