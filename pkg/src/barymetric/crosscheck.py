"""Compare kernel results with the Cartesian oracle on random queries."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from barymetric import oracle
from barymetric.kernel import (
    TriangleShape,
    bracket,
    cot_angle,
    cross_product_coeff,
    dist2,
    inner_product,
)
from barymetric.sampling import random_point

__all__ = ["Mismatch", "cross_validate"]


@dataclass(frozen=True)
class Mismatch:
    quantity: str
    placement: str
    kernel: float
    oracle: float


def cross_validate(
    shape: TriangleShape,
    rng: random.Random,
    queries: int = 10,
    rel_tol: float = 1e-9,
    placements=("canonical", "random"),
) -> list[Mismatch]:
    """Return every quantity on which kernel and oracle disagree beyond ``rel_tol``."""
    K = shape.K
    area = math.sqrt(shape.s2)
    bad = []
    kh = np.diag([float(x) for x in shape.conway])
    for placement in placements:
        emb = oracle.embed(shape, placement, rng)
        M = oracle.oracle_metric(emb)
        residual = oracle.gauge_residual(M, kh)
        if residual > rel_tol * max(1.0, float(np.max(np.abs(M)))):
            bad.append(Mismatch("gauge", placement, residual, 0.0))
        for _ in range(queries):
            P, Q, R, T = (random_point(rng) for _ in range(4))
            pairs = [
                ("dist2", dist2(K, P, Q), oracle.oracle_dist2(emb, P, Q)),
                ("dot", inner_product(K, P, Q, R, T), oracle.oracle_dot(emb, P, Q, R, T)),
                ("area", float(bracket(P, Q, R)) * area, oracle.oracle_area(emb, P, Q, R)),
                ("cross", 2 * area * float(cross_product_coeff(P, Q, R, T)),
                 oracle.oracle_cross(emb, P, Q, R, T)),
            ]
            if P != Q and P != R:
                cot = cot_angle(shape, Q, P, R)
                if not cot.is_degenerate:
                    pairs.append(("cot", cot.value(), oracle.oracle_cot(emb, Q, P, R)))
            for name, exact, approx in pairs:
                if not oracle.compare(exact, approx, rel_tol):
                    bad.append(Mismatch(name, placement, float(exact), approx))
    return bad
