"""Seeded generators for random rational triangles and points."""
from __future__ import annotations

import random
from fractions import Fraction

from barymetric.kernel import BaryPoint, DegenerateTriangle, TriangleShape

MAX_TERM = 10 ** 4


def random_side(rng: random.Random) -> Fraction:
    """A rational in [1, 10] with numerator and denominator at most 10⁴."""
    den = rng.randint(1, MAX_TERM // 10)
    return Fraction(rng.randint(den, 10 * den), den)


def random_shape(rng: random.Random, max_tries: int = 1000) -> TriangleShape:
    """Draw sides until they form a nondegenerate triangle."""
    for _ in range(max_tries):
        try:
            return TriangleShape(random_side(rng), random_side(rng), random_side(rng))
        except DegenerateTriangle:
            continue
    raise RuntimeError("could not sample a nondegenerate triangle")


def random_point(rng: random.Random, spread: int = 2, max_den: int = 60) -> BaryPoint:
    """A finite point with coordinates in roughly [-spread, spread]."""
    d1, d2 = rng.randint(1, max_den), rng.randint(1, max_den)
    alpha = Fraction(rng.randint(-spread * d1, spread * d1), d1)
    beta = Fraction(rng.randint(-spread * d2, spread * d2), d2)
    return BaryPoint(alpha, beta, 1 - alpha - beta)


def random_direction(rng: random.Random) -> BaryPoint:
    """A point at infinity, i.e. a nonzero vector."""
    while True:
        P, Q = random_point(rng), random_point(rng)
        if P != Q:
            return Q - P


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent stream for trial ``index`` under master ``seed``."""
    return random.Random((seed << 32) | index)
