"""Catalog of exact identity checks for a reference triangle.

Every entry compares rational witnesses with ``==`` (one inequality uses
``>=``); nothing here carries a tolerance. Universally quantified identities
are probed at A, B, C, G and a few seeded random points.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from barymetric import centers, circles
from barymetric.kernel import A, B, C, TriangleShape, _require_finite, bracket, dist2
from barymetric.sampling import random_point

__all__ = [
    "CATALOG",
    "TheoremReport",
    "UnknownTheorem",
    "check",
    "default_probes",
    "nine_points",
    "run_all",
]

N_RANDOM_PROBES = 4


class UnknownTheorem(LookupError):
    pass


@dataclass(frozen=True)
class TheoremReport:
    name: str
    shape_used: TriangleShape
    passed: bool
    lhs: object
    rhs: object
    relation: str = "=="
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "relation": self.relation,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "detail": self.detail,
        }


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def default_probes(seed: int = 0) -> list:
    rng = random.Random(seed)
    G = centers.centroid(None)
    return [A, B, C, G] + [random_point(rng) for _ in range(N_RANDOM_PROBES)]


@dataclass
class _Context:
    shape: TriangleShape
    probes: list
    cs: centers.CenterSet = field(init=False)

    def __post_init__(self):
        self.cs = centers.center_set(self.shape)

    @property
    def K(self):
        return self.shape.K

    def d2(self, P, Q):
        return dist2(self.shape.K, P, Q)


def _report(ctx, name, lhs, rhs, labels=None, extra_ok=True, extra_detail=""):
    """Componentwise equality report for tuples of witnesses."""
    if isinstance(lhs, tuple):
        bad = [i for i, (x, y) in enumerate(zip(lhs, rhs)) if x != y]
        if len(lhs) != len(rhs):
            bad.append(-1)
    else:
        bad = [] if lhs == rhs else [0]
    details = []
    if bad:
        names = [labels[i] if labels and i >= 0 else f"component {i}" for i in bad]
        details.append("mismatch at " + ", ".join(names))
    if not extra_ok:
        details.append(extra_detail)
    return TheoremReport(
        name, ctx.shape, not bad and extra_ok, lhs, rhs, "==", "; ".join(details)
    )


def _euler_line(ctx):
    cs = ctx.cs
    return _report(ctx, "euler_line", tuple(3 * cs.G), tuple(2 * cs.O + cs.H),
                   ["alpha", "beta", "gamma"])


def _centroid_min(ctx):
    G = ctx.cs.G
    base = ctx.d2(G, A) + ctx.d2(G, B) + ctx.d2(G, C)
    lhs = tuple(ctx.d2(X, A) + ctx.d2(X, B) + ctx.d2(X, C) for X in ctx.probes)
    rhs = tuple(base + 3 * ctx.d2(G, X) for X in ctx.probes)
    return _report(ctx, "centroid_min", lhs, rhs, [f"probe {i}" for i in range(len(lhs))])


def _h_kernel(ctx):
    H, K = ctx.cs.H, ctx.K
    hkh = K.form(H, H)
    lhs = tuple(K.form(H, X) for X in ctx.probes)
    return _report(ctx, "h_kernel", lhs, (hkh,) * len(lhs),
                   [f"probe {i}" for i in range(len(lhs))])


def _oko_hkh(ctx):
    cs, K = ctx.cs, ctx.K
    return _report(ctx, "oko_hkh", K.form(cs.O, cs.O) + K.form(cs.H, cs.H), cs.R2)


def _euler_formula(ctx):
    cs = ctx.cs
    return _report(ctx, "euler_formula", ctx.d2(cs.O, cs.I), cs.R2 - 2 * cs.Rr)


def _euler_inequality(ctx):
    cs = ctx.cs
    gap = cs.R2 - 4 * cs.r2
    ok = gap >= 0 and cs.R2 > 0 and cs.r2 > 0
    return TheoremReport("euler_inequality", ctx.shape, ok, gap, Fraction(0), ">=",
                         "" if ok else "R^2 - 4r^2 is negative")


def _oia_formula(ctx):
    cs = ctx.cs
    lhs = tuple(ctx.d2(cs.O, X) for X in (cs.Ia, cs.Ib, cs.Ic))
    rhs = (cs.R2 + 2 * cs.Rra, cs.R2 + 2 * cs.Rrb, cs.R2 + 2 * cs.Rrc)
    return _report(ctx, "oia_formula", lhs, rhs, ["I_A", "I_B", "I_C"])


def _tangency_ok(c1, c2, expected):
    if c1.center == c2.center:
        # only the equilateral case: the two circles coincide
        if c1.radius2 == c2.radius2:
            return True, "circles coincide"
        return False, "concentric circles with different radii"
    kind = circles.classify_tangency(c1, c2)
    return kind is expected, f"classified as {kind.value}"


def _feuerbach_inner(ctx):
    cs = ctx.cs
    lhs = ctx.d2(cs.N, cs.I)
    rhs = cs.R2 / 4 - cs.Rr + cs.r2
    nine = circles.Circle(ctx.shape, cs.N, cs.R2 / 4)
    inc = circles.Circle(ctx.shape, cs.I, cs.r2)
    ok, why = _tangency_ok(nine, inc, circles.Tangency.INTERNALLY_TANGENT)
    return _report(ctx, "feuerbach_inner", lhs, rhs, extra_ok=ok, extra_detail=why)


def _feuerbach_outer(ctx):
    cs = ctx.cs
    nine = circles.Circle(ctx.shape, cs.N, cs.R2 / 4)
    pairs = ((cs.Ia, cs.ra2, cs.Rra), (cs.Ib, cs.rb2, cs.Rrb), (cs.Ic, cs.rc2, cs.Rrc))
    lhs = tuple(ctx.d2(cs.N, X) for X, _, _ in pairs)
    rhs = tuple(cs.R2 / 4 + Rrx + rx2 for _, rx2, Rrx in pairs)
    ok, whys = True, []
    for label, (X, rx2, _) in zip("ABC", pairs):
        good, why = _tangency_ok(nine, circles.Circle(ctx.shape, X, rx2),
                                 circles.Tangency.EXTERNALLY_TANGENT)
        if not good:
            ok = False
            whys.append(f"excircle {label}: {why}")
    return _report(ctx, "feuerbach_outer", lhs, rhs, ["I_A", "I_B", "I_C"],
                   extra_ok=ok, extra_detail="; ".join(whys))


def _median_ratio(ctx):
    G = ctx.cs.G
    mids = (centers.midpoint(B, C), centers.midpoint(C, A), centers.midpoint(A, B))
    lhs = tuple(tuple(3 * G - V) for V in (A, B, C))
    rhs = tuple(tuple(2 * M) for M in mids)
    collinear = all(bracket(G, V, M) == 0 for V, M in zip((A, B, C), mids))
    return _report(ctx, "median_ratio", lhs, rhs, ["median A", "median B", "median C"],
                   extra_ok=collinear, extra_detail="G is off a median")


def _altitude_concurrency(ctx):
    K, H = ctx.K, ctx.cs.H
    bc, ca, ab = B - C, C - A, A - B

    def altitudes(X):
        return (K.form(bc, X - A), K.form(ca, X - B), K.form(ab, X - C))

    sums = tuple(sum(altitudes(X)) for X in ctx.probes)
    at_h = altitudes(H)
    lhs = sums + at_h
    labels = [f"sum at probe {i}" for i in range(len(sums))] + [
        "altitude A at H", "altitude B at H", "altitude C at H"]
    return _report(ctx, "altitude_concurrency", lhs, (Fraction(0),) * len(lhs), labels)


def _side_relations(ctx):
    s = ctx.shape
    lhs = (s.a ** 2, s.b ** 2, s.c ** 2, ctx.d2(B, C), ctx.d2(C, A), ctx.d2(A, B))
    rhs = (s.sB + s.sC, s.sC + s.sA, s.sA + s.sB) * 2
    return _report(ctx, "side_relations", lhs, rhs,
                   ["a^2", "b^2", "c^2", "|BC|^2", "|CA|^2", "|AB|^2"])


def _vertex_products(ctx):
    K, s = ctx.K, ctx.shape
    lhs = (K.form(A, A), K.form(B, B), K.form(C, C),
           K.form(A, B), K.form(B, C), K.form(C, A))
    rhs = (s.sA, s.sB, s.sC, Fraction(0), Fraction(0), Fraction(0))
    return _report(ctx, "vertex_products", lhs, rhs,
                   ["AKA", "BKB", "CKC", "AKB", "BKC", "CKA"])


def _incircle_ids(ctx):
    K, cs = ctx.K, ctx.cs
    G3 = 3 * cs.G
    lhs = [K.form(cs.I, cs.I), K.form(G3, cs.I)]
    rhs = [2 * cs.r2, 2 * cs.Rr + 2 * cs.r2]
    labels = ["IKI", "3GKI"]
    for v, X, rx2, Rrx in (("A", cs.Ia, cs.ra2, cs.Rra), ("B", cs.Ib, cs.rb2, cs.Rrb),
                           ("C", cs.Ic, cs.rc2, cs.Rrc)):
        lhs += [K.form(X, X), K.form(G3, X)]
        rhs += [2 * rx2, -2 * Rrx + 2 * rx2]
        labels += [f"I{v}KI{v}", f"3GKI{v}"]
    return _report(ctx, "incircle_ids", tuple(lhs), tuple(rhs), labels)


def nine_points(shape: TriangleShape, H=None) -> dict:
    """The nine named points of the nine-point circle."""
    if H is None:
        H = centers.orthocenter(shape)
    e_a, e_b, e_c = centers.euler_points(shape, H)
    return {
        "mid BC": centers.midpoint(B, C),
        "mid CA": centers.midpoint(C, A),
        "mid AB": centers.midpoint(A, B),
        "foot A": centers.foot_of_perpendicular(shape, A, B, C),
        "foot B": centers.foot_of_perpendicular(shape, B, C, A),
        "foot C": centers.foot_of_perpendicular(shape, C, A, B),
        "mid AH": e_a,
        "mid BH": e_b,
        "mid CH": e_c,
    }


def _nine_point_membership(ctx):
    cs = ctx.cs
    circle = circles.Circle(ctx.shape, cs.N, cs.R2 / 4)
    pts = nine_points(ctx.shape, cs.H)
    lhs = tuple(circle.power(X) for X in pts.values())
    return _report(ctx, "nine_point_membership", lhs, (Fraction(0),) * 9, list(pts))


CATALOG: dict[str, Callable[[_Context], TheoremReport]] = {
    "euler_line": _euler_line,
    "centroid_min": _centroid_min,
    "h_kernel": _h_kernel,
    "oko_hkh": _oko_hkh,
    "euler_formula": _euler_formula,
    "euler_inequality": _euler_inequality,
    "oia_formula": _oia_formula,
    "feuerbach_inner": _feuerbach_inner,
    "feuerbach_outer": _feuerbach_outer,
    "median_ratio": _median_ratio,
    "altitude_concurrency": _altitude_concurrency,
    "side_relations": _side_relations,
    "vertex_products": _vertex_products,
    "incircle_ids": _incircle_ids,
    "nine_point_membership": _nine_point_membership,
}


def check(name: str, shape: TriangleShape, probes=None, seed: int = 0) -> TheoremReport:
    try:
        fn = CATALOG[name]
    except KeyError:
        raise UnknownTheorem(f"no theorem named {name!r}; known: {', '.join(CATALOG)}") from None
    if probes is None:
        probes = default_probes(seed)
    else:
        _require_finite(*probes)
    return fn(_Context(shape, list(probes)))


def run_all(shape: TriangleShape, seed: int = 0) -> list[TheoremReport]:
    ctx = _Context(shape, default_probes(seed))
    return [fn(ctx) for fn in CATALOG.values()]
