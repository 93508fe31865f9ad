"""Exit criteria. Each test records one PASS/FAIL line, printed in the summary."""
import json
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from barymetric import (
    A,
    B,
    C,
    Tangency,
    TriangleShape,
    centers,
    check,
    classify_tangency,
    dist2,
    excircle,
    gauge,
    incircle,
    inner_product,
    nine_point_circle,
    oracle,
    run_all,
)
from barymetric.cli import main
from barymetric.crosscheck import cross_validate
from barymetric.sampling import random_point, random_shape, trial_rng
from barymetric.theorems import nine_points

from conftest import ExactCartesian

F = Fraction
RESULTS = []
N_SHAPES = 1000
SEED = 20240917


def record(name, ok, detail=""):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    return ok


def random_shapes(n=N_SHAPES, seed=SEED):
    return [random_shape(trial_rng(seed, i)) for i in range(n)]


def test_exact_theorem_suite(capsys):
    t0 = time.perf_counter()
    codes = {}
    for sides in ((5, 4, 3), (2, 2, 2), (6, 5, 5), (13, 14, 15)):
        codes[sides] = main(["check", "--sides", *map(str, sides), "--format", "json"])
        doc = json.loads(capsys.readouterr().out)
        assert sum(r["passed"] for r in doc["results"]) == 15
    codes["fuzz"] = main(["fuzz", "--count", "1000", "--seed", "7"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - t0
    ok = all(c == 0 for c in codes.values()) and "1000/1000 shapes passed" in out and elapsed < 10
    record("exact theorem suite (4 fixed shapes 15/15, fuzz 1000/1000, < 10 s)", ok,
           f"{elapsed:.2f} s")
    assert ok, (codes, out, elapsed)


def test_euler_formula_reproduction():
    right = check("euler_formula", TriangleShape(5, 4, 3))
    # 65/64 was produced by the exact Cartesian model in conftest before being frozen
    cart = ExactCartesian(13, 14, 15, 84)
    cart_value = cart.d2(cart.circumcenter(), cart.incenter())
    big = check("euler_formula", TriangleShape(13, 14, 15))
    ok = (right.lhs == F(5, 4) and right.passed and big.passed
          and big.lhs == big.rhs == F(65, 64) == cart_value)
    record("Euler formula |OI|^2 = R^2 - 2Rr", ok, f"(5,4,3): {right.lhs}, (13,14,15): {big.lhs}")
    assert ok


def test_feuerbach_reproduction():
    shape = TriangleShape(5, 4, 3)
    cs = centers.center_set(shape)
    ni2 = dist2(shape.K, cs.N, cs.I)
    bad = []
    for shape in random_shapes():
        nine = nine_point_circle(shape)
        if classify_tangency(nine, incircle(shape)) is not Tangency.INTERNALLY_TANGENT:
            bad.append((shape, "incircle"))
        for v in "ABC":
            if classify_tangency(nine, excircle(shape, v)) is not Tangency.EXTERNALLY_TANGENT:
                bad.append((shape, v))
    ok = ni2 == F(1, 16) and not bad
    record("Feuerbach tangency", ok, f"|NI|^2 = {ni2} on (5,4,3); {len(bad)} failures / 1000")
    assert ok, bad[:3]


def test_nine_point_membership():
    bad = [s for s in random_shapes()
           if any(nine_point_circle(s).power(X) != 0 for X in nine_points(s).values())]
    record("nine-point membership (9 points x 1000 shapes)", not bad, f"{len(bad)} failures")
    assert not bad


def test_gauge_invariance():
    rng = random.Random(SEED)
    mismatches = 0
    for _ in range(100):
        shape = random_shape(rng)
        den = rng.randint(1, 100)
        m, n, l = (F(rng.randint(-1000, 1000), den) for _ in range(3))
        K = shape.K
        Kg = K + gauge(m, n, l)
        for _ in range(100):
            P, Q, R, T = (random_point(rng) for _ in range(4))
            mismatches += inner_product(Kg, P, Q, R, T) != inner_product(K, P, Q, R, T)
    record("gauge invariance (100 gauges x 100 inner products, exact)", mismatches == 0,
           f"{mismatches} mismatches")
    assert mismatches == 0


def test_oracle_equivalence():
    rng = random.Random(SEED)
    failures = []
    worst_gauge = 0.0
    for i, shape in enumerate(random_shapes()):
        failures += [(i, m) for m in cross_validate(shape, rng, queries=10, rel_tol=1e-9)]
        kh = np.diag([float(x) for x in shape.conway])
        for placement in ("canonical", "random"):
            M = oracle.oracle_metric(oracle.embed(shape, placement, rng))
            worst_gauge = max(worst_gauge, oracle.gauge_residual(M, kh))
    ok = not failures and worst_gauge <= 1e-9
    record("oracle equivalence (1000 shapes x 10 queries x 2 placements, rel 1e-9)", ok,
           f"{len(failures)} mismatches, worst gauge residual {worst_gauge:.2e}")
    assert ok, failures[:5]


@pytest.mark.parametrize("side", [F(1), F(2), F(7, 3), F(9999, 10000)])
def test_euler_inequality_equilateral(side):
    r = check("euler_inequality", TriangleShape(side, side, side))
    ok = r.passed and r.lhs == 0
    record(f"Euler inequality equality on equilateral side {side}", ok, f"R^2 - 4r^2 = {r.lhs}")
    assert ok


def test_euler_inequality_strict_on_scalene():
    shapes = [s for s in random_shapes() if len({s.a, s.b, s.c}) == 3]
    gaps = [check("euler_inequality", s).lhs for s in shapes]
    ok = len(shapes) > 900 and all(g > 0 for g in gaps)
    record("Euler inequality strict on random scalene shapes", ok,
           f"{len(shapes)} shapes, min gap {min(gaps)}")
    assert ok


def test_catalog_on_fixed_shapes_in_process():
    for sides in ((5, 4, 3), (2, 2, 2), (6, 5, 5), (13, 14, 15)):
        assert all(r.passed for r in run_all(TriangleShape(*sides), seed=SEED))
    assert inner_product(TriangleShape(5, 4, 3).K, A, B, A, C) == 0
    assert TriangleShape(5, 4, 3).K.form(C, C) == 16
