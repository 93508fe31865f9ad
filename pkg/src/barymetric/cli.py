"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 degenerate triangle.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from barymetric import centers, theorems
from barymetric.crosscheck import cross_validate
from barymetric.kernel import (
    A,
    B,
    C,
    BaryPoint,
    DegenerateTriangle,
    GeometryError,
    TriangleShape,
    cot_angle,
    dist2,
)
from barymetric.sampling import random_shape, trial_rng

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _q(x: Fraction) -> str:
    return str(x)


def _point(P) -> list[str]:
    return [_q(t) for t in P]


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def shape_from_args(args) -> TriangleShape:
    if (args.sides is None) == (args.vertices is None):
        raise UsageError("give exactly one of --sides or --vertices")
    if args.sides is not None:
        a, b, c = (_parse_rational(s) for s in args.sides)
    else:
        xa, ya, xb, yb, xc, yc = args.vertices
        # lossy: float lengths snapped to rationals with denominator <= 10**6
        a, b, c = (
            Fraction(math.hypot(x1 - x2, y1 - y2)).limit_denominator(10 ** 6)
            for (x1, y1), (x2, y2) in (((xb, yb), (xc, yc)), ((xc, yc), (xa, ya)),
                                       ((xa, ya), (xb, yb)))
        )
    return TriangleShape(a, b, c)


def _shape_json(shape: TriangleShape) -> dict:
    return {"a": _q(shape.a), "b": _q(shape.b), "c": _q(shape.c)}


def named_points(shape: TriangleShape) -> dict:
    cs = centers.center_set(shape)
    return {
        "A": A, "B": B, "C": C,
        "G": cs.G, "H": cs.H, "O": cs.O, "N": cs.N,
        "I": cs.I, "IA": cs.Ia, "IB": cs.Ib, "IC": cs.Ic,
    }


def parse_point(text: str, shape: TriangleShape) -> BaryPoint:
    """A center name (A, B, C, G, H, O, N, I, IA, IB, IC) or 'x,y,z'."""
    names = named_points(shape)
    if text.upper() in names:
        return names[text.upper()]
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"point must be a center name or 'x,y,z', got {text!r}")
    try:
        return BaryPoint.from_homogeneous(*(_parse_rational(p) for p in parts))
    except GeometryError as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------------------
# Commands. Each returns (results, passed, text_lines).


def cmd_centers(args, shape):
    cs = centers.center_set(shape)
    results = {
        "G": _point(cs.G), "H": _point(cs.H), "O": _point(cs.O), "N": _point(cs.N),
        "I": _point(cs.I), "I_A": _point(cs.Ia), "I_B": _point(cs.Ib), "I_C": _point(cs.Ic),
        "R2": _q(cs.R2), "r2": _q(cs.r2),
        "ra2": _q(cs.ra2), "rb2": _q(cs.rb2), "rc2": _q(cs.rc2),
    }
    lines = []
    for key, value in results.items():
        lines.append(f"{key:>4} = {', '.join(value) if isinstance(value, list) else value}")
    return results, True, lines


def cmd_distance(args, shape):
    P, Q = parse_point(args.points[0], shape), parse_point(args.points[1], shape)
    d2 = dist2(shape.K, P, Q)
    results = {"P": _point(P), "Q": _point(Q), "dist2": _q(d2), "approx": math.sqrt(d2)}
    return results, True, [f"|PQ|^2 = {d2}", f"|PQ| ~ {math.sqrt(d2):.12g}"]


def cmd_angle(args, shape):
    Q, P, R = (parse_point(t, shape) for t in args.points)
    cot = cot_angle(shape, Q, P, R)
    value = cot.value()
    if cot.is_degenerate:
        degrees = 0.0 if cot.ip > 0 else 180.0
    else:
        degrees = math.degrees(math.atan2(1.0, value))
        if cot.bracket < 0:
            degrees -= 180.0
    results = {
        "ip": _q(cot.ip), "bracket": _q(cot.bracket), "s2": _q(cot.s2),
        "cot_approx": value, "degrees_approx": degrees,
    }
    lines = [
        f"cot = {cot.ip} / (2 * sqrt({cot.s2}) * {cot.bracket})",
        f"cot ~ {value:.12g}",
        f"angle ~ {degrees:.10g} deg",
    ]
    return results, True, lines


def cmd_check(args, shape):
    reports = theorems.run_all(shape, args.seed)
    n_pass = sum(r.passed for r in reports)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f"  ({r.detail})" if r.detail else "")
        for r in reports
    ]
    lines.append(f"{n_pass}/{len(reports)} passed")
    return [r.to_dict() for r in reports], n_pass == len(reports), lines


def _fuzz_trial(job):
    seed, index, tol, queries = job
    rng = trial_rng(seed, index)
    shape = random_shape(rng)
    failed = [r.name for r in theorems.run_all(shape, seed) if not r.passed]
    mismatches = cross_validate(shape, rng, queries=queries, rel_tol=tol)
    failed += [f"oracle:{m.quantity}:{m.placement}" for m in mismatches]
    return index, shape, failed


def cmd_fuzz(args, shape=None):
    jobs = [(args.seed, i, args.tol, args.queries) for i in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            outcomes = list(pool.map(_fuzz_trial, jobs, chunksize=max(1, args.count // (4 * args.jobs))))
    else:
        outcomes = [_fuzz_trial(j) for j in jobs]
    failures = [(i, s, f) for i, s, f in outcomes if f]
    n_pass = args.count - len(failures)
    first = None
    lines = [f"{n_pass}/{args.count} shapes passed"]
    if failures:
        i, s, f = failures[0]
        first = {"trial": i, "shape": _shape_json(s), "failed": f}
        lines.append(
            f"first failure: trial {i} (seed {args.seed}) sides {s.a}, {s.b}, {s.c}: {', '.join(f)}"
        )
    results = {"trials": args.count, "passed": n_pass, "tol": args.tol, "first_failure": first}
    return results, not failures, lines


COMMANDS = {
    "centers": cmd_centers,
    "distance": cmd_distance,
    "angle": cmd_angle,
    "check": cmd_check,
    "fuzz": cmd_fuzz,
}


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonnegative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_nonnegative_int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")

    tri = argparse.ArgumentParser(add_help=False)
    tri.add_argument("--sides", nargs=3, metavar=("A", "B", "C"),
                     help="side lengths |BC| |CA| |AB| as integers or p/q")
    tri.add_argument("--vertices", nargs=6, type=float, metavar="X",
                     help="xA yA xB yB xC yC; lengths are rounded to rationals (lossy)")

    parser = argparse.ArgumentParser(
        prog="barymetric", description="Exact barycentric triangle geometry."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("centers", parents=[common, tri], help="centers and radii")
    p = sub.add_parser("distance", parents=[common, tri], help="squared distance")
    p.add_argument("points", nargs=2, metavar="POINT",
                   help="center name (A B C G H O N I IA IB IC) or x,y,z")
    p = sub.add_parser("angle", parents=[common, tri], help="oriented angle Q-P-R at P")
    p.add_argument("points", nargs=3, metavar="POINT")
    sub.add_parser("check", parents=[common, tri], help="run the theorem catalog")
    p = sub.add_parser("fuzz", parents=[common], help="random triangles vs theorems and oracle")
    p.add_argument("--count", type=_positive_int, default=100)
    p.add_argument("--tol", type=_positive_float, default=1e-9)
    p.add_argument("--queries", type=_positive_int, default=10)
    p.add_argument("--jobs", type=_positive_int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    shape = None
    try:
        if args.command != "fuzz":
            shape = shape_from_args(args)
        results, passed, lines = COMMANDS[args.command](args, shape)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateTriangle as exc:
        print(f"error: degenerate triangle: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "json":
        doc = {
            "command": args.command,
            "shape": _shape_json(shape) if shape is not None else None,
            "results": results,
            "passed": passed,
            "seed": args.seed,
        }
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
