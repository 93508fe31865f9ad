"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 20000] [--shapes 200]
"""
import argparse
import random
import time

from barymetric import _kernels, theorems
from barymetric.sampling import random_point, random_shape, trial_rng


def _inputs(n, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        shape = random_shape(rng)
        out.append((shape.K._flat, shape.conway, random_point(rng), random_point(rng),
                    random_point(rng)))
    return out


def bench_primitives(n):
    data = _inputs(n)
    rows = []
    for name, mod in _kernels.BACKENDS.items():
        for label, fn in (
            ("bilinear", lambda m, d: m.bilinear(d[0], d[2], d[3])),
            ("bilinear_diag", lambda m, d: m.bilinear_diag(d[1], d[2], d[3])),
            ("det3", lambda m, d: m.det3(d[2], d[3], d[4])),
        ):
            t0 = time.perf_counter()
            for d in data:
                fn(mod, d)
            rows.append((label, name, (time.perf_counter() - t0) / n * 1e6))
    return rows


def bench_catalog(shapes):
    rows = []
    for name in _kernels.BACKENDS:
        _kernels.set_backend(name)
        t0 = time.perf_counter()
        for i in range(shapes):
            theorems.run_all(random_shape(trial_rng(1, i)))
        rows.append(("run_all", name, (time.perf_counter() - t0) / shapes * 1e6))
    _kernels.set_backend("cython" if "cython" in _kernels.BACKENDS else "python")
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=20000)
    ap.add_argument("--shapes", type=int, default=200)
    args = ap.parse_args()
    rows = bench_primitives(args.n) + bench_catalog(args.shapes)
    print(f"{'kernel':<14} {'backend':<8} {'us/call':>10}")
    for label, name, us in rows:
        print(f"{label:<14} {name:<8} {us:>10.2f}")
    # sanity: both backends agree on the sample
    for d in _inputs(200, seed=1):
        vals = {n: (m.bilinear(d[0], d[2], d[3]), m.det3(d[2], d[3], d[4]))
                for n, m in _kernels.BACKENDS.items()}
        assert len(set(vals.values())) == 1, vals


if __name__ == "__main__":
    main()
