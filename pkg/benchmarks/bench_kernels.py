"""Compiled against pure-Python iteration kernels.

Times ``matvec`` and a fixed-length ``iterate`` on transition matrices of
random geometries, checks that both backends agree, and prints one line
per grid size::

    python benchmarks/bench_kernels.py [--sizes 32 64 128] [--steps 2000]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from strayfield import kernels
from strayfield.microstructure import GridDims, MaterialParams, generate_random_microstructure
from strayfield.stochastic import build_transition_matrix, rescale_permeabilities


def best_of(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[32, 64, 128])
    ap.add_argument("--steps", type=int, default=2000)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.compiled is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . first")

    params = rescale_permeabilities(MaterialParams(mu_r_A=1.0, mu_r_B=0.5))
    print(f"{'grid':>8}{'matvec py':>12}{'matvec cy':>12}{'speedup':>9}"
          f"{'iterate py':>12}{'iterate cy':>12}{'speedup':>9}{'max diff':>11}")
    for n in args.sizes:
        m = generate_random_microstructure(0, GridDims(n, n), 0.4, 3.0)
        a = build_transition_matrix(m, params).kernel_args()
        x = np.full(n * n, 1.0 / (n * n))
        mv_py = best_of(lambda: kernels.python.matvec(*a, x), args.repeats * 20) * 1e3
        mv_cy = best_of(lambda: kernels.compiled.matvec(*a, x), args.repeats * 20) * 1e3
        it_py = best_of(lambda: kernels.python.iterate(*a, x, args.steps), args.repeats)
        it_cy = best_of(lambda: kernels.compiled.iterate(*a, x, args.steps), args.repeats)
        diff = np.abs(kernels.python.iterate(*a, x, args.steps) - kernels.compiled.iterate(*a, x, args.steps)).max()
        print(f"{n:>5}^2 {mv_py:>9.3f} ms{mv_cy:>9.3f} ms{mv_py / mv_cy:>8.1f}x"
              f"{it_py:>10.3f} s{it_cy:>10.3f} s{it_py / it_cy:>8.1f}x{diff:>11.1e}")


if __name__ == "__main__":
    main()
