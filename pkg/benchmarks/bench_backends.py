#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Times the hot paths of the verification suites: scalar special functions,
model evaluation over dense field grids, and the two fused quadrature
oracles.  Run as ``python benchmarks/bench_backends.py``.
"""

import math
import time

import numpy as np

from cdwtunnel import _purekernels as pure

try:
    from cdwtunnel import _fastkernels as fast
except ImportError:
    fast = None


def timed(fn, repeats=5):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_erf(mod):
    xs = np.linspace(-6.0, 6.0, 20_000)
    erf = mod.erf
    return lambda: [erf(float(x)) for x in xs]


def bench_current_grid(mod):
    es = np.linspace(1.05, 100.0, 20_000)
    cur = mod.current_sge
    return lambda: [cur(float(e), 1.0, 1.0, 1.0, False) for e in es]


def bench_matrix_elements(mod):
    ls = np.linspace(2.0, 12.0, 20_000)
    t19 = mod.t_if_simplified
    return lambda: [t19(1.0, float(l), 1.0 / float(l), 1.0, 1.0, 1.0) for l in ls]


def bench_box_ft(mod):
    ft = mod.box_ft_quadrature
    ks = np.linspace(0.01, 20.0, 50)
    return lambda: [ft(float(k), 10.0, 1e-11) for k in ks]


def bench_overlap(mod):
    ov = mod.gaussian_overlap_current
    seps = np.linspace(4.0, 9.0, 40)
    return lambda: [ov(1.0, 0.25, 0.0, 1.0, 0.25, float(s), 0.5 * float(s), 1.0, 40.0, 1e-11) for s in seps]


def bench_pycallback_quadrature(mod):
    integ = mod.integrate_adaptive
    return lambda: integ(lambda t: math.exp(-t * t), 0.0, 6.0, 1e-13)


BENCHES = [
    ("erf x 20k", bench_erf),
    ("pair current x 20k", bench_current_grid),
    ("matrix element x 20k", bench_matrix_elements),
    ("box transform oracle x 50", bench_box_ft),
    ("overlap oracle x 40", bench_overlap),
    ("quadrature (py callback)", bench_pycallback_quadrature),
]


def main():
    if fast is None:
        print("compiled backend not available; timing the pure backend only\n")
    header = f"{'benchmark':<28} {'pure [ms]':>10} {'compiled [ms]':>14} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, maker in BENCHES:
        t_pure = timed(maker(pure)) * 1e3
        if fast is not None:
            t_fast = timed(maker(fast)) * 1e3
            print(f"{name:<28} {t_pure:>10.2f} {t_fast:>14.2f} {t_pure / t_fast:>7.1f}x")
        else:
            print(f"{name:<28} {t_pure:>10.2f} {'-':>14} {'-':>8}")


if __name__ == "__main__":
    main()
