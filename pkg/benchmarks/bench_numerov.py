"""Benchmark the compiled Numerov kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_numerov.py [n_points]

Times raw sweeps on a Gendenshtein potential grid and one full spectrum
extraction per backend.  The compiled kernel is what makes the verification
suite comfortably fit its runtime budgets; the fallback is the portability
story.
"""

import sys
import time

import numpy as np

from rrspectra._kernels import numerov_py
from rrspectra.oracle import numerov_spectrum
from rrspectra.spectral import gendenshtein_params
from rrspectra.verify import oracle_grid_for

try:
    from rrspectra._kernels import numerov_cy

    BACKENDS = [("compiled", numerov_cy.sweep), ("python", numerov_py.sweep)]
except ImportError:
    BACKENDS = [("python", numerov_py.sweep)]


def time_sweeps(sweep, t, repeats):
    out = np.empty(len(t))
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        sweep(t, 0.0, 1e-8, out)
        best = min(best, time.perf_counter() - t0)
    return best


def time_spectrum(backend_name, grid):
    import rrspectra._kernels as k

    saved = k.sweep
    k.sweep = dict(BACKENDS)[backend_name]
    try:
        t0 = time.perf_counter()
        est = numerov_spectrum(grid, 3, tol=1e-8)
        dt = time.perf_counter() - t0
    finally:
        k.sweep = saved
    return dt, [e.energy for e in est]


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 8192
    spec = gendenshtein_params(2.5, 0.5)
    _vmap, grid = oracle_grid_for(spec, [-6.25, -2.25, -0.25], n=n)
    dx = grid.dx
    t = (dx * dx / 12.0) * (grid.values - (-2.0))

    print("grid points: %d" % n)
    ref = None
    for name, sweep in BACKENDS:
        best = time_sweeps(sweep, t, repeats=5)
        rate = n / best / 1e6
        line = "%-9s sweep: %8.3f ms  (%6.1f Mpts/s)" % (name, best * 1e3, rate)
        if ref is None:
            ref = best
        else:
            line += "  speedup vs first: %.1fx" % (best / ref if best > ref else ref / best)
        print(line)

    for name, _sweep in BACKENDS:
        dt, energies = time_spectrum(name, grid)
        print("%-9s 3-level spectrum: %7.3f s  -> %s" % (name, dt, ["%.6f" % e for e in energies]))


if __name__ == "__main__":
    main()
