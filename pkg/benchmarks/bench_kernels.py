"""Time the compiled kernels against the numpy fallback.

Usage::

    python3 benchmarks/bench_kernels.py [--rows 20000] [--dim 4] [--repeat 5]

Each kernel runs on identical inputs under both backends. The script reports
the best-of-``repeat`` wall time, the speedup, and the largest disagreement.
"""

import argparse
import time

import numpy as np

from normgeom import _backend, spaces
from normgeom.characterizations import BJ_GRID, BJ_REFINE_TOL, BJ_SPAN, classify_space


def _best(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def _cases(rows, dim, rng):
    sp = spaces.lp(3, dim)
    k = sp._kernel
    X = rng.standard_normal((rows, dim))
    F = rng.standard_normal((rows, dim))
    G = rng.standard_normal((rows, dim))
    f, g = rng.standard_normal(dim), rng.standard_normal(dim)
    gap = np.linalg.norm(f - g)
    P1 = f + 0.1 * gap * rng.standard_normal((rows, dim)) / np.sqrt(dim)
    P2 = g + 0.1 * gap * rng.standard_normal((rows, dim)) / np.sqrt(dim)
    V = P2 - P1
    zeros, ones = np.zeros(rows), np.ones(rows)
    return {
        "norms (l3)": lambda: _backend.norms(X, *k),
        "norms (l2)": lambda: _backend.norms(X, *spaces.euclidean(dim)._kernel),
        "bj_min (l3)": lambda: _backend.bj_min(F, G, *k, BJ_GRID, BJ_SPAN, BJ_REFINE_TOL)[0],
        "bj_min (l1)": lambda: _backend.bj_min(F, G, *spaces.lp(1, dim)._kernel, BJ_GRID,
                                               BJ_SPAN, BJ_REFINE_TOL)[0],
        "bisect_diff (l3)": lambda: _backend.bisect_diff(
            P1 - f, V, P1 - g, V, zeros, ones, *k, 200, 1e-11)[0],
        "classify l1 dim 3": lambda: np.array(
            [r.max_residual for r in classify_space(spaces.lp(1, 3), budget=rows).results]),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=20_000)
    ap.add_argument("--dim", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    names = _backend.available()
    if "cython" not in names:
        print("compiled extension not built; only the python backend is available")
    cases = _cases(args.rows, args.dim, np.random.default_rng(args.seed))
    prev = _backend.current()
    print(f"{'kernel':<20}" + "".join(f"{n + ' [s]':>14}" for n in names)
          + f"{'speedup':>10}{'max |diff|':>12}")
    try:
        for label, fn in cases.items():
            times, outs = {}, {}
            for name in names:
                _backend.set_backend(name)
                times[name], outs[name] = _best(fn, args.repeat)
            row = f"{label:<20}" + "".join(f"{times[n]:>14.4f}" for n in names)
            if len(names) == 2:
                diff = float(np.max(np.abs(outs["cython"] - outs["python"])))
                row += f"{times['python'] / times['cython']:>9.1f}x{diff:>12.1e}"
            print(row)
    finally:
        _backend.set_backend(prev)


if __name__ == "__main__":
    main()
