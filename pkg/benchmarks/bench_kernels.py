"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py --points 20000 --repeat 5
"""
import argparse
import timeit

import numpy as np

from bestmoebius import _kernels_py

try:
    from bestmoebius import _kernels as compiled
except ImportError:
    compiled = None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--vertices", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    z = 0.99 * np.sqrt(rng.uniform(size=args.points)) * np.exp(2j * np.pi * rng.uniform(size=args.points))
    t = np.sort(rng.uniform(0, 2 * np.pi, args.vertices))
    c = np.exp(-1j * t)
    al = np.full(args.vertices, 2.0 / args.vertices)
    zeros = 0.8 * np.exp(1j * t[:-1]) * rng.uniform(size=args.vertices - 1)

    cases = {
        "sc_log_derivatives": lambda m: m.sc_log_derivatives(z, c, al),
        "blaschke_jet": lambda m: m.blaschke_jet(z, zeros, 1.0),
    }
    print(f"{args.points} points, {args.vertices} prevertices, best of {args.repeat}")
    print(f"{'kernel':<20} {'numpy [ms]':>11} {'cython [ms]':>12} {'speed-up':>9}")
    for name, call in cases.items():
        py = min(timeit.repeat(lambda: call(_kernels_py), number=1, repeat=args.repeat)) * 1e3
        if compiled is None:
            print(f"{name:<20} {py:11.2f} {'n/a':>12} {'':>9}")
            continue
        cy = min(timeit.repeat(lambda: call(compiled), number=1, repeat=args.repeat)) * 1e3
        diff = max(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(a)))
                   for a, b in zip(call(_kernels_py), call(compiled)))
        print(f"{name:<20} {py:11.2f} {cy:12.2f} {py / cy:8.1f}x   (max rel diff {diff:.1e})")


if __name__ == "__main__":
    main()
