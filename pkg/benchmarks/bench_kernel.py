"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from genjac import _pykernel

try:
    from genjac import _ckernel
except ImportError:
    _ckernel = None


def cases(k):
    u = np.linspace(-10.0, 10.0, 10_000)
    return {
        "rf x1000": lambda: [k.rf(0.5 + i * 1e-3, 1.0, 2.0) for i in range(1000)],
        "rj x1000": lambda: [k.rj(0.5 + i * 1e-3, 1.0, 2.0, 3.0) for i in range(1000)],
        "sncndn x1000": lambda: [k.sncndn(0.01 * i, 0.7, 0.3) for i in range(1000)],
        "sncndn_array 1e4": lambda: k.sncndn_array(u, 0.7, 0.3),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    kernels = [("python", _pykernel)] + ([("cython", _ckernel)] if _ckernel else [])
    timings = {}
    for name, k in kernels:
        for label, fn in cases(k).items():
            best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            timings[(name, label)] = best
    print(f"{'case':<20}" + "".join(f"{n:>12}" for n, _ in kernels) + ("     speedup" if _ckernel else ""))
    for label in cases(_pykernel):
        row = f"{label:<20}" + "".join(f"{timings[(n, label)] * 1e3:>10.3f}ms" for n, _ in kernels)
        if _ckernel:
            row += f"{timings[('python', label)] / timings[('cython', label)]:>11.1f}x"
        print(row)
    if _ckernel is None:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
