"""Compare the compiled q-expansion kernel against the pure fallback.

Run as: python3 benchmarks/bench_kernels.py [xmax]
Verifies equality of the outputs before reporting timings.
"""

import sys
import time

from gl2trace.kernels import tau_table_pure

try:
    from gl2trace import _speedups
except ImportError:
    _speedups = None


def timed(fn, x, repeat=3):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(x)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def main():
    xmax = int(sys.argv[1]) if len(sys.argv) > 1 else 20000
    sizes = [x for x in (2000, 8000, xmax) if x <= xmax]
    print("x\tpure(s)\tcompiled(s)\tspeedup")
    for x in sorted(set(sizes)):
        pure, tp = timed(tau_table_pure, x)
        if _speedups is None:
            print("%d\t%.3f\t-\t(extension not built)" % (x, tp))
            continue
        comp, tc = timed(_speedups.tau_table, x)
        assert comp == pure, "kernel outputs differ at x = %d" % x
        print("%d\t%.3f\t%.3f\t%.1fx" % (x, tp, tc, tp / tc))


if __name__ == "__main__":
    main()
