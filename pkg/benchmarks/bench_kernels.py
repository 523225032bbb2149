"""Compare the compiled and vectorized scan kernels.

    python3 benchmarks/bench_kernels.py [--bound 1000] [--repeat 3]

Both backends are imported in the same process, so this ignores
MEDTRI_DISABLE_NUMBA; with numba missing only the numpy rows are printed.
The pure-Python reference is timed at a small bound as a baseline and every
backend's hits are checked against it there.
"""

import argparse
import time

from medtri._jit import use_numba
from medtri.search import kernels


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=1000)
    ap.add_argument("--reference-bound", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = {"numpy": kernels.scan_numpy}
    if use_numba:
        kernels.scan_numba(3, 20)  # compile outside the timing
        backends = {"numba": kernels.scan_numba, **backends}

    ref_hits, _ = kernels.scan_reference(3, args.reference_bound + 1)
    t_ref, _ = best_of(lambda: kernels.scan_reference(3, args.reference_bound + 1), 1)
    for name, fn in backends.items():
        hits, _ = fn(3, args.reference_bound + 1)
        got = sorted(tuple(int(v) for v in row) for row in hits)
        assert got == sorted(ref_hits), f"{name} disagrees with the reference scan"

    print(f"reference  bound={args.reference_bound:<6} {t_ref:8.3f}s")
    rows = {}
    for step, label in ((1, "full"), (2, "even")):
        for name, fn in backends.items():
            t, (hits, scanned) = best_of(lambda: fn(3, args.bound + 1, step), args.repeat)
            rows[name, label] = t
            print(f"{name:<6} {label:<4} bound={args.bound:<6} {t:8.3f}s  "
                  f"{scanned / t / 1e6:8.1f} M triples/s  hits={len(hits)}")
    if use_numba:
        for label in ("full", "even"):
            print(f"speedup numba/numpy ({label}): {rows['numpy', label] / rows['numba', label]:.1f}x")


if __name__ == "__main__":
    main()
