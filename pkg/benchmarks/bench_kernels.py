"""Timing comparison of the compiled counting kernels vs the pure fallback.

Runs each hot kernel on the same integer inputs through both backends,
checks they agree, and prints a per-kernel speedup table.  Input sizes
are chosen so the slowest pure run stays around a second.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from addcomb import _kernels_py
from addcomb.sets import SplitMix64

try:
    from addcomb import _kernels_cy

    HAVE_CY = True
except ImportError:
    HAVE_CY = False


def _ints(rng: SplitMix64, n: int, lo: int, hi: int) -> list:
    vals = set()
    while len(vals) < n:
        vals.add(lo + rng.below(hi - lo + 1))
    return sorted(vals)


def bench(fn, args, repeat: int):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=1)
    ns = ap.parse_args()

    rng = SplitMix64(42)
    a = _ints(rng, 8, -500, 500)
    b = _ints(rng, 8, -500, 500)
    c = _ints(rng, 8, -500, 500)
    g1 = _ints(rng, 20, -200, 200)
    g2 = _ints(rng, 20, -200, 200)
    g3 = _ints(rng, 20, -200, 200)
    pxs = _ints(rng, 400, -1000, 1000)
    pys = [pxs[(i * 7 + 3) % len(pxs)] for i in range(len(pxs))]
    las = [1 + rng.below(20) for _ in range(400)]
    lbs = [1 + rng.below(20) for _ in range(400)]
    lcs = [rng.below(2001) - 1000 for _ in range(400)]
    x = _ints(rng, 300, 1, 4000)
    y = _ints(rng, 300, 1, 4000)

    cases = [
        ("collinear_six_counts", (a, b, c)),
        ("t_o_linehash", (g1, g2, g3)),
        ("count_incidences", (pxs, pys, las, lbs, lcs)),
        ("mul_pairs_count", (x, y)),
    ]

    print(f"{'kernel':<22} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, args in cases:
        out_py, t_py = bench(getattr(_kernels_py, name), args, ns.repeat)
        if HAVE_CY:
            out_cy, t_cy = bench(getattr(_kernels_cy, name), args, ns.repeat)
            assert out_py == out_cy, f"{name}: backend mismatch {out_py} != {out_cy}"
            print(f"{name:<22} {t_py:>10.4f} {t_cy:>13.4f} {t_py / t_cy:>7.1f}x")
        else:
            print(f"{name:<22} {t_py:>10.4f} {'n/a':>13} {'n/a':>8}")
    if not HAVE_CY:
        print("compiled extension not available; pure backend only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
