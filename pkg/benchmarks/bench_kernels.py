#!/usr/bin/env python3
"""Benchmark the jitted kernel path against the pure-Python fallback.

The path is chosen once per process by GAMMA_ENCLOSE_NUMBA, so each side
runs in its own subprocess with the flag set accordingly; the table shows
what disabling the JIT costs.

    python benchmarks/bench_kernels.py            # full sizes
    python benchmarks/bench_kernels.py --quick    # ~10x smaller
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _worker(scale: int) -> None:
    import numpy as np

    import gammaenc._kernels as k
    from gammaenc._accel import NUMBA_ENABLED

    def best_of(func, *args, repeat: int = 3) -> float:
        best = float("inf")
        for _ in range(repeat):
            start = time.perf_counter()
            func(*args)
            best = min(best, time.perf_counter() - start)
        return best

    def mul_add_chain(n: int):
        h, l = 1.0, 0.0
        for _ in range(n):
            h, l = k.dd_mul(h, l, 1.0000000001, 1e-27)
            h, l = k.dd_add(h, l, -1e-10, 0.0)
        return h, l  # consumed so the loop cannot be optimized away

    if NUMBA_ENABLED:
        # time the loop inside the kernel path, not Python dispatch
        import numba

        mul_add_chain = numba.njit(nogil=True)(mul_add_chain)

    def lgamma_points(xs):
        acc = 0.0
        for x in xs:
            h, _ = k.dd_lgamma(x, 0.0, 24.0, 12)
            acc += h
        return acc

    n_mul = 200_000 // scale
    xs = [float(x) for x in np.geomspace(1e-3, 1e3, 2_000 // scale)]
    k_series = 2_000_000 // scale

    # trigger any compilation outside the timed region
    mul_add_chain(2)
    lgamma_points(xs[:2])
    k.lgamma_series_sum(1.0, 10)

    timings = {
        "jit": NUMBA_ENABLED,
        f"dd mul+add chain ({n_mul:,} iters)": best_of(mul_add_chain, n_mul),
        f"lgamma oracle ({len(xs):,} points)": best_of(lgamma_points, xs),
        f"series partial sum ({k_series:,} terms)": best_of(
            k.lgamma_series_sum, 4.0, k_series
        ),
    }
    print(json.dumps(timings))


def _run_side(enable_jit: bool, scale: int) -> dict:
    env = dict(os.environ, GAMMA_ENCLOSE_NUMBA="1" if enable_jit else "0")
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker", "--scale", str(scale)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(proc.stdout.splitlines()[-1])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("--scale", type=int, default=1, help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.worker:
        _worker(args.scale)
        return

    scale = 10 if args.quick else 1
    jit = _run_side(True, scale)
    pure = _run_side(False, scale)
    if not jit.pop("jit"):
        print("warning: numba unavailable; both columns ran the pure path")
    pure.pop("jit")

    print(f"{'kernel':<44} {'numba':>10} {'pure':>10} {'speedup':>9}")
    for name, jit_s in jit.items():
        pure_s = pure[name]
        print(f"{name:<44} {jit_s:>9.4f}s {pure_s:>9.4f}s {pure_s / jit_s:>8.1f}x")


if __name__ == "__main__":
    main()
