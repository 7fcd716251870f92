#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallbacks.

Usage: python bench/benchmark_kernels.py [--repeat N]
"""

import argparse
import time

from tanglekit.diagrams import braid, braid_closure
from tanglekit.jones import kauffman_bracket
from tanglekit.presentation import (
    burnside_kei,
    enumerate_kei,
    free_burnside_presentation,
    fundamental_kei,
    kernel_backend,
)


def clock(fn, repeat):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, value


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if kernel_backend() != "compiled":
        print("compiled kernel not available; nothing to compare")
        return

    link_9240 = braid_closure(braid([1, 1, -2] * 3))
    turks_head = braid_closure(braid([1, -2] * 4))
    thirteen = braid_closure(braid([1, -2, 1, -2, 2, 2, 2, 2, 2, 1, -2, 1, 2]))

    jobs = [
        ("Q(3,3) enumeration",
         lambda b: enumerate_kei(free_burnside_presentation(3, 3), cap=4000, backend=b)),
        ("Q(4,3) enumeration",
         lambda b: enumerate_kei(free_burnside_presentation(4, 3), cap=4000, backend=b)),
        ("Q(3,4) enumeration",
         lambda b: enumerate_kei(free_burnside_presentation(3, 4), cap=4000, backend=b)),
        ("BQ5 of the 9-crossing link",
         lambda b: burnside_kei(link_9240, 5, cap=8000, backend=b)),
        ("BQ3 of the 8-crossing knot",
         lambda b: burnside_kei(turks_head, 3, cap=8000, backend=b)),
        ("fund. Kei cap-out, 8 crossings",
         lambda b: enumerate_kei(fundamental_kei(turks_head), cap=500, backend=b)),
        ("bracket, 13 crossings",
         lambda b: kauffman_bracket(thirteen, backend=b)),
    ]

    print(f"{'task':34s} {'compiled':>10s} {'pure':>10s} {'speedup':>8s}")
    for name, fn in jobs:
        tc, vc = clock(lambda: fn(None), args.repeat)
        tp, vp = clock(lambda: fn("pure"), max(1, args.repeat // 3))
        if hasattr(vc, "kei"):
            assert vc.completed == vp.completed and vc.deductions == vp.deductions
            if vc.completed:
                assert vc.kei.table == vp.kei.table, name
        else:
            assert vc == vp, name
        print(f"{name:34s} {tc * 1e3:8.1f}ms {tp * 1e3:8.1f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
