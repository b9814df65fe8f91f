"""Compare the pure-Python kernels against the compiled extension.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Each workload is run through the dispatcher (which picks the compiled
backend when it is built) and through the pure backend directly; results
are checked for equality before the timings are reported.
"""

from __future__ import annotations

import argparse
import random
import time

from groupcolor import kernels
from groupcolor.kernels import pure


def timed(fn, repeat: int):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def random_multigraph(rng: random.Random, n: int, m: int, moduli):
    edges = []
    for _ in range(m):
        t = rng.randrange(n)
        h = rng.randrange(n)
        fval = tuple(rng.randrange(mm) for mm in moduli)
        edges.append((t, h, fval))
    return edges


def workloads(rng: random.Random):
    n, moduli = 7, (5,)
    edges = random_multigraph(rng, n, 14, moduli)
    yield ("coloring_count  n=7 m=14 |A|=5",
           lambda: kernels.coloring_count(n, moduli, edges),
           lambda: pure.coloring_count(n, moduli, edges))

    n2, moduli2 = 6, (2, 2)
    edges2 = random_multigraph(rng, n2, 12, moduli2)
    yield ("tension_count   n=6 m=12 |A|=4",
           lambda: kernels.tension_count(n2, moduli2, edges2),
           lambda: pure.tension_count(n2, moduli2, edges2))

    n3, m3 = 8, 18
    endpoints = [(rng.randrange(n3), rng.randrange(n3)) for _ in range(m3)]
    masks = sorted({rng.randrange(1, 1 << m3) | 1 for _ in range(4)})
    yield ("subgraph_histogram n=8 m=18",
           lambda: kernels.subgraph_histogram(n3, endpoints, masks),
           lambda: pure.subgraph_histogram(n3, endpoints, masks))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per workload; best time is kept")
    args = parser.parse_args()

    print(f"dispatcher backend: {kernels.BACKEND}")
    if kernels.BACKEND != "speedups":
        print("note: compiled extension not built, both columns run pure Python")
    print(f"{'workload':38} {'dispatch':>10} {'pure':>10} {'speedup':>8}")

    rng = random.Random(2024)
    for name, via_dispatch, via_pure in workloads(rng):
        fast_val, fast = timed(via_dispatch, args.repeat)
        slow_val, slow = timed(via_pure, args.repeat)
        if fast_val != slow_val:
            raise SystemExit(f"backend mismatch on {name}: {fast_val} != {slow_val}")
        print(f"{name:38} {fast * 1e3:9.2f}ms {slow * 1e3:9.2f}ms {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
