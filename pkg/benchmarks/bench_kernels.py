"""Compare the compiled and pure hole-search kernels.

Runs the same workloads through both kernels, checks the emitted hole
streams agree, and prints per-workload timings. Usage:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from holelab.gadgets import findhole_gadget, standard_family
from holelab.kernels import _pycore

try:
    from holelab.kernels import _fastcore
except ImportError:
    _fastcore = None


def workload_random(rng: random.Random, count: int = 40, n: int = 16):
    graphs = []
    for _ in range(count):
        g = standard_family("random", n, 30, seed=rng.getrandbits(63))
        graphs.append((g.adjacency_masks(), g.n, 4, None))
    return "random n=16 full enumeration", graphs

def workload_windowed(rng: random.Random, count: int = 40, n: int = 18):
    graphs = []
    for _ in range(count):
        g = standard_family("random", n, 25, seed=rng.getrandbits(63))
        graphs.append((g.adjacency_masks(), g.n, 5, 9))
    return "random n=18 window [5,9]", graphs

def workload_gadget():
    graphs = []
    for ell in (24, 28, 32):
        g = findhole_gadget(ell, 2, 4, 2)
        graphs.append((g.adjacency_masks(), g.n, ell, ell))
    return "findhole gadget first-hit", graphs


def run(kernel, graphs, first_only=False):
    t0 = time.perf_counter()
    out = []
    for masks, n, lo, hi in graphs:
        stream = kernel.find_holes(masks, n, lo, hi)
        if first_only:
            out.append(next(iter(stream), None))
        else:
            out.append(tuple(stream))
    return out, time.perf_counter() - t0


def main() -> None:
    rng = random.Random(2024)
    workloads = [
        (*workload_random(rng), False),
        (*workload_windowed(rng), False),
        (*workload_gadget(), True),
    ]
    print(f"pure kernel:     {_pycore.IMPLEMENTATION}")
    if _fastcore is None:
        print("compiled kernel: NOT BUILT (pure-only timings below)")
    else:
        print(f"compiled kernel: {_fastcore.IMPLEMENTATION}")
    for name, graphs, first_only in workloads:
        pure_out, pure_t = run(_pycore, graphs, first_only)
        line = f"{name:35s} pure {pure_t:8.3f}s"
        if _fastcore is not None:
            fast_out, fast_t = run(_fastcore, graphs, first_only)
            assert fast_out == pure_out, "kernel streams diverged"
            line += f"  compiled {fast_t:8.3f}s  speedup {pure_t / fast_t:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
