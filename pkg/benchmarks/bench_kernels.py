"""Compare the compiled and pure-Python kernels on the solver's hot calls.

Run as: python benchmarks/bench_kernels.py [n]
"""

import random
import sys
import time

from pathcontract.kernels import BACKEND, PureBitKernel

try:
    from pathcontract.kernels._ckernel import BitKernel as CBitKernel
except ImportError:
    CBitKernel = None


def random_connected_adj(n, p, rng):
    adj = [0] * n
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def bench(kernel, n, masks):
    t0 = time.perf_counter()
    acc = 0
    for s in masks:
        acc ^= kernel.neighborhood(s)
        if kernel.is_connected(s):
            acc += 1
        parts = kernel.quotient_path_parts(s)
        if parts is not None:
            acc += len(parts)
    return time.perf_counter() - t0, acc


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 18
    rng = random.Random(7)
    adj = random_connected_adj(n, 0.25, rng)
    masks = [rng.randrange(1, 1 << n) for _ in range(200_000)]

    pure = PureBitKernel(n, adj)
    t_pure, acc_pure = bench(pure, n, masks)
    print(f"pure python: {t_pure:.3f}s")

    if CBitKernel is None:
        print("compiled kernel not available (selected backend: %s)" % BACKEND)
        return
    comp = CBitKernel(n, adj)
    t_c, acc_c = bench(comp, n, masks)
    print(f"compiled:    {t_c:.3f}s")
    assert acc_pure == acc_c, "backends disagree"
    print(f"speedup:     {t_pure / t_c:.1f}x")


if __name__ == "__main__":
    main()
