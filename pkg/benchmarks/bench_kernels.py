"""Compare the numba and numpy fixpoint-kernel backends.

Times the five low-level kernels on seeded random game graphs of
increasing size and prints a table of per-call medians plus speedups.
Run as a script:

    python benchmarks/bench_kernels.py [--sizes 1000 10000 100000] [--reps 30]
"""

import argparse
import random
import statistics
import time

import numpy as np

from paritycontracts import _kernels_numpy

try:
    from paritycontracts import _kernels_numba
except ImportError:
    _kernels_numba = None

KERNELS = ("cpre_mask", "epre_mask", "safety_mask", "reach_mask",
           "attr_levels")


def random_csr(n: int, branch: int, seed: int):
    rng = random.Random(seed)
    indptr = np.zeros(n + 1, dtype=np.int32)
    indices = []
    for v in range(n):
        succs = rng.sample(range(n), rng.randint(1, branch))
        indices.extend(sorted(succs))
        indptr[v + 1] = len(indices)
    owner = np.array([rng.randrange(2) for _ in range(n)], dtype=np.int8)
    return indptr, np.array(indices, dtype=np.int32), owner


def bench_kernel(mod, name, args, reps):
    fn = getattr(mod, name)
    fn(*args)                      # warm-up; also triggers jit compilation
    samples = []
    for _ in range(reps):
        start = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[1000, 10000, 100000])
    parser.add_argument("--reps", type=int, default=30)
    parser.add_argument("--branch", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _kernels_numba is None:
        print("numba backend unavailable; timing numpy only")
    header = f"{'kernel':<12} {'n':>8} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        indptr, indices, owner = random_csr(n, args.branch, args.seed)
        rng = np.random.default_rng(args.seed)
        u = rng.random(n) < 0.2
        domain = np.ones(n, dtype=bool)
        calls = {
            "cpre_mask": (indptr, indices, owner, u, domain, 0),
            "epre_mask": (indptr, indices, u, domain),
            "safety_mask": (indptr, indices, u | (rng.random(n) < 0.5), domain),
            "reach_mask": (indptr, indices, u, domain),
            "attr_levels": (indptr, indices, owner, u, domain, 0),
        }
        for name in KERNELS:
            t_np = bench_kernel(_kernels_numpy, name, calls[name], args.reps)
            if _kernels_numba is None:
                print(f"{name:<12} {n:>8} {t_np * 1e3:>8.3f}ms {'-':>10} {'-':>8}")
                continue
            t_nb = bench_kernel(_kernels_numba, name, calls[name], args.reps)
            print(f"{name:<12} {n:>8} {t_np * 1e3:>8.3f}ms "
                  f"{t_nb * 1e3:>8.3f}ms {t_np / t_nb:>7.2f}x")


if __name__ == "__main__":
    main()
