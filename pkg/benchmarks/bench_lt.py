"""Benchmark the cascade kernels: numba jit vs pure numpy.

Times single-cascade calls on random graphs of several sizes, plus one
solver-level workload (exhaustive seed search on a planted instance), and
prints a small table. Run as:

    python benchmarks/bench_lt.py [--repeats 2000]

The numpy column is what you get with NETSPACE_PURE_NUMPY=1.
"""

import argparse
import time

import numpy as np

from netspace import brute_force_min_seeds, mle_graph, plant_cascade
from netspace.kernels import cascade_rounds_numba, cascade_rounds_numpy


def random_setup(rng, n, density=0.3):
    w = rng.random((n, n))
    keep = np.triu(rng.random((n, n)) < density, 1)
    w = np.triu(w, 1) * keep
    w = w + w.T
    thr = rng.random(n)
    seed_mask = np.zeros(n, dtype=np.bool_)
    seed_mask[rng.choice(n, size=max(1, n // 20), replace=False)] = True
    return np.ascontiguousarray(w), thr, seed_mask


def time_kernel(kernel, args, repeats):
    kernel(*args)  # warm up (jit compile / cache load)
    start = time.perf_counter()
    for _ in range(repeats):
        kernel(*args)
    return (time.perf_counter() - start) / repeats * 1e6


def bench_kernels(repeats):
    rng = np.random.default_rng(0)
    print(f"{'n':>6} {'numpy us/call':>14} {'numba us/call':>14} {'speedup':>8}")
    for n in (12, 50, 200, 800):
        args = random_setup(rng, n)
        t_np = time_kernel(cascade_rounds_numpy, args, repeats)
        if cascade_rounds_numba is None:
            print(f"{n:>6} {t_np:>14.2f} {'n/a':>14} {'n/a':>8}")
            continue
        t_nb = time_kernel(cascade_rounds_numba, args, repeats)
        assert np.array_equal(cascade_rounds_numpy(*args), cascade_rounds_numba(*args))
        print(f"{n:>6} {t_np:>14.2f} {t_nb:>14.2f} {t_np / t_nb:>7.1f}x")


def bench_oracle_solve(repeats):
    # Exhaustive seed search is the cascade-heaviest consumer in the package.
    witness = plant_cascade(10, 0.5, 2, 3)
    graph = mle_graph(witness.space)

    def run():
        brute_force_min_seeds(graph, witness.space)

    run()
    start = time.perf_counter()
    for _ in range(max(1, repeats // 100)):
        run()
    per_call = (time.perf_counter() - start) / max(1, repeats // 100) * 1e3
    backend = "numba" if cascade_rounds_numba is not None else "numpy"
    print(f"\noracle solve on planted n=10 instance ({backend} backend): {per_call:.2f} ms")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=2000,
                        help="kernel calls per measurement (default 2000)")
    args = parser.parse_args()
    if cascade_rounds_numba is None:
        print("numba unavailable or disabled; only the numpy path is timed\n")
    bench_kernels(args.repeats)
    bench_oracle_solve(args.repeats)


if __name__ == "__main__":
    main()
