"""Compare the compiled and pure-numpy polynomial kernels.

The two backends win in different regimes: the numpy kernels amortize well
over large point batches, while the compiled kernels avoid per-call array
overhead and dominate the single-point calls issued by the refinement loops.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --terms 32 --points 20000 --arity 4
"""

import argparse
import time

import numpy as np

from blochkit import _kernels as kernels


def make_case(terms, points, arity, seed):
    rng = np.random.default_rng(seed)
    pows = rng.integers(0, 5, size=(terms, arity)).astype(np.int64)
    coeffs = rng.standard_normal(terms) + 1j * rng.standard_normal(terms)
    Z = 0.5 * (rng.standard_normal((points, arity)) + 1j * rng.standard_normal((points, arity)))
    return pows, coeffs, Z


def timed(fn, args, repeats):
    fn(*args)  # warmup (includes JIT compilation for the numba path)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_size(points, args):
    case = make_case(args.terms, points, args.arity, args.seed)
    rows = [("eval/numpy", kernels.poly_eval_numpy), ("grad/numpy", kernels.poly_grad_numpy)]
    if kernels.HAVE_NUMBA:
        rows += [("eval/numba", kernels.poly_eval_numba), ("grad/numba", kernels.poly_grad_numba)]
    results = {}
    for name, fn in rows:
        results[name] = timed(fn, case, args.repeats)
    line = f"points={points:>6d}"
    for name in sorted(results):
        line += f"  {name}={results[name] * 1e3:9.4f}ms"
    print(line)
    for op in ("eval", "grad"):
        np_key, nb_key = f"{op}/numpy", f"{op}/numba"
        if nb_key in results:
            print(f"    {op}: numba speedup x{results[np_key] / results[nb_key]:.2f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=8)
    parser.add_argument(
        "--points",
        type=int,
        nargs="+",
        default=[1, 16, 512, 20000],
        help="batch sizes to benchmark",
    )
    parser.add_argument("--arity", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"terms={args.terms} arity={args.arity} repeats={args.repeats}")
    if not kernels.HAVE_NUMBA:
        print("numba unavailable; benchmarking the numpy kernels only")
    for points in args.points:
        bench_size(points, args)


if __name__ == "__main__":
    main()
