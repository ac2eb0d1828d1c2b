"""Benchmark: compiled Cython kernels vs the pure-Python fallback.

Times the three hot loops on realistic workloads (the bivariate geometric
fold that builds the crank generating function, the z-free row convolution,
and the truncated Cauchy product) and prints a comparison table.  Both
backends must produce identical results; this script asserts that too.

Usage: python benchmarks/bench_kernels.py [--order N] [--repeat R]
"""

import argparse
import time

from cranktab import _kernels_py
from cranktab.series import distinct_series, euler_product

try:
    from cranktab import _ckernels
except ImportError:
    _ckernels = None


def _seed_rows(order):
    width = 2 * order + 1
    qq = euler_product(order).coeffs
    rows = [[0] * width for _ in range(order + 1)]
    for n in range(order + 1):
        rows[n][order] = qq[n]
    return rows


def bench_fold(impl, order):
    rows = _seed_rows(order)
    t0 = time.perf_counter()
    for k in range(1, order + 1):
        impl.geom_fold(rows, k, +1, order)
        impl.geom_fold(rows, k, -1, order)
    return time.perf_counter() - t0, rows


def bench_zfree(impl, order, rows):
    s = distinct_series(order).coeffs
    t0 = time.perf_counter()
    out = impl.zfree_mul(rows, s, order)
    return time.perf_counter() - t0, out


def bench_cauchy(impl, order, repeat):
    a = [((i * 2654435761) % 2001) - 1000 for i in range(order + 1)]
    b = [((i * 40503) % 2001) - 1000 for i in range(order + 1)]
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = impl.cauchy_mul(a, b)
    return (time.perf_counter() - t0) / repeat, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=300)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    impls = [("python", _kernels_py)]
    if _ckernels is not None:
        impls.append(("c", _ckernels))
    else:
        print("compiled kernels not available; timing the pure backend only")

    results = {}
    for name, impl in impls:
        t_fold, rows = bench_fold(impl, args.order)
        t_zfree, conv = bench_zfree(impl, args.order, rows)
        t_cauchy, prod = bench_cauchy(impl, args.order, args.repeat)
        results[name] = {
            "fold": (t_fold, rows),
            "zfree": (t_zfree, conv),
            "cauchy": (t_cauchy, prod),
        }

    if len(results) == 2:
        for key in ("fold", "zfree", "cauchy"):
            assert results["python"][key][1] == results["c"][key][1], f"{key} mismatch"

    print(f"\norder {args.order}")
    print(f"{'kernel':<10}" + "".join(f"{name:>12}" for name, _ in impls) +
          ("     speedup" if len(impls) == 2 else ""))
    for key, label in (("fold", "geom fold"), ("zfree", "zfree mul"), ("cauchy", "cauchy mul")):
        row = f"{label:<10}"
        for name, _ in impls:
            row += f"{results[name][key][0] * 1000:>10.1f}ms"
        if len(impls) == 2:
            row += f"{results['python'][key][0] / results['c'][key][0]:>10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
