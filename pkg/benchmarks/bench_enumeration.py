"""Benchmark the brute-force enumeration kernel: numba @njit vs pure numpy.

The workload is the real oracle workload: for the (k+2)-gon k-fold sum pairs,
sweep all 2^(m+1) omniorientation assignments against the vertex parity rows.
Run as a script:

    python benchmarks/bench_enumeration.py [max_facets]

The numba path is warmed once before timing so compilation is reported
separately. Forcing the numpy path from the outside works the same way as in
the library: QTM_NO_NUMBA=1.
"""

import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from quasitoric import build_system, cp2_sum, kernels  # noqa: E402


def time_backend(system, force_numpy, repeats=5):
    if force_numpy:
        os.environ[kernels.ENV_FLAG] = "1"
    else:
        os.environ.pop(kernels.ENV_FLAG, None)
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = kernels.enumerate_satisfying(system.rows, system.rhs, system.num_unknowns)
        best = min(best, time.perf_counter() - start)
    return result, best


def main():
    max_facets = int(sys.argv[1]) if len(sys.argv) > 1 else 18
    if not kernels.numba_available():
        print("numba not installed: only the numpy path is available")

    if kernels.numba_available():
        warm = build_system(cp2_sum(3))
        start = time.perf_counter()
        os.environ.pop(kernels.ENV_FLAG, None)
        kernels.enumerate_satisfying(warm.rows, warm.rhs, warm.num_unknowns)
        print(f"numba warm-up (jit compile): {time.perf_counter() - start:.2f}s\n")

    print(f"{'m':>3} {'masks':>9} {'count':>6} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for k in range(3, max_facets - 1):
        system = build_system(cp2_sum(k))  # m = k + 2 facets, m + 1 unknowns
        m = k + 2
        if m > max_facets:
            break
        res_np, t_np = time_backend(system, force_numpy=True)
        if kernels.numba_available():
            res_nb, t_nb = time_backend(system, force_numpy=False)
            assert res_np == res_nb, "backends disagree"
            speedup = f"{t_np / t_nb:8.1f}x"
            t_nb_text = f"{t_nb * 1e3:8.2f}ms"
        else:
            speedup, t_nb_text = "-", "-"
        print(
            f"{m:>3} {1 << (m + 1):>9} {res_np[0]:>6} {t_np * 1e3:8.2f}ms {t_nb_text:>10} {speedup:>8}"
        )
    os.environ.pop(kernels.ENV_FLAG, None)


if __name__ == "__main__":
    main()
