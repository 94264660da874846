"""Compare the numba and numpy verification kernel backends.

Times lattice-point reduction and coverage counting over synthetic point
clouds of increasing size.  Run as:  python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from polywang import _kernels


def _time(fn, *args, repeats: int = 5) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    rng = np.random.default_rng(42)
    a, b, c = 1080, 60, 540  # quotient of the worked three-tile example
    print(f"backend available: {_kernels.backend()}")
    header = f"{'points':>10} | {'kernel':18} | {'numpy (ms)':>10} | {'numba (ms)':>10} | speedup"
    print(header)
    print("-" * len(header))
    for size in (10_000, 100_000, 1_000_000):
        xs = rng.integers(-10**6, 10**6, size=size, dtype=np.int64)
        ys = rng.integers(-10**6, 10**6, size=size, dtype=np.int64)
        for name, np_fn, nb_fn in (
            ("reduce_points", _kernels.reduce_points_numpy,
             getattr(_kernels, "reduce_points_numba", None)),
            ("coverage_counts", _kernels.coverage_counts_numpy,
             getattr(_kernels, "coverage_counts_numba", None)),
        ):
            t_np = _time(np_fn, xs, ys, a, b, c)
            if _kernels.backend() == "numba" and nb_fn is not None:
                nb_fn(xs[:16], ys[:16], a, b, c)  # trigger compilation
                t_nb = _time(nb_fn, xs, ys, a, b, c)
                print(f"{size:>10} | {name:18} | {t_np * 1e3:>10.3f} | "
                      f"{t_nb * 1e3:>10.3f} | {t_np / t_nb:>6.2f}x")
            else:
                print(f"{size:>10} | {name:18} | {t_np * 1e3:>10.3f} | "
                      f"{'n/a':>10} |   n/a")


if __name__ == "__main__":
    main()
