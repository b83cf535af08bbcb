"""Compare the compiled and numpy Jacobi kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Sizes cover what the library meets in practice: 9x9 (two qutrits), 36x64
(realigned 6x8 state), 48x48 (partial transpose of a 6x8 state) and 81x81.
LAPACK timings are printed for scale only.
"""

import argparse
import timeit

import numpy as np

from concurrence_bound.linalg import _jacobi_py

try:
    from concurrence_bound.linalg import _jacobi_ext
except ImportError:
    _jacobi_ext = None

CASES = [
    ("hermitian", (9, 9)),
    ("hermitian", (48, 48)),
    ("hermitian", (81, 81)),
    ("svd", (9, 9)),
    ("svd", (36, 64)),
    ("svd", (81, 81)),
]


def make_input(kind, shape, rng):
    m = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return m + m.conj().T if kind == "hermitian" else m


def best_time(fn, arg, repeat):
    number = max(1, int(0.2 / max(timeit.timeit(lambda: fn(arg), number=1), 1e-6)))
    return min(timeit.repeat(lambda: fn(arg), number=number, repeat=repeat)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = np.random.default_rng(0)
    if _jacobi_ext is None:
        print("compiled extension not built; only the numpy backend is timed")

    print(f"{'kernel':<10} {'shape':>8} {'compiled ms':>12} {'numpy ms':>10} {'speedup':>8} {'lapack ms':>10}")
    for kind, shape in CASES:
        x = make_input(kind, shape, rng)
        name = "hermitian_jacobi" if kind == "hermitian" else "one_sided_jacobi"
        lapack = np.linalg.eigvalsh if kind == "hermitian" else (lambda a: np.linalg.svd(a, compute_uv=False))
        t_py = best_time(getattr(_jacobi_py, name), x, args.repeat)
        t_lp = best_time(lapack, x, args.repeat)
        if _jacobi_ext is not None:
            t_c = best_time(getattr(_jacobi_ext, name), x, args.repeat)
            compiled, speedup = f"{1e3 * t_c:12.3f}", f"{t_py / t_c:7.1f}x"
        else:
            compiled, speedup = f"{'-':>12}", f"{'-':>8}"
        print(f"{kind:<10} {'x'.join(map(str, shape)):>8} {compiled} {1e3 * t_py:10.3f} {speedup} {1e3 * t_lp:10.3f}")


if __name__ == "__main__":
    main()
