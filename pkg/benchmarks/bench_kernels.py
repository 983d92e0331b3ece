"""Time the numba kernels against their numpy twins and a plain-Python loop.

    python benchmarks/bench_kernels.py [--repeat 5] [--size 200000]

Numba timings exclude the first (compiling) call.  Every row also checks that
all implementations return the same result.
"""
import argparse
import math
import time

import numpy as np

from sturmkit import _kernels
from sturmkit.exactnum import parse_quadratic
from sturmkit.words import _rotation_coefficients, as_array, characteristic


def best_of(repeat, fn, *args):
    best = math.inf
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def floors_python(u0, u1, v0, v1, d, r, n):
    out = []
    for k in range(n + 1):
        u, v = u0 + k * u1, v0 + k * v1
        root = math.isqrt(v * v * d)
        out.append((u + (root if v >= 0 else -root - 1)) // r)
    return np.array(out, dtype=np.int64)


def factors_python(w, n):
    s = w.tobytes()
    return len({s[i:i + n] for i in range(len(s) - n + 1)})


def kepler_python(n):
    p, q = [1], [2]
    for _ in range(n):
        p, q = [x for a, b in zip(p, q) for x in (a, b)], [a + b for a, b in zip(p, q) for _ in (0, 1)]
    return np.array(p, dtype=np.int64), np.array(q, dtype=np.int64)


def same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=200_000, help="letters for the word kernels")
    ap.add_argument("--level", type=int, default=16, help="Kepler tree level")
    args = ap.parse_args()

    alpha = parse_quadratic("(sqrt(13)-1)/6")
    coeffs = _rotation_coefficients(alpha, alpha)
    word = as_array(characteristic(alpha, args.size))

    cases = [
        ("rotation floors", (*coeffs, args.size),
         _kernels.rotation_floors_np, getattr(_kernels, "rotation_floors_nb", None), floors_python),
        ("distinct factors n=20", (word, 20),
         _kernels.distinct_factors_np, getattr(_kernels, "distinct_factors_nb", None), factors_python),
        (f"kepler level {args.level}", (args.level,),
         _kernels.kepler_level_np, getattr(_kernels, "kepler_level_nb", None), kepler_python),
    ]

    print(f"backend in use: {_kernels.backend()}  (size={args.size}, repeat={args.repeat})")
    print(f"{'kernel':<24}{'python':>12}{'numpy':>12}{'numba':>12}  agree")
    for name, fargs, np_fn, nb_fn, py_fn in cases:
        t_py, r_py = best_of(1, py_fn, *fargs)
        t_np, r_np = best_of(args.repeat, np_fn, *fargs)
        agree = same(r_py, r_np)
        if nb_fn is not None:
            nb_fn(*fargs)  # compile
            t_nb, r_nb = best_of(args.repeat, nb_fn, *fargs)
            agree = agree and same(r_np, r_nb)
            nb_text = f"{t_nb * 1e3:10.2f}ms"
        else:
            nb_text = f"{'n/a':>12}"
        print(f"{name:<24}{t_py * 1e3:10.2f}ms{t_np * 1e3:10.2f}ms{nb_text}  {'yes' if agree else 'NO'}")


if __name__ == "__main__":
    main()
