"""Hot loops over int64 / uint8 arrays.

Each kernel exists twice: a numba ``@njit`` version and a pure-numpy version
with identical results.  Set ``STURMKIT_DISABLE_NUMBA=1`` (or run without numba
installed) to force the numpy path.  Callers must keep inputs inside the int64
safe ranges checked by :func:`rotation_fits_int64`; larger coefficients go
through the bigint path in :mod:`sturmkit.words`.
"""
from __future__ import annotations

import os

import numpy as np

# |V|^2 * d and |U| + sqrt(...) must stay below this for the int64 kernels
INT64_SAFE = 1 << 62

_disabled = os.environ.get("STURMKIT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _disabled:
        raise ImportError("disabled by STURMKIT_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def rotation_fits_int64(u0: int, u1: int, v0: int, v1: int, d: int, r: int, n: int) -> bool:
    vmax = max(abs(v0), abs(v0 + n * v1))
    umax = max(abs(u0), abs(u0 + n * u1))
    return vmax * vmax * max(d, 1) < INT64_SAFE and umax + vmax * max(d, 1) + r < INT64_SAFE


# ---------------------------------------------------------------------------
# numpy implementations


def _isqrt_np(x: np.ndarray) -> np.ndarray:
    r = np.floor(np.sqrt(x.astype(np.float64))).astype(np.int64)
    for _ in range(2):
        r -= (r * r > x).astype(np.int64)
        r += ((r + 1) * (r + 1) <= x).astype(np.int64)
    return r


def rotation_floors_np(u0, u1, v0, v1, d, r, n):
    """floor((u0 + k*u1 + (v0 + k*v1)*sqrt(d)) / r) for k = 0..n."""
    k = np.arange(n + 1, dtype=np.int64)
    u = u0 + k * u1
    v = v0 + k * v1
    if d == 0:
        return u // r
    root = _isqrt_np(v * v * d)
    ft = np.where(v > 0, root, np.where(v < 0, -root - 1, 0))
    return (u + ft) // r


def distinct_factors_np(w: np.ndarray, n: int) -> int:
    m = w.shape[0] - n + 1
    if m <= 0:
        return 0
    windows = np.lib.stride_tricks.sliding_window_view(w.astype(np.int64), n)
    codes = windows @ (np.int64(1) << np.arange(n - 1, -1, -1, dtype=np.int64))
    return int(np.unique(codes).shape[0])


def kepler_level_np(n: int) -> tuple[np.ndarray, np.ndarray]:
    p = np.array([1], dtype=np.int64)
    q = np.array([2], dtype=np.int64)
    for _ in range(n):
        s = p + q
        np_, nq = np.empty(2 * p.shape[0], np.int64), np.empty(2 * p.shape[0], np.int64)
        np_[0::2], nq[0::2] = p, s
        np_[1::2], nq[1::2] = q, s
        p, q = np_, nq
    return p, q


# ---------------------------------------------------------------------------
# numba implementations

if HAVE_NUMBA:

    @njit(cache=True)
    def _isqrt_nb(x):
        r = np.int64(np.sqrt(np.float64(x)))
        while r * r > x:
            r -= 1
        while (r + 1) * (r + 1) <= x:
            r += 1
        return r

    @njit(cache=True)
    def rotation_floors_nb(u0, u1, v0, v1, d, r, n):
        out = np.empty(n + 1, dtype=np.int64)
        for k in range(n + 1):
            u = u0 + k * u1
            v = v0 + k * v1
            ft = 0
            if d != 0 and v != 0:
                root = _isqrt_nb(v * v * d)
                ft = root if v > 0 else -root - 1
            out[k] = (u + ft) // r
        return out

    @njit(cache=True)
    def distinct_factors_nb(w, n):
        m = w.shape[0] - n + 1
        if m <= 0:
            return 0
        codes = np.empty(m, dtype=np.int64)
        mask = (np.int64(1) << n) - 1 if n < 63 else np.int64(-1)
        c = np.int64(0)
        for i in range(w.shape[0]):
            c = ((c << 1) | w[i]) & mask
            if i >= n - 1:
                codes[i - n + 1] = c
        codes.sort()
        count = 1
        for i in range(1, m):
            if codes[i] != codes[i - 1]:
                count += 1
        return count

    @njit(cache=True)
    def kepler_level_nb(n):
        size = 1 << n
        p = np.empty(size, dtype=np.int64)
        q = np.empty(size, dtype=np.int64)
        for idx in range(size):
            a, b = np.int64(1), np.int64(2)
            for j in range(n - 1, -1, -1):
                s = a + b
                if (idx >> j) & 1:
                    a = b
                b = s
            p[idx] = a
            q[idx] = b
        return p, q

    rotation_floors = rotation_floors_nb
    distinct_factors = distinct_factors_nb
    kepler_level_arrays = kepler_level_nb
else:
    rotation_floors = rotation_floors_np
    distinct_factors = distinct_factors_np
    kepler_level_arrays = kepler_level_np
