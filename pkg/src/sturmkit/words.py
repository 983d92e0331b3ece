"""Sturmian words from circle rotations, lozenge pairs and factor counts.

Words are plain ``str`` objects over ``"01"``; infinite words are handled as
explicit finite prefixes whose length is always a parameter.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .errors import DomainError, FieldMismatchError
from .exactnum import Number, QuadraticNumber, floor_of, floor_surd

BinaryWord = str


def check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip("01"):
        raise DomainError(f"not a binary word: {w!r}")
    return w


def as_array(w: str) -> np.ndarray:
    return np.frombuffer(w.encode("ascii"), dtype=np.uint8) - ord("0")


def from_array(a: np.ndarray) -> str:
    return (np.asarray(a, dtype=np.uint8) + ord("0")).tobytes().decode("ascii")


def _rotation_coefficients(alpha: QuadraticNumber, rho: QuadraticNumber):
    """Integers with k*alpha + rho == (u0 + k*u1 + (v0 + k*v1)*sqrt(d)) / r."""
    if not alpha.same_field(rho):
        raise FieldMismatchError(f"alpha={alpha} and rho={rho} lie in different fields")
    d = alpha.d or rho.d
    r = math.lcm(alpha.a.denominator, alpha.b.denominator, rho.a.denominator, rho.b.denominator)
    return (int(rho.a * r), int(alpha.a * r), int(rho.b * r), int(alpha.b * r), d, r)


def _floors(u0: int, u1: int, v0: int, v1: int, d: int, r: int, n: int) -> np.ndarray:
    if _kernels.rotation_fits_int64(u0, u1, v0, v1, d, r, n):
        return _kernels.rotation_floors(u0, u1, v0, v1, d, r, n)
    return np.array(
        [floor_surd(u0 + k * u1, v0 + k * v1, d, r) for k in range(n + 1)], dtype=object
    )


def _check_alpha(alpha: QuadraticNumber) -> None:
    if not (0 < alpha < 1):
        raise DomainError(f"alpha={alpha} must lie in (0,1)")


def rotation_word(alpha: Number, rho: Number, n: int, ceiling: bool = False) -> BinaryWord:
    alpha = QuadraticNumber.coerce(alpha)
    rho = QuadraticNumber.coerce(rho)
    _check_alpha(alpha)
    if n < 0:
        raise DomainError(f"length must be non-negative, got {n}")
    if n == 0:
        return ""
    rho = rho - floor_of(rho)
    u0, u1, v0, v1, d, r = _rotation_coefficients(alpha, rho)
    if ceiling:
        # ceil(x) = -floor(-x)
        f = _floors(-u0, -u1, -v0, -v1, d, r, n)
        diff = f[:-1] - f[1:]
    else:
        f = _floors(u0, u1, v0, v1, d, r, n)
        diff = f[1:] - f[:-1]
    return from_array(np.asarray(diff, dtype=np.int64))


def sturmian_floor(alpha: Number, rho: Number, n: int) -> BinaryWord:
    """Prefix of length ``n`` of s_{alpha,rho}(k) = [(k+1)a + r] - [k a + r]."""
    return rotation_word(alpha, rho, n, ceiling=False)


def sturmian_ceil(alpha: Number, rho: Number, n: int) -> BinaryWord:
    """Prefix of length ``n`` of the ceiling word s'_{alpha,rho}."""
    return rotation_word(alpha, rho, n, ceiling=True)


def characteristic(alpha: Number, n: int) -> BinaryWord:
    alpha = QuadraticNumber.coerce(alpha)
    if alpha.is_rational():
        raise DomainError("the characteristic word needs an irrational slope")
    return sturmian_floor(alpha, alpha, n)


def lozenge_index(alpha: Number, rho: Number) -> Optional[int]:
    """The m >= 0 with m*alpha + rho a non-negative integer, or ``None``.

    Writes rho = p + q*alpha; since alpha is irrational the only candidate is
    m = -q, and then m*alpha + rho = p.
    """
    alpha = QuadraticNumber.coerce(alpha)
    rho = QuadraticNumber.coerce(rho)
    if alpha.is_rational() or not (0 < alpha < 1):
        raise DomainError(f"alpha={alpha} must be an irrational number in (0,1)")
    if not (0 <= rho <= 1):
        raise DomainError(f"rho={rho} must lie in [0,1]")
    if not alpha.same_field(rho):
        raise FieldMismatchError(f"rho={rho} is not in Q(alpha)")
    q = rho.b / alpha.b
    p = rho.a - q * alpha.a
    m = -q
    if m.denominator == 1 and m >= 0 and p.denominator == 1 and p >= 0:
        return int(m)
    return None


@dataclass(frozen=True)
class LozengeReport:
    index: Optional[int]
    differing_positions: frozenset[int]


def differing_positions(u: str, v: str) -> frozenset[int]:
    n = min(len(u), len(v))
    a, b = as_array(u[:n]), as_array(v[:n])
    return frozenset(int(i) for i in np.flatnonzero(a != b))


def lozenge_report(alpha: Number, rho: Number, n: int) -> LozengeReport:
    index = lozenge_index(alpha, rho)
    if index is not None and n < index + 2:
        raise DomainError(f"prefix length {n} too short for lozenge index {index}")
    diff = differing_positions(sturmian_floor(alpha, rho, n), sturmian_ceil(alpha, rho, n))
    return LozengeReport(index, diff)


def factor_complexity(w: BinaryWord, n: int) -> int:
    """Number of distinct factors of length ``n`` in ``w``."""
    check_word(w)
    if not 1 <= n <= len(w):
        raise DomainError(f"factor length {n} outside 1..{len(w)}")
    if n <= 62:
        return int(_kernels.distinct_factors(as_array(w), n))
    return len({w[i:i + n] for i in range(len(w) - n + 1)})


def prepend_pair(alpha: Number, n: int) -> tuple[BinaryWord, BinaryWord]:
    """``(10 c_alpha, 01 c_alpha)`` cut to length ``n``."""
    alpha = QuadraticNumber.coerce(alpha)
    c = characteristic(alpha, max(n - 2, 0))
    return ("10" + c)[:n], ("01" + c)[:n]


def exchange(w: BinaryWord) -> BinaryWord:
    """Letter-swap E applied to a word."""
    return w.translate(str.maketrans("01", "10"))


def is_palindrome(w: str) -> bool:
    return w == w[::-1]
