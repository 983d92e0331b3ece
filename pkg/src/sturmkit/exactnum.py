"""Exact arithmetic in real quadratic fields and continued fractions.

A :class:`QuadraticNumber` is ``a + b*sqrt(d)`` with rational ``a``, ``b`` and
squarefree ``d``.  Every comparison, floor and ceiling is decided with integer
arithmetic only (isolate the radical, square with sign care), so nothing here
depends on floating point.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ClassificationError, DomainError, FieldMismatchError, ResourceError

Number = Union[int, Fraction, "QuadraticNumber"]


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, m)`` with ``n == s*s*m`` and ``m`` squarefree."""
    if n < 0:
        raise DomainError(f"radicand must be non-negative, got {n}")
    if n == 0:
        return 1, 0
    s, m, p = 1, n, 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, m


def floor_surd(u: int, v: int, d: int, r: int) -> int:
    """floor((u + v*sqrt(d)) / r) for integers, ``r > 0`` and ``d`` non-square or ``v == 0``.

    With ``t = v*sqrt(d)`` irrational, ``floor((u+t)/r) == (u + floor(t)) // r``
    because ``u + floor(t)`` is an integer and the fractional part of ``t``
    cannot carry past a multiple of ``r``.
    """
    if v == 0 or d == 0:
        return u // r
    root = math.isqrt(v * v * d)
    ft = root if v > 0 else -root - 1
    return (u + ft) // r


class QuadraticNumber:
    """An element ``a + b*sqrt(d)`` of Q(sqrt d), kept in canonical form.

    Canonical form: ``d`` squarefree; rationals have ``b == 0`` and ``d == 0``.
    Equality and hashing are structural on the canonical fields.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0, d: int = 0) -> None:
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        s, m = squarefree_split(d)
        if b == 0 or m == 0:
            b, m = Fraction(0), 0
        elif m == 1:
            a, b, m = a + b * s, Fraction(0), 0
        else:
            b = b * s
        self._a, self._b, self._d = a, b, m

    # -- construction ---------------------------------------------------
    @classmethod
    def sqrt(cls, n: int) -> QuadraticNumber:
        return cls(0, 1, n)

    @classmethod
    def coerce(cls, x: Number) -> QuadraticNumber:
        if isinstance(x, QuadraticNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadraticNumber")

    @classmethod
    def parse(cls, text: str) -> QuadraticNumber:
        return parse_quadratic(text)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    def is_rational(self) -> bool:
        return self._b == 0

    def as_fraction(self) -> Fraction:
        if self._b:
            raise DomainError(f"{self} is irrational")
        return self._a

    def integer_form(self) -> tuple[int, int, int, int]:
        """``(P, Q, D, R)`` with value ``(P + Q*sqrt(D))/R``, ``R > 0`` minimal."""
        r = math.lcm(self._a.denominator, self._b.denominator)
        return int(self._a * r), int(self._b * r), self._d, r

    # -- field plumbing --------------------------------------------------
    def _common_d(self, other: QuadraticNumber) -> int:
        if self._b and other._b and self._d != other._d:
            raise FieldMismatchError(f"Q(sqrt {self._d}) and Q(sqrt {other._d}) differ")
        return self._d if self._b else other._d

    def same_field(self, other: Number) -> bool:
        other = QuadraticNumber.coerce(other)
        return not (self._b and other._b and self._d != other._d)

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return self._a * self._a - self._b * self._b * self._d

    def trace(self) -> Fraction:
        return 2 * self._a

    def sign(self) -> int:
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d (never equal, d squarefree > 1)
        big = a * a > b * b * self._d
        if a > 0:
            return 1 if big else -1
        return -1 if big else 1

    # -- arithmetic ------------------------------------------------------
    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self._a, -self._b, self._d)

    def __pos__(self) -> QuadraticNumber:
        return self

    def __add__(self, other: Number) -> QuadraticNumber:
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        other = QuadraticNumber.coerce(other)
        d = self._common_d(other)
        return QuadraticNumber(self._a + other._a, self._b + other._b, d)

    __radd__ = __add__

    def __sub__(self, other: Number) -> QuadraticNumber:
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return self + (-QuadraticNumber.coerce(other))

    def __rsub__(self, other: Number) -> QuadraticNumber:
        return QuadraticNumber.coerce(other) - self

    def __mul__(self, other: Number) -> QuadraticNumber:
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        other = QuadraticNumber.coerce(other)
        d = self._common_d(other)
        a = self._a * other._a + self._b * other._b * d
        b = self._a * other._b + self._b * other._a
        return QuadraticNumber(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> QuadraticNumber:
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        other = QuadraticNumber.coerce(other)
        self._common_d(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic number")
        return self * QuadraticNumber(other._a / n, -other._b / n, other._d)

    def __rtruediv__(self, other: Number) -> QuadraticNumber:
        return QuadraticNumber.coerce(other) / self

    def __pow__(self, k: int) -> QuadraticNumber:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        out, base = QuadraticNumber(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ------------------------------------------------------
    def compare(self, other: Number) -> int:
        """Sign of ``self - other``, decided exactly."""
        return (self - QuadraticNumber.coerce(other)).sign()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        if isinstance(other, QuadraticNumber):
            return (self._a, self._b, self._d) == (other._a, other._b, other._d)
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __lt__(self, other: Number) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: Number) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: Number) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: Number) -> bool:
        return self.compare(other) >= 0

    # -- rounding --------------------------------------------------------
    def __floor__(self) -> int:
        return floor_of(self)

    def __ceil__(self) -> int:
        return ceil_of(self)

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(self._d)

    # -- text ------------------------------------------------------------
    def __str__(self) -> str:
        if self._b == 0:
            a = self._a
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        p, q, d, r = self.integer_form()
        return f"({p}{q:+d}*sqrt({d}))/{r}"

    def __repr__(self) -> str:
        return f"QuadraticNumber('{self}')"


_RADICAL = r"(?P<q>\d+)?\*?sqrt\((?P<d>\d+)\)"
_NUMERATOR_FORMS = [
    re.compile(rf"^(?P<p>[+-]?\d+)$"),
    re.compile(rf"^(?P<sign>[+-]?){_RADICAL}$"),
    re.compile(rf"^(?P<p>[+-]?\d+)(?P<sign>[+-]){_RADICAL}$"),
    re.compile(rf"^(?P<sign>[+-]?){_RADICAL}(?P<p>[+-]\d+)$"),
]


def parse_quadratic(text: str) -> QuadraticNumber:
    """Parse ``(P + Q*sqrt(D)) / R``, ``p/q`` or ``n``; whitespace is ignored.

    ``P``, the factor ``Q*`` and the parentheses may be omitted, as in
    ``sqrt(2)-1`` or ``(3-sqrt(5))/2``.
    """
    s = re.sub(r"\s+", "", text)
    num, _, den = s.partition("/")
    if num.startswith("(") and num.endswith(")"):
        num = num[1:-1]
    if den and not re.fullmatch(r"[+-]?\d+", den):
        raise DomainError(f"cannot parse quadratic number {text!r}")
    for form in _NUMERATOR_FORMS:
        m = form.match(num)
        if m:
            break
    else:
        raise DomainError(f"cannot parse quadratic number {text!r}")
    r = int(den) if den else 1
    if r == 0:
        raise DomainError(f"zero denominator in {text!r}")
    g = m.groupdict()
    p = int(g["p"]) if g.get("p") else 0
    if g.get("d") is None:
        return QuadraticNumber(Fraction(p, r))
    q = (int(g["q"]) if g["q"] else 1) * (-1 if g["sign"] == "-" else 1)
    return QuadraticNumber(Fraction(p, r), Fraction(q, r), int(g["d"]))


def conjugate(x: Number) -> QuadraticNumber:
    return QuadraticNumber.coerce(x).conjugate()


def floor_of(x: Number) -> int:
    x = QuadraticNumber.coerce(x)
    p, q, d, r = x.integer_form()
    return floor_surd(p, q, d, r)


def ceil_of(x: Number) -> int:
    return -floor_of(-QuadraticNumber.coerce(x))


def compare(x: Number, y: Number) -> int:
    return QuadraticNumber.coerce(x).compare(y)


# ---------------------------------------------------------------------------
# continued fractions


@dataclass(frozen=True)
class ContinuedFraction:
    """``[preperiod; overline(period)]``; ``period`` is empty for rationals."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()

    def digit(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            raise IndexError(i)
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def digits(self, n: int) -> list[int]:
        n = n if self.period else min(n, len(self.preperiod))
        return [self.digit(i) for i in range(n)]

    def convergent(self, cycles: int = 0) -> Fraction:
        """Fold the preperiod plus ``cycles`` copies of the period into a rational."""
        seq = list(self.preperiod) + list(self.period) * cycles
        val = Fraction(seq[-1])
        for a in reversed(seq[:-1]):
            val = a + 1 / val
        return val

    def __str__(self) -> str:
        head = ", ".join(map(str, self.preperiod[1:]))
        tail = ", ".join(map(str, self.period))
        parts = [p for p in (head, f"({tail})" if tail else "") if p]
        return f"[{self.preperiod[0]}; {', '.join(parts)}]" if parts else f"[{self.preperiod[0]}]"


def continued_fraction(x: Number, max_steps: int = 10_000) -> ContinuedFraction:
    """Continued fraction of ``x``, with the period found by state repetition.

    Irrationals run the surd recurrence on ``(P + sqrt D)/Q`` with
    ``Q | D - P^2``; the first repeated state closes the least period.
    """
    x = QuadraticNumber.coerce(x)
    if x.is_rational():
        f = x.as_fraction()
        num, den = f.numerator, f.denominator
        digits = []
        while den:
            q, rem = divmod(num, den)
            digits.append(q)
            num, den = den, rem
            if len(digits) > max_steps:
                raise ResourceError("continued fraction exceeded max_steps")
        return ContinuedFraction(tuple(digits), ())

    p0, q0, d, r = x.integer_form()
    sgn = 1 if q0 > 0 else -1
    big_d = q0 * q0 * d
    P, Q = sgn * p0, sgn * r
    if (big_d - P * P) % Q:
        P, big_d, Q = P * abs(Q), big_d * Q * Q, Q * abs(Q)
    seen: dict[tuple[int, int], int] = {}
    digits: list[int] = []
    for step in range(max_steps + 1):
        state = (P, Q)
        if state in seen:
            i = seen[state]
            return ContinuedFraction(tuple(digits[:i]), tuple(digits[i:]))
        seen[state] = step
        a = floor_surd(P, 1, big_d, Q) if Q > 0 else floor_surd(-P, -1, big_d, -Q)
        digits.append(a)
        P = a * Q - P
        Q = (big_d - P * P) // Q
    raise ResourceError(f"no period found for {x} within {max_steps} steps")


# ---------------------------------------------------------------------------
# Sturm numbers


def is_sturm_number(x: Number) -> bool:
    """Quadratic irrational in (0, 1) whose conjugate lies outside [0, 1]."""
    x = QuadraticNumber.coerce(x)
    if x.is_rational() or not (0 < x < 1):
        return False
    xc = x.conjugate()
    return xc < 0 or xc > 1


def yasutomi_invariant(alpha: Number, rho: Number) -> bool:
    """Substitution invariance of s_{alpha,rho} by the conjugate criterion."""
    alpha = QuadraticNumber.coerce(alpha)
    rho = QuadraticNumber.coerce(rho)
    if not (0 < alpha < 1):
        raise DomainError(f"alpha={alpha} not in (0,1)")
    if not (0 <= rho <= 1):
        raise DomainError(f"rho={rho} not in [0,1]")
    if alpha.is_rational() or not alpha.same_field(rho):
        return False
    ac, rc = alpha.conjugate(), rho.conjugate()
    if ac > 1:
        return 1 - ac <= rc <= ac
    if ac < 0:
        return ac <= rc <= 1 - ac
    return False


@dataclass(frozen=True)
class SturmForm:
    """Match of a continued fraction against the small/large Sturm shapes.

    ``case`` is ``"small"`` for ``[0; 1+a0, overline(block)]`` and ``"large"``
    for ``[0; 1, a0, overline(block)]``; ``period_digits`` is the matched
    block of length ``k`` and ``raw`` the least-period expansion.
    """

    case: str
    k: int
    a0: int
    period_digits: tuple[int, ...]
    raw: ContinuedFraction


def cf_sturm_form(x: Number, search_factor: int = 3) -> SturmForm:
    """Classify a Sturm number by the shape of its continued fraction.

    Tries every block length that is a multiple of the least period, up to
    ``search_factor`` times it, for the head/tail split of the target shape.
    """
    x = QuadraticNumber.coerce(x)
    if x.is_rational() or not (0 < x < 1):
        raise DomainError(f"{x} is not an irrational number in (0,1)")
    cf = continued_fraction(x)
    p = len(cf.period)
    head = len(cf.preperiod) - 1  # digits between the leading 0 and the period
    if cf.digit(1) >= 2:
        case, a0, start = "small", cf.digit(1) - 1, 2
    else:
        case, a0, start = "large", cf.digit(2), 3
    if head <= start - 1 and a0 >= 1:
        for k in range(p, search_factor * p + 1, p):
            block = tuple(cf.digit(start + j) for j in range(k))
            if block[-1] >= a0:
                return SturmForm(case, k, a0, block, cf)
    raise ClassificationError(f"{x} = {cf} matches neither Sturm shape")
