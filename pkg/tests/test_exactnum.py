import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

import oracles
from sturmkit.errors import ClassificationError, DomainError, FieldMismatchError
from sturmkit.exactnum import (
    ContinuedFraction, QuadraticNumber, ceil_of, cf_sturm_form, compare, conjugate,
    continued_fraction, floor_of, is_sturm_number, parse_quadratic, squarefree_split,
    yasutomi_invariant,
)

Q = parse_quadratic
FIB = Q("(3-1*sqrt(5))/2")
PELL = Q("(2-1*sqrt(2))/2")


# --- construction, parsing, printing ------------------------------------------------


def test_canonical_form_reduces_radicand():
    x = QuadraticNumber(0, 1, 8)  # sqrt(8) = 2 sqrt(2)
    assert (x.a, x.b, x.d) == (0, 2, 2)
    assert QuadraticNumber(3, 5, 1) == 8
    assert QuadraticNumber(3, 5, 0).is_rational() and QuadraticNumber(3, 5, 4) == 13


def test_squarefree_split():
    assert squarefree_split(72) == (6, 2)  # 72 = 6*6*2
    assert squarefree_split(13) == (1, 13)


@pytest.mark.parametrize("text", ["(3-1*sqrt(5))/2", "(-1+1*sqrt(2))/1", "2/7", "-4", "(1+2*sqrt(3))/5"])
def test_print_parse_round_trip(text):
    assert str(Q(text)) == text
    assert Q(str(Q(text))) == Q(text)


@pytest.mark.parametrize(
    "text, canonical",
    [
        ("( 3 - sqrt(5) ) / 2", "(3-1*sqrt(5))/2"),
        ("sqrt(2)-1", "(-1+1*sqrt(2))/1"),
        ("-sqrt(3)", "(0-1*sqrt(3))/1"),
        ("(3-1*sqrt(5))/-2", "(-3+1*sqrt(5))/2"),
        ("sqrt(9)", "3"),
        ("6/4", "3/2"),
    ],
)
def test_parse_variants(text, canonical):
    assert str(Q(text)) == canonical


@pytest.mark.parametrize("text", ["sqrt", "", "()", "0.5", "1/0", "(1+sqrt(2))/x", "1+2"])
def test_parse_errors(text):
    with pytest.raises(DomainError):
        Q(text)


# --- field operations ---------------------------------------------------------------


def test_field_examples():
    assert Q("1/2") + Q("1/2") == 1
    assert FIB * Q("(3+1*sqrt(5))/2") == 1
    # (3-sqrt5)/2 = 0.38197 < 2/5: the comparison is negative
    assert compare(FIB, Fraction(2, 5)) < 0
    assert FIB < Fraction(2, 5)


def test_field_mismatch_and_zero_division():
    with pytest.raises(FieldMismatchError):
        QuadraticNumber.sqrt(2) + QuadraticNumber.sqrt(3)
    with pytest.raises(ZeroDivisionError):
        FIB / 0
    # a rational mixes with any field
    assert (QuadraticNumber.sqrt(2) + Fraction(1, 3)).d == 2


def test_conjugate_examples():
    assert conjugate(FIB) == Q("(3+1*sqrt(5))/2")
    assert conjugate(Fraction(7, 3)) == Fraction(7, 3)
    assert conjugate(Q("(-1+1*sqrt(2))/1")) == Q("(-1-1*sqrt(2))/1")


def test_floor_ceil_examples():
    assert floor_of(Fraction(7, 3)) == 2
    assert floor_of(QuadraticNumber.sqrt(2)) == 1
    assert floor_of(5 * FIB) == 1
    assert ceil_of(2) == 2
    assert ceil_of(QuadraticNumber.sqrt(2)) == 2
    assert ceil_of(FIB) == 1


surds = st.builds(
    lambda a, b, c, d: QuadraticNumber(Fraction(a, c), Fraction(b, c), d),
    st.integers(-200, 200), st.integers(-60, 60), st.integers(1, 60), st.integers(0, 400),
)


@given(surds)
def test_conjugation_is_involutive_with_rational_trace_and_norm(x):
    assert conjugate(conjugate(x)) == x
    assert (x + conjugate(x)).is_rational()
    assert (x * conjugate(x)).is_rational()


@given(surds, st.integers(-1000, 1000))
def test_floor_shift_and_bounds(x, n):
    f = floor_of(x)
    assert floor_of(x + n) == f + n
    assert f <= x < f + 1
    assert f == oracles.floor_exact(oracles.to_sympy(x))
    assert ceil_of(x) == -floor_of(-x)


@given(surds, surds)
def test_compare_matches_sympy(x, y):
    if not x.same_field(y):
        return
    expected = sympy.sign(oracles.to_sympy(x) - oracles.to_sympy(y))
    assert compare(x, y) == int(expected)


@given(surds, surds)
def test_field_axioms(x, y):
    if not x.same_field(y):
        return
    assert (x + y) - y == x
    if y != 0:
        assert (x / y) * y == x
    assert oracles.to_sympy(x * y).equals(oracles.to_sympy(x) * oracles.to_sympy(y))


# --- continued fractions ------------------------------------------------------------


def test_continued_fraction_examples():
    assert continued_fraction(FIB) == ContinuedFraction((0, 2), (1,))
    assert continued_fraction(Fraction(1, 3)) == ContinuedFraction((0, 3), ())
    assert continued_fraction(Q("(-1+1*sqrt(2))/1")) == ContinuedFraction((0,), (2,))
    assert str(continued_fraction(FIB)) == "[0; 2, (1)]"


def test_continued_fraction_of_random_surds():
    rng = random.Random(2024)
    for i in range(1000):
        x = oracles.random_surd(rng, 50)
        cf = continued_fraction(x)
        assert cf.period, x
        if i < 100:  # the sympy oracle is slow
            pre, per = oracles.periodic_cf(x)
            assert (list(cf.preperiod), list(cf.period)) == (pre, per), x
        # least period: not a repetition of a shorter block
        p = len(cf.period)
        assert all(cf.period != cf.period[k:] + cf.period[:k] or p % k for k in range(1, p))
        approx = cf.convergent(40)
        assert abs(float(approx) - float(x)) < 1e-12


def test_continued_fraction_of_rationals():
    rng = random.Random(3)
    for _ in range(200):
        q = rng.randint(2, 10_000)
        f = Fraction(rng.randint(1, q - 1), q)
        cf = continued_fraction(f)
        assert cf.period == () and cf.convergent() == f


# --- Sturm numbers ------------------------------------------------------------------


def test_sturm_examples():
    assert is_sturm_number(FIB)
    assert not is_sturm_number(Fraction(1, 2))
    assert is_sturm_number(Q("(-1+1*sqrt(5))/2"))
    assert not is_sturm_number(QuadraticNumber.sqrt(2))  # outside (0, 1)
    non_sturm = Q("(3+1*sqrt(2))/7")
    assert 0 < non_sturm < 1 and 0 <= conjugate(non_sturm) <= 1
    assert not is_sturm_number(non_sturm)


def test_yasutomi_examples():
    assert yasutomi_invariant(FIB, Q("(-1+1*sqrt(5))/2"))
    assert yasutomi_invariant(FIB, FIB)
    assert not yasutomi_invariant(FIB, 3 * FIB - 1)
    with pytest.raises(DomainError):
        yasutomi_invariant(Fraction(3, 2), 0)
    with pytest.raises(DomainError):
        yasutomi_invariant(FIB, Fraction(3, 2))


def test_characteristic_words_are_invariant():
    rng = random.Random(5)
    for _ in range(200):
        alpha = oracles.random_sturm(rng)
        assert is_sturm_number(alpha)
        assert yasutomi_invariant(alpha, alpha)


def test_sturm_form_examples():
    f = cf_sturm_form(FIB)
    assert (f.case, f.k, f.a0, f.period_digits) == ("small", 1, 1, (1,))
    g = cf_sturm_form(1 - FIB)
    assert (g.case, g.k, g.a0, g.period_digits) == ("large", 1, 1, (1,))
    pell = cf_sturm_form(PELL)
    assert (pell.case, pell.a0, pell.period_digits) == ("small", 2, (2,))
    assert pell.raw == ContinuedFraction((0, 3), (2,))
    assert cf_sturm_form(Q("(-1+1*sqrt(13))/6")).raw == ContinuedFraction((0, 2), (3,))


def test_sturm_form_rejects_non_sturm_numbers():
    with pytest.raises(ClassificationError):
        cf_sturm_form(Q("(3+1*sqrt(2))/7"))
    with pytest.raises(DomainError):
        cf_sturm_form(Fraction(1, 3))


def test_allauzen_matches_sturm_form_small_family():
    for d in (2, 3, 5, 6, 7, 10, 11, 13):
        for p in range(-8, 9):
            for q in range(1, 9):
                for s in (1, -1):
                    x = QuadraticNumber(Fraction(p, q), Fraction(s, q), d)
                    if not 0 < x < 1:
                        continue
                    try:
                        cf_sturm_form(x)
                        shaped = True
                    except ClassificationError:
                        shaped = False
                    assert shaped == is_sturm_number(x), x


def test_float_and_integer_form():
    assert math.isclose(float(FIB), (3 - math.sqrt(5)) / 2)
    assert FIB.integer_form() == (3, -1, 5, 2)
