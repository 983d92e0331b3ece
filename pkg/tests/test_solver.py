import itertools
import math
import random

import pytest

from sturmkit.errors import AmbiguousRhoError, NoFixedPointError
from sturmkit.exactnum import QuadraticNumber, is_sturm_number, parse_quadratic as Q
from sturmkit.morphisms import PSI, GeneratorWord, apply, compose, is_fixed_by
from sturmkit.solver import (
    ELEMENTARY, IDENTITY_MAP, FracLinMap, compose_maps, default_fit_samples, discriminant,
    elementary_map, fit_elementary_map, fixed_point_solve, solve_intercept, solve_slope, word_map,
)
from sturmkit.words import rotation_word, sturmian_ceil, sturmian_floor

FIB = Q("(3-sqrt(5))/2")
X = Q("(-1+sqrt(7))/5")  # a generic point of (0,1) for map identities


def test_printed_maps():
    assert elementary_map(1).coefficients() == (-1, 1, -1, 2, -1, 0, 1)
    assert elementary_map(3).coefficients() == (1, 0, 1, 1, 1, 0, 0)
    assert elementary_map(8).coefficients() == (0, 1, -1, 2, 1, 0, 0)


def test_map_action_examples():
    y = Q("(2+sqrt(7))/9")
    assert elementary_map(3)(X, y) == (X / (1 + X), y / (1 + X))
    x8, y8 = elementary_map(8)(FIB, 0)
    assert x8 == 1 / (2 - FIB) == Q("(-1+sqrt(5))/2") and y8 == 0


def test_fitting_recovers_the_table():
    """The search over small coefficients finds exactly one map per generator."""
    for i in range(1, 9):
        assert fit_elementary_map(i) == [ELEMENTARY[i]]


@pytest.mark.parametrize("i", range(1, 9))
def test_elementary_maps_reproduce_generators(i):
    samples = default_fit_samples()
    assert len(samples) >= 20
    t = ELEMENTARY[i]
    for alpha, rho in samples:
        x, y = t(alpha, rho)
        target = apply(PSI[i], sturmian_floor(alpha, rho, 300))[:300]
        assert rotation_word(x, y, 300, ceiling=t.ceiling) == target


def test_ceiling_inputs_swap_representative():
    rng = random.Random(1)
    for alpha, rho in default_fit_samples():
        if rho == 0:
            continue  # ceiling words need rho in (0, 1]
        i = rng.randint(1, 8)
        t = ELEMENTARY[i]
        x, y = t(alpha, rho)
        target = apply(PSI[i], sturmian_ceil(alpha, rho, 300))[:300]
        assert rotation_word(x, y, 300, ceiling=not t.ceiling) == target


def test_composition_examples():
    t38 = compose_maps(ELEMENTARY[3], ELEMENTARY[8])
    assert t38(X, 0)[0] == 1 / (3 - X)
    assert compose_maps(IDENTITY_MAP, ELEMENTARY[5]) == ELEMENTARY[5]
    assert compose_maps(ELEMENTARY[5], IDENTITY_MAP) == ELEMENTARY[5]
    t13 = compose_maps(ELEMENTARY[1], ELEMENTARY[3])
    assert t13(X, 0)[0] == 1 / (2 + X)


def test_composition_matches_substitution():
    rng = random.Random(2)
    y = Q("(1+sqrt(7))/11")
    for _ in range(100):
        s, t = ELEMENTARY[rng.randint(1, 8)], ELEMENTARY[rng.randint(1, 8)]
        st = compose_maps(s, t)
        assert st(X, y) == s(*t(X, y))
        assert st.ceiling == (s.ceiling != t.ceiling)


def test_closure_and_unit_y_coefficient():
    rng = random.Random(3)
    for _ in range(200):
        word = GeneratorWord(f"psi{rng.randint(1, 8)}" for _ in range(rng.randint(1, 8)))
        t = word_map(word)
        assert t.a * t.d - t.b * t.c in (1, -1)
        assert t.p in (1, -1)
        assert t.ceiling == (t.p == -1)


def test_composition_is_associative():
    rng = random.Random(4)
    for _ in range(100):
        a, b, c = (ELEMENTARY[rng.randint(1, 8)] for _ in range(3))
        assert compose_maps(compose_maps(a, b), c) == compose_maps(a, compose_maps(b, c))


def test_degenerate_map_rejected():
    with pytest.raises(ValueError):
        FracLinMap(1, 2, 2, 4, 1, 0, 0)


# --- solving ------------------------------------------------------------------------


def test_solve_examples():
    sol = fixed_point_solve(["psi1"])
    assert (sol.alpha, sol.rho, sol.representative) == (FIB, FIB, "floor")
    sol = fixed_point_solve(["psi3", "psi8"])
    assert (sol.alpha, sol.rho, sol.representative) == (FIB, 0, "floor")
    assert is_fixed_by(sol.morphism, sol.alpha, sol.rho, 300)
    sol = fixed_point_solve(["psi1", "psi3"])
    assert (sol.alpha, sol.rho) == (Q("sqrt(2)-1"), Q("sqrt(2)-1"))


def test_solution_record():
    rec = fixed_point_solve(["psi3", "psi8"]).to_json()
    assert rec == {
        "alpha": "(3-1*sqrt(5))/2",
        "rho": "0",
        "representative": "floor",
        "morphism": "0->001,1->01",
        "generator_word": "psi3,psi8",
    }


def test_ceiling_representative_reports_square():
    sol = fixed_point_solve(["psi2"])
    assert (sol.alpha, sol.rho, sol.representative) == (FIB, 1 - FIB, "ceiling")
    assert sol.swaps
    assert sol.fixer == compose(PSI[2], PSI[2]) == PSI[2].__class__("010", "10")
    assert is_fixed_by(sol.fixer, sol.alpha, sol.rho, 300)
    assert is_fixed_by(sol.fixer, sol.alpha, sol.rho, 300, use_ceiling=True)
    assert sol.to_json()["fixer"] == "0->010,1->10"


def test_rho_one_boundary_fixes_the_ceiling_word():
    # psi5 psi6 psi4 has rho = 1 and no ceiling flag; s(alpha,1) = s(alpha,0) is
    # not fixed, but the ceiling word s'(alpha,1) is.
    sol = fixed_point_solve(["psi5", "psi6", "psi4"])
    assert sol.alpha == Q("sqrt(3)/3") and sol.rho == 1
    assert not sol.tmap.ceiling
    assert (sol.representative, sol.swaps) == ("ceiling", False)
    assert is_fixed_by(sol.morphism, sol.alpha, sol.rho, 300, use_ceiling=True)
    assert not is_fixed_by(sol.morphism, sol.alpha, sol.rho, 300)


def test_no_fixed_point_cases():
    with pytest.raises(NoFixedPointError):
        fixed_point_solve(["psi3", "psi3"])  # x/(1+2x): only x = 0
    with pytest.raises(NoFixedPointError):
        fixed_point_solve([])
    with pytest.raises(NoFixedPointError):
        solve_slope(FracLinMap(1, 0, 1, 1, 1, 0, 0))


def test_intercept_edge_cases():
    t = FracLinMap(0, 1, 1, 1, 1, 0, 0)  # c*alpha + d - p = alpha: never zero
    assert solve_intercept(t, FIB) == 0
    flat = FracLinMap(1, 0, 0, 1, 1, 0, 0)
    with pytest.raises(AmbiguousRhoError):
        solve_intercept(flat, FIB)
    shifted = FracLinMap(1, 0, 0, 1, 1, 0, 1)
    with pytest.raises(NoFixedPointError) as info:
        solve_intercept(shifted, FIB)
    assert not isinstance(info.value, AmbiguousRhoError)


def _random_solutions(rng, labels, count):
    found = 0
    while found < count:
        word = GeneratorWord(rng.choice(labels) for _ in range(rng.randint(1, 6)))
        try:
            sol = fixed_point_solve(word)
        except NoFixedPointError:
            continue
        found += 1
        yield word, sol


@pytest.mark.parametrize("labels", [("psi1", "psi3"), ("psi3", "psi8")])
def test_soundness(labels):
    rng = random.Random(5)
    for word, sol in _random_solutions(rng, labels, 100):
        assert 0 < sol.alpha < 1 and 0 <= sol.rho <= 1
        assert is_sturm_number(sol.alpha)
        ceiling = sol.representative == "ceiling"
        assert not sol.swaps  # neither generator carries the ceiling flag
        assert is_fixed_by(sol.morphism, sol.alpha, sol.rho, 300, use_ceiling=ceiling)
        disc = discriminant(sol.tmap)
        assert disc > 0 and math.isqrt(disc) ** 2 != disc


def test_soundness_over_all_generators():
    rng = random.Random(6)
    labels = [f"psi{i}" for i in range(1, 9)]
    kinds = set()
    for word, sol in _random_solutions(rng, labels, 300):
        assert is_sturm_number(sol.alpha) and 0 <= sol.rho <= 1
        floor_w = sturmian_floor(sol.alpha, sol.rho, 300)
        ceil_w = sturmian_ceil(sol.alpha, sol.rho, 300)
        image_floor = apply(sol.morphism, floor_w)[:300]
        image_ceil = apply(sol.morphism, ceil_w)[:300]
        if sol.representative == "floor":
            kinds.add("floor")
            assert image_floor == floor_w
        elif sol.swaps:
            kinds.add("swap")
            # psi maps s onto s' and back, so its square fixes both
            assert image_floor == ceil_w != floor_w and image_ceil == floor_w
            assert apply(sol.fixer, floor_w)[:300] == floor_w
            assert sol.tmap.ceiling
        else:
            kinds.add("ceiling")
            assert image_ceil == ceil_w and image_floor != floor_w
            assert sol.rho == 1
        assert is_fixed_by(sol.fixer, sol.alpha, sol.rho, 300, use_ceiling=sol.representative == "ceiling")
    assert kinds == {"floor", "swap", "ceiling"}


def test_solved_rho_stays_in_the_unit_interval():
    # the reduction branch is a safeguard: no generator word has produced an
    # intercept outside [0, 1] (all words of length <= 5, and random longer ones)
    rng = random.Random(7)
    labels = [f"psi{i}" for i in range(1, 9)]
    for _, sol in _random_solutions(rng, labels, 300):
        assert sol.rho_raw is None and 0 <= sol.rho <= 1
        assert "rho_raw" not in sol.to_json()
    for n in range(1, 4):
        for word in itertools.product(labels, repeat=n):
            try:
                sol = fixed_point_solve(word)
            except NoFixedPointError:
                continue
            assert sol.rho_raw is None
