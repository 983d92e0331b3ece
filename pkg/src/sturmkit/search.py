"""Breadth-first search for a morphism fixing a given Sturmian word.

The target word is described by its slope ``alpha`` and one of three
intercept kinds: ``alpha`` (the characteristic word), ``zero`` and
``one-minus-alpha``.  Slopes above 1/2 are handled through the exchange E:
E(s_{a,r}) is the ceiling word s'_{1-a,1-r}, so the search runs at 1-alpha with
floor and ceiling swapped and the answer is conjugated back, generator by
generator.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NoFixedPointError, NotFoundError
from .exactnum import Number, QuadraticNumber, floor_of, is_sturm_number
from .morphisms import (
    GENERATORS, M24, M38, M47, PHI_SET, PSI, BinaryMorphism, GeneratorWord, exchange_conjugate,
    is_fixed_by, prolongable_letters,
)
from .solver import solve_intercept, solve_slope, word_map

RHO_KINDS = ("alpha", "zero", "one-minus-alpha")
VERIFY_LENGTH = 300
DEFAULT_MAX_DEPTH = 10

# label of E o g o E for every generator g (psi_i <-> psi_{i+4})
_PSI_LABEL_OF = {m: f"psi{i}" for i, m in PSI.items()}
DUAL_LABEL = {x: _PSI_LABEL_OF[exchange_conjugate(g)] for x, g in GENERATORS.items()}


@dataclass(frozen=True)
class FixingResult:
    generator_word: GeneratorWord
    morphism: BinaryMorphism
    alpha: QuadraticNumber
    rho: QuadraticNumber
    ceiling: bool
    depth: int

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "rho": str(self.rho),
            "representative": "ceiling" if self.ceiling else "floor",
            "generator_word": str(self.generator_word),
            "morphism": str(self.morphism),
            "depth": self.depth,
        }


def target_rho(alpha: QuadraticNumber, rho_kind: str) -> QuadraticNumber:
    if rho_kind == "alpha":
        return alpha
    if rho_kind == "zero":
        return QuadraticNumber(0)
    if rho_kind == "one-minus-alpha":
        return 1 - alpha
    raise DomainError(f"unknown rho kind {rho_kind!r}; choose from {', '.join(RHO_KINDS)}")


def search_set(rho_kind: str, ceiling: bool) -> frozenset[str]:
    """Generators searched for a slope below 1/2."""
    if rho_kind == "alpha":
        return PHI_SET
    if rho_kind == "zero":
        return M47 if ceiling else M38
    return M24


def _same_mod_one(x: QuadraticNumber, y: QuadraticNumber) -> bool:
    return (x - y).is_rational() and (x - y).as_fraction().denominator == 1


def _fixer(word: GeneratorWord, alpha, rho, ceiling: bool):
    """``word`` or its square, whichever fixes the target first, with its morphism."""
    for cand in (word, word + word):
        sigma = cand.morphism()
        if prolongable_letters(sigma) and is_fixed_by(sigma, alpha, rho, VERIFY_LENGTH, ceiling):
            return cand, sigma
    return None


def _search_below_half(alpha, rho_kind, ceiling, max_depth):
    rho = target_rho(alpha, rho_kind)
    labels = sorted(search_set(rho_kind, ceiling))
    for depth in range(1, max_depth + 1):
        for combo in itertools.product(labels, repeat=depth):
            word = GeneratorWord(combo)
            t = word_map(word)
            try:
                if solve_slope(t) != alpha:
                    continue
                y = solve_intercept(t, alpha)
            except NoFixedPointError:
                continue
            if not _same_mod_one(y, rho):
                continue
            fixer = _fixer(word, alpha, rho, ceiling)
            if fixer is not None:
                return (*fixer, depth)
    return None


def find_fixing_morphism(
    alpha: Number,
    rho_kind: str = "alpha",
    ceiling: bool = False,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> FixingResult:
    """Shortest generator word (ties: lexicographic) whose morphism fixes the target.

    ``depth`` is the length of the searched word; when only its square fixes
    the target, the reported generator word is that square.  The morphism
    has been checked on a prefix of ``VERIFY_LENGTH`` letters.
    """
    alpha = QuadraticNumber.coerce(alpha)
    if not is_sturm_number(alpha):
        raise DomainError(f"alpha={alpha} is not a Sturm number")
    rho = target_rho(alpha, rho_kind)
    if rho_kind == "alpha":
        ceiling = False  # floor and ceiling characteristic words coincide
    dual = alpha > Fraction(1, 2)
    beta = 1 - alpha if dual else alpha
    found = _search_below_half(beta, rho_kind, ceiling != dual and rho_kind != "alpha", max_depth)
    if found is None:
        raise NotFoundError(
            f"no fixing morphism for alpha={alpha}, rho={rho_kind} up to depth {max_depth}"
        )
    word, sigma, depth = found
    if dual:
        word = GeneratorWord(DUAL_LABEL[x] for x in word)
        sigma = exchange_conjugate(sigma)
        if word.morphism() != sigma or not is_fixed_by(sigma, alpha, rho, VERIFY_LENGTH, ceiling):
            raise NotFoundError(f"dual fixer {sigma} failed verification")
    return FixingResult(word, sigma, alpha, rho - floor_of(rho), ceiling, depth)
