"""Morphisms of the free monoid on {0, 1}.

A :class:`BinaryMorphism` is the pair of images ``(image0, image1)``.
Composition follows function notation: ``compose(s, t)(w) == s(t(w))``, and a
:class:`GeneratorWord` ``(g1, ..., gn)`` denotes ``g1 o g2 o ... o gn``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import ConjugationError, DomainError, NotInMonoidError, NotProlongableError
from .words import BinaryWord, check_word, rotation_word

Matrix = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class BinaryMorphism:
    image0: str
    image1: str

    def __post_init__(self) -> None:
        check_word(self.image0)
        check_word(self.image1)
        if not self.image0 or not self.image1:
            raise DomainError("morphism images must be nonempty")

    def __call__(self, w: BinaryWord) -> BinaryWord:
        return apply(self, w)

    def __getitem__(self, letter: str | int) -> str:
        return self.image1 if str(letter) == "1" else self.image0

    def __str__(self) -> str:
        return f"0->{self.image0},1->{self.image1}"

    @classmethod
    def parse(cls, text: str) -> BinaryMorphism:
        return parse_morphism(text)


_MORPHISM_RE = re.compile(r"^0->([01]+),1->([01]+)$")


def parse_morphism(text: str) -> BinaryMorphism:
    m = _MORPHISM_RE.match(re.sub(r"\s+", "", text))
    if not m:
        raise DomainError(f"cannot parse morphism {text!r}; expected 0->WORD,1->WORD")
    return BinaryMorphism(m[1], m[2])


ID = BinaryMorphism("0", "1")
E = BinaryMorphism("1", "0")
G = BinaryMorphism("0", "01")
PHI0 = G
PHI1 = BinaryMorphism("01", "0")
PSI = {
    1: BinaryMorphism("01", "0"),
    2: BinaryMorphism("10", "0"),
    3: BinaryMorphism("0", "01"),
    4: BinaryMorphism("0", "10"),
    5: BinaryMorphism("1", "10"),
    6: BinaryMorphism("1", "01"),
    7: BinaryMorphism("10", "1"),
    8: BinaryMorphism("01", "1"),
}

GENERATORS: dict[str, BinaryMorphism] = {"phi0": PHI0, "phi1": PHI1}
GENERATORS.update({f"psi{i}": m for i, m in PSI.items()})

# the psi index each label stands for (phi0 = psi3, phi1 = psi1)
PSI_INDEX = {"phi0": 3, "phi1": 1, **{f"psi{i}": i for i in PSI}}

PHI_SET = frozenset({"phi0", "phi1"})
M13 = frozenset({"psi1", "psi3"})
M38 = frozenset({"psi3", "psi8"})
M24 = frozenset({"psi2", "psi4"})
M47 = frozenset({"psi4", "psi7"})
M57 = frozenset({"psi5", "psi7"})
M68 = frozenset({"psi6", "psi8"})
NAMED_SETS = {
    "phi": PHI_SET, "psi13": M13, "psi38": M38, "psi24": M24,
    "psi47": M47, "psi57": M57, "psi68": M68,
}


def apply(sigma: BinaryMorphism, w: BinaryWord) -> BinaryWord:
    return w.translate({48: sigma.image0, 49: sigma.image1})


def compose(*ms: BinaryMorphism) -> BinaryMorphism:
    """``compose(s, t, ...)`` is ``s o t o ...``; the empty product is Id."""
    def two(s: BinaryMorphism, t: BinaryMorphism) -> BinaryMorphism:
        return BinaryMorphism(apply(s, t.image0), apply(s, t.image1))
    return reduce(two, ms, ID)


def power(sigma: BinaryMorphism, k: int) -> BinaryMorphism:
    return compose(*([sigma] * k))


def time_reversal(sigma: BinaryMorphism) -> BinaryMorphism:
    return BinaryMorphism(sigma.image0[::-1], sigma.image1[::-1])


def exchange_conjugate(sigma: BinaryMorphism) -> BinaryMorphism:
    """E o sigma o E."""
    return compose(E, sigma, E)


def incidence_matrix(sigma: BinaryMorphism) -> Matrix:
    """Entry (a, b) counts letter ``a`` in the image of letter ``b``.

    With this orientation phi0 -> [[1,1],[0,1]], phi1 -> [[1,1],[1,0]] and
    incidence_matrix(s o t) == incidence_matrix(s) @ incidence_matrix(t).
    """
    i0, i1 = sigma.image0, sigma.image1
    return ((i0.count("0"), i1.count("0")), (i0.count("1"), i1.count("1")))


def matmul(x: Matrix, y: Matrix) -> Matrix:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


IDENTITY: Matrix = ((1, 0), (0, 1))


def prolongable_letters(sigma: BinaryMorphism) -> list[str]:
    return [a for a in "01" if len(sigma[a]) >= 2 and sigma[a][0] == a]


def fixed_point(sigma: BinaryMorphism, n: int, letter: Optional[str] = None) -> BinaryWord:
    """Prefix of length ``n`` of the fixed point lim sigma^k(letter).

    Defaults to letter ``0`` when both letters are prolongable.
    """
    letters = prolongable_letters(sigma)
    if letter is None:
        if not letters:
            raise NotProlongableError(f"{sigma} is not prolongable on any letter")
        letter = letters[0]
    elif letter not in letters:
        raise NotProlongableError(f"{sigma} is not prolongable on {letter}")
    w = letter
    while len(w) < n:
        nxt = apply(sigma, w)
        if len(nxt) <= len(w):
            raise NotProlongableError(f"iterates of {sigma} stop growing at length {len(w)}")
        w = nxt
    return w[:n]


def is_fixed_by(
    sigma: BinaryMorphism, alpha, rho, n: int = 300, use_ceiling: bool = False
) -> bool:
    """Prefix check of sigma(s) == s for the rotation word of (alpha, rho)."""
    if n < 2:
        raise DomainError("need a prefix of length >= 2")
    if not prolongable_letters(sigma):
        raise NotProlongableError(f"{sigma} is not prolongable")
    w = rotation_word(alpha, rho, n, ceiling=use_ceiling)
    return apply(sigma, w)[:n] == w


# ---------------------------------------------------------------------------
# generator words


Label = Union[str, int]


def _label(x: Label) -> str:
    if isinstance(x, int):
        x = f"psi{x}"
    x = x.strip().lower()
    if x not in GENERATORS:
        raise DomainError(f"unknown generator label {x!r}")
    return x


@dataclass(frozen=True)
class GeneratorWord:
    """A product of named generators, outermost first."""

    labels: tuple[str, ...]

    def __init__(self, labels: Iterable[Label] = ()) -> None:
        object.__setattr__(self, "labels", tuple(_label(x) for x in labels))

    @classmethod
    def parse(cls, text: str) -> GeneratorWord:
        text = text.strip()
        if text.lower() in ("", "id"):
            return cls(())
        return cls(t for t in text.split(","))

    def morphism(self) -> BinaryMorphism:
        return compose(*(GENERATORS[x] for x in self.labels))

    def psi_indices(self) -> tuple[int, ...]:
        return tuple(PSI_INDEX[x] for x in self.labels)

    def check_in(self, generator_set: Iterable[str]) -> GeneratorWord:
        allowed = frozenset(generator_set)
        bad = [x for x in self.labels if x not in allowed]
        if bad:
            raise DomainError(f"labels {bad} not in generator set {sorted(allowed)}")
        return self

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __add__(self, other: GeneratorWord) -> GeneratorWord:
        return GeneratorWord(self.labels + other.labels)

    def __str__(self) -> str:
        return ",".join(self.labels) if self.labels else "Id"


def as_generator_word(x: GeneratorWord | Sequence[Label]) -> GeneratorWord:
    return x if isinstance(x, GeneratorWord) else GeneratorWord(x)


def ends_in_zero(gamma: GeneratorWord | Sequence[Label]) -> bool:
    """gamma(0) ends in 0 iff gamma uses psi1 an even number of times."""
    gw = as_generator_word(gamma).check_in(M13 | PHI_SET)
    return gw.psi_indices().count(1) % 2 == 0


def psi_conjugate(gamma: BinaryMorphism | GeneratorWord | Sequence[Label]) -> BinaryMorphism:
    """The Psi with u Psi(a) = gamma(a) u, where u is gamma(0) minus its last letter."""
    if not isinstance(gamma, BinaryMorphism):
        gamma = as_generator_word(gamma).morphism()
    g0 = gamma.image0
    if not g0.endswith("0"):
        raise ConjugationError(f"gamma(0)={g0} does not end in 0")
    u = g0[:-1]
    images = []
    for a in "01":
        t = gamma[a] + u
        if not t.startswith(u):
            raise ConjugationError(f"u={u} is not a prefix of gamma({a})u")
        images.append(t[len(u):])
    return BinaryMorphism(*images)


def star(psi: GeneratorWord | Sequence[Label]) -> GeneratorWord:
    """The homomorphism swapping psi3 and psi8."""
    gw = as_generator_word(psi).check_in(M38)
    swap = {"psi3": "psi8", "psi8": "psi3"}
    return GeneratorWord(swap[x] for x in gw.labels)


def conjugation_preimage(psi: GeneratorWord | Sequence[Label]) -> GeneratorWord:
    """The word gamma over {psi1, psi3} with ``psi_conjugate(gamma) == psi``.

    ``psi`` is a word over {psi3, psi8} starting with psi3.  The indices
    (i2..im, 3) and (3, i2..im) are compared position-wise: equal gives 3,
    different gives 1.
    """
    gw = as_generator_word(psi).check_in(M38)
    idx = gw.psi_indices()
    if not idx or idx[0] != 3:
        raise DomainError("conjugation_preimage needs a nonempty word starting with psi3")
    shifted = idx[1:] + (3,)
    summed = [3 if x == y else 8 for x, y in zip(shifted, idx)]
    return GeneratorWord(1 if s == 8 else 3 for s in summed)


remark1_coding = conjugation_preimage  # alias under the original API name


def _inverse(m: Matrix) -> Matrix:
    (a, b), (c, d) = m
    det = a * d - b * c
    if det not in (1, -1):
        raise DomainError("generator matrix is not unimodular")
    return ((d * det, -b * det), (-c * det, a * det))


def decompose(sigma: BinaryMorphism, generator_set: Iterable[str]) -> GeneratorWord:
    """Factor ``sigma`` over the generators by peeling incidence matrices.

    At each step a generator g is peeled from the left when
    inverse(M_g) @ M_sigma stays non-negative; the result is checked by
    recomposition, so a matrix coincidence cannot yield a wrong answer.
    """
    labels = sorted(_label(x) for x in generator_set)
    inverses = {x: _inverse(incidence_matrix(GENERATORS[x])) for x in labels}

    def peel(m: Matrix) -> Iterator[list[str]]:
        if m == IDENTITY:
            yield []
            return
        for x in labels:
            rest = matmul(inverses[x], m)
            if min(rest[0] + rest[1]) >= 0 and sum(rest[0] + rest[1]) < sum(m[0] + m[1]):
                for tail in peel(rest):
                    yield [x] + tail

    for found in peel(incidence_matrix(sigma)):
        gw = GeneratorWord(found)
        if gw.morphism() == sigma:
            return gw
    raise NotInMonoidError(f"{sigma} is not in the monoid generated by {labels}")
