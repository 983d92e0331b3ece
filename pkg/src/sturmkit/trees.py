"""Binary trees indexed by bit-string addresses.

An address ``i1...in`` is a ``str`` over ``"01"`` read from the root; the root
is ``""``.  Matrices and morphisms at a node multiply with the last bit
outermost: ``K_{in} ... K_{i1}`` and ``phi_{in} o ... o phi_{i1}``.
"""
from __future__ import annotations

import itertools
import json
import os
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import _kernels
from .errors import DomainError, NoFixedPointError, ResourceError
from .exactnum import QuadraticNumber
from .morphisms import IDENTITY, GeneratorWord, BinaryMorphism, Matrix, matmul
from .solver import fixed_point_solve

DEFAULT_DEPTH_CAP = 16

K0: Matrix = ((1, 0), (1, 1))
K1: Matrix = ((0, 1), (1, 1))
M0: Matrix = ((1, 1), (0, 1))
M1: Matrix = ((1, 1), (1, 0))
SWAP: Matrix = ((0, 1), (1, 0))

KINDS = ("kepler", "phi", "matrixK", "matrixM", "sturm", "m38")
FORMATS = ("ascii", "dot", "json")


def depth_cap() -> int:
    raw = os.environ.get("STURMKIT_DEPTH_CAP")
    return int(raw) if raw else DEFAULT_DEPTH_CAP


def check_address(addr: str) -> str:
    if not isinstance(addr, str) or addr.strip("01"):
        raise DomainError(f"not a node address: {addr!r}")
    return addr


def _check_depth(n: int) -> None:
    if n < 0:
        raise DomainError(f"negative depth {n}")
    cap = depth_cap()
    if n > cap:
        raise ResourceError(f"depth {n} exceeds the cap {cap} (set STURMKIT_DEPTH_CAP)")


def level_addresses(n: int) -> Iterator[str]:
    """The 2**n addresses of level ``n`` in left-to-right order."""
    for bits in itertools.product("01", repeat=n):
        yield "".join(bits)


def tree_addresses(depth: int) -> Iterator[str]:
    for n in range(depth + 1):
        yield from level_addresses(n)


def address_word(addr: str, labels: tuple[str, str]) -> GeneratorWord:
    """Generator word (outermost first) for a node, bit b labelled ``labels[b]``."""
    check_address(addr)
    return GeneratorWord(labels[int(b)] for b in reversed(addr))


# ---------------------------------------------------------------------------
# Kepler's tree of fractions


def kepler_value(addr: str) -> Fraction:
    """Root 1/2; child 0 of p/q is p/(p+q), child 1 is q/(p+q)."""
    p, q = 1, 2
    for b in check_address(addr):
        p, q = (p, p + q) if b == "0" else (q, p + q)
    return Fraction(p, q)


def kepler_matrix_value(addr: str) -> Fraction:
    """Same value through the matrix product K_{in}...K_{i1} applied to (1, 2)."""
    (a, b), (c, d) = matrix_at(addr, "K")
    return Fraction(a + 2 * b, c + 2 * d)


def kepler_level(n: int) -> list[Fraction]:
    _check_depth(n)
    if n <= 60:
        p, q = _kernels.kepler_level_arrays(n)
        return [Fraction(int(x), int(y)) for x, y in zip(p, q)]
    return [kepler_value(a) for a in level_addresses(n)]


def iter_kepler_level(n: int) -> Iterator[Fraction]:
    """Stream level ``n`` in address order without materialising it."""
    _check_depth(n)
    for addr in level_addresses(n):
        yield kepler_value(addr)


def locate_fraction(f: Fraction | str) -> str:
    """Address of the unique node carrying ``f``, by walking back to 1/2."""
    f = Fraction(f)
    a, b = f.numerator, f.denominator
    if not 0 < a < b:
        raise DomainError(f"{f} is not in (0,1)")
    bits = []
    while (a, b) != (1, 2):
        if 2 * a < b:
            bits.append("0")
            a, b = a, b - a
        else:
            bits.append("1")
            a, b = b - a, a
    return "".join(reversed(bits))


# ---------------------------------------------------------------------------
# matrix, morphism and Sturm-number trees


def matrix_at(addr: str, family: str = "K") -> Matrix:
    gens = {"K": (K0, K1), "M": (M0, M1)}.get(family)
    if gens is None:
        raise DomainError(f"unknown matrix family {family!r}")
    out = IDENTITY
    for b in check_address(addr):
        out = matmul(gens[int(b)], out)
    return out


def morphism_at(addr: str) -> BinaryMorphism:
    return address_word(addr, ("phi0", "phi1")).morphism()


def tree38_morphism_at(addr: str) -> BinaryMorphism:
    return address_word(addr, ("psi3", "psi8")).morphism()


def sturm_number_at(addr: str) -> Optional[QuadraticNumber]:
    """Slope of the characteristic word fixed by ``morphism_at(addr)``; None on 0^n."""
    if "1" not in check_address(addr):
        return None
    return fixed_point_solve(address_word(addr, ("phi0", "phi1"))).alpha


def tree38_solution(addr: str):
    """(alpha, rho) of the word fixed by ``tree38_morphism_at(addr)``."""
    try:
        return fixed_point_solve(address_word(addr, ("psi3", "psi8")))
    except NoFixedPointError:
        return None


# ---------------------------------------------------------------------------
# export


def _matrix_text(m: Matrix) -> str:
    return f"[[{m[0][0]},{m[0][1]}],[{m[1][0]},{m[1][1]}]]"


def _fraction_text(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


LABELERS: dict[str, Callable[[str], str]] = {
    "kepler": lambda a: _fraction_text(kepler_value(a)),
    "phi": lambda a: str(morphism_at(a)),
    "matrixK": lambda a: _matrix_text(matrix_at(a, "K")),
    "matrixM": lambda a: _matrix_text(matrix_at(a, "M")),
    "sturm": lambda a: str(sturm_number_at(a) or "none"),
    "m38": lambda a: str(tree38_morphism_at(a)),
}


def tree_labels(kind: str, depth: int) -> dict[str, str]:
    if kind not in LABELERS:
        raise DomainError(f"unknown tree kind {kind!r}; choose from {', '.join(KINDS)}")
    _check_depth(depth)
    label = LABELERS[kind]
    return {a: label(a) for a in tree_addresses(depth)}


def export_tree(kind: str, depth: int, fmt: str = "ascii") -> str:
    labels = tree_labels(kind, depth)
    if fmt == "json":
        return json.dumps(labels, separators=(",", ":"))
    if fmt == "dot":
        ident = lambda a: "L" if a == "" else a  # noqa: E731
        lines = [f"digraph {kind} {{"]
        for a, text in labels.items():
            lines.append(f'  "{ident(a)}" [label="{text}"];')
        for a in labels:
            if a:
                lines.append(f'  "{ident(a[:-1])}" -> "{a}";')
        lines.append("}")
        return "\n".join(lines)
    if fmt == "ascii":
        order = sorted(labels, key=lambda a: [int(b) + 1 for b in a])  # depth-first
        return "\n".join(f"{'  ' * len(a)}{a or 'L'}: {labels[a]}" for a in order)
    raise DomainError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
