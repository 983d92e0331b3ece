"""Command-line front end: ``sturmkit <subcommand> [options]``.

Exit status is 0 on success, 2 on a usage or domain error and 3 when a
search comes up empty.  Errors are reported as a single line on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence, TextIO

from . import exactnum, morphisms, search, solver, trees, words
from .errors import DomainError, NotFoundError, SturmkitError

EXIT_OK, EXIT_ERROR, EXIT_NOT_FOUND = 0, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one line instead of usage + message
        raise UsageError(message)


def _quadratic(text: str) -> exactnum.QuadraticNumber:
    try:
        return exactnum.parse_quadratic(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _morphism(text: str) -> morphisms.BinaryMorphism:
    try:
        return morphisms.parse_morphism(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _gamma(text: str):
    """A morphism in ``0->X,1->Y`` form or a comma-separated generator word."""
    if "->" in text:
        return _morphism(text)
    try:
        return morphisms.GeneratorWord.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _generator_word(text: str) -> morphisms.GeneratorWord:
    try:
        return morphisms.GeneratorWord.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {n}")
    return n


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (plain text, json-able object)


def cmd_word(a):
    rho = a.alpha if a.rho is None else a.rho
    w = words.rotation_word(a.alpha, rho, a.len, ceiling=a.ceiling)
    return w, {"alpha": str(a.alpha), "rho": str(rho), "ceiling": a.ceiling, "word": w}


def cmd_cf(a):
    cf = exactnum.continued_fraction(a.x)
    return str(cf), {"x": str(a.x), "preperiod": list(cf.preperiod), "period": list(cf.period)}


def cmd_sturm(a):
    ok = exactnum.is_sturm_number(a.alpha)
    rec = {"alpha": str(a.alpha), "sturm": ok, "conjugate": str(a.alpha.conjugate())}
    lines = [f"sturm: {'yes' if ok else 'no'}", f"conjugate: {rec['conjugate']}"]
    if ok:
        form = exactnum.cf_sturm_form(a.alpha)
        rec.update(case=form.case, k=form.k, a0=form.a0, block=list(form.period_digits),
                   continued_fraction=str(form.raw))
        lines += [f"continued fraction: {form.raw}",
                  f"case: {form.case}, k={form.k}, a0={form.a0}, block={list(form.period_digits)}"]
    return "\n".join(lines), rec


def cmd_invariant(a):
    ok = exactnum.yasutomi_invariant(a.alpha, a.rho)
    return ("yes" if ok else "no"), {"alpha": str(a.alpha), "rho": str(a.rho), "invariant": ok}


def cmd_tree(a):
    if a.format == "json":
        return None, trees.tree_labels(a.kind, a.depth)
    return trees.export_tree(a.kind, a.depth, a.format), None


def cmd_locate(a):
    addr = trees.locate_fraction(a.fraction)
    return addr or "L", {"fraction": str(a.fraction), "address": addr}


def cmd_fix(a):
    w = morphisms.fixed_point(a.morphism, a.len, a.letter)
    return w, {"morphism": str(a.morphism), "word": w}


def cmd_check(a):
    rho = a.alpha if a.rho is None else a.rho
    ok = morphisms.is_fixed_by(a.morphism, a.alpha, rho, a.len, a.ceiling)
    rec = {"morphism": str(a.morphism), "alpha": str(a.alpha), "rho": str(rho),
           "ceiling": a.ceiling, "length": a.len, "fixed": ok}
    return ("fixed" if ok else "not fixed"), rec


def cmd_conjugate_psi(a):
    psi = morphisms.psi_conjugate(a.gamma)
    return str(psi), {"gamma": str(a.gamma), "psi": str(psi)}


def cmd_decompose(a):
    gens = morphisms.NAMED_SETS.get(a.set)
    if gens is None:
        gens = [x for x in a.set.split(",") if x]
    gw = morphisms.decompose(a.morphism, gens)
    return str(gw), {"morphism": str(a.morphism), "generator_word": str(gw)}


def cmd_solve(a):
    sol = solver.fixed_point_solve(a.word)
    rec = sol.to_json()
    if a.coefficients:
        rec["tmap"] = list(sol.tmap.coefficients()) + [sol.tmap.ceiling]
    plain = [f"{k}: {v}" for k, v in rec.items()]
    return "\n".join(plain), rec


def cmd_find(a):
    res = search.find_fixing_morphism(a.alpha, a.rho_kind, a.ceiling, a.max_depth)
    rec = res.to_json()
    plain = f"generator word: {res.generator_word}\nmorphism: {res.morphism}"
    return plain, rec


def cmd_lozenge(a):
    rep = words.lozenge_report(a.alpha, a.rho, a.len)
    floor_w = words.sturmian_floor(a.alpha, a.rho, a.len)
    ceil_w = words.sturmian_ceil(a.alpha, a.rho, a.len)
    diff = sorted(rep.differing_positions)
    rec = {"alpha": str(a.alpha), "rho": str(a.rho), "index": rep.index,
           "floor": floor_w, "ceiling": ceil_w, "differing_positions": diff}
    plain = "\n".join([
        f"index: {'none' if rep.index is None else rep.index}",
        f"floor:   {floor_w}",
        f"ceiling: {ceil_w}",
        f"differ at: {diff}",
    ])
    return plain, rec


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sturmkit", description="Exact Sturmian words, trees and fixing morphisms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler: Callable, help_: str, formats=("plain", "json")):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(handler=handler)
        sp.add_argument("--format", choices=formats, default=formats[0])
        return sp

    sp = add("word", cmd_word, "rotation word prefix (characteristic when --rho is omitted)")
    sp.add_argument("--alpha", type=_quadratic, required=True)
    sp.add_argument("--rho", type=_quadratic)
    sp.add_argument("--len", type=_nonneg, required=True)
    sp.add_argument("--ceiling", action="store_true")

    sp = add("cf", cmd_cf, "continued fraction of a quadratic number")
    sp.add_argument("--x", type=_quadratic, required=True)

    sp = add("sturm", cmd_sturm, "Sturm-number test and continued-fraction shape")
    sp.add_argument("--alpha", type=_quadratic, required=True)

    sp = add("invariant", cmd_invariant, "is s_{alpha,rho} substitution invariant?")
    sp.add_argument("--alpha", type=_quadratic, required=True)
    sp.add_argument("--rho", type=_quadratic, required=True)

    sp = add("tree", cmd_tree, "export one of the binary trees", formats=trees.FORMATS)
    sp.add_argument("--kind", choices=trees.KINDS, required=True)
    sp.add_argument("--depth", type=_nonneg, required=True)

    sp = add("locate", cmd_locate, "address of a fraction in the Kepler tree (root prints L)")
    sp.add_argument("--fraction", type=_fraction, required=True)

    sp = add("fix", cmd_fix, "prefix of the fixed point of a morphism")
    sp.add_argument("--morphism", type=_morphism, required=True)
    sp.add_argument("--len", type=_nonneg, required=True)
    sp.add_argument("--letter", choices=("0", "1"))

    sp = add("check", cmd_check, "does a morphism fix a rotation word prefix?")
    sp.add_argument("--morphism", type=_morphism, required=True)
    sp.add_argument("--alpha", type=_quadratic, required=True)
    sp.add_argument("--rho", type=_quadratic)
    sp.add_argument("--len", type=_nonneg, default=300)
    sp.add_argument("--ceiling", action="store_true")

    sp = add("conjugate-psi", cmd_conjugate_psi, "conjugated morphism Psi of gamma")
    sp.add_argument("--gamma", type=_gamma, required=True)

    sp = add("decompose", cmd_decompose, "factor a morphism over a generator set")
    sp.add_argument("--morphism", type=_morphism, required=True)
    sp.add_argument("--set", default="psi13",
                    help=f"one of {', '.join(morphisms.NAMED_SETS)} or a comma-separated label list")

    sp = add("solve", cmd_solve, "solve T_psi(x,y) = (x,y) for a generator word")
    sp.add_argument("--word", type=_generator_word, required=True)
    sp.add_argument("--coefficients", action="store_true", help="include the composed map")

    sp = add("find", cmd_find, "search for a morphism fixing s_{alpha,rho}")
    sp.add_argument("--alpha", type=_quadratic, required=True)
    sp.add_argument("--rho-kind", choices=search.RHO_KINDS, default="alpha")
    sp.add_argument("--ceiling", action="store_true")
    sp.add_argument("--max-depth", type=_nonneg, default=search.DEFAULT_MAX_DEPTH)

    sp = add("lozenge", cmd_lozenge, "lozenge index and floor/ceiling comparison")
    sp.add_argument("--alpha", type=_quadratic, required=True)
    sp.add_argument("--rho", type=_quadratic, required=True)
    sp.add_argument("--len", type=_nonneg, default=16)
    return p


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        plain, rec = args.handler(args)
    except UsageError as exc:
        print(f"sturmkit: usage error: {exc}", file=stderr)
        return EXIT_ERROR
    except NotFoundError as exc:
        print(f"sturmkit: not found: {exc}", file=stderr)
        return EXIT_NOT_FOUND
    except SturmkitError as exc:
        print(f"sturmkit: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.format == "json":
        print(json.dumps(rec, separators=(",", ":")), file=stdout)
    else:
        print(plain, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
