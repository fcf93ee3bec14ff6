"""Evaluation on the subspace A_1^(-,1) = span{c_i = x^i y} and identity testing.

A multihomogeneous ``f`` is an identity for A_1^(-,1) iff every partial
linearization of ``f`` vanishes on all tuples of basis elements ``c_i``.
Evaluating with a fresh symbol per variable turns "vanishes on all tuples"
into "every :class:`~weylpi.exppoly.ExpPoly` coefficient is the zero
function on N^m", which :func:`~weylpi.exppoly.is_zero_function` decides
exactly in every characteristic.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, lcm
from typing import Dict, Optional, Sequence, Tuple

from .exppoly import ExpPoly, is_zero_function
from .freealg import FreePoly, NotMultihomogeneous, Word, render
from .linearize import Composition, iter_linearizations
from .scalar import Char, CharMismatch, Scalar
from .weyl import (SymbolicWeylElement, WeylElement, render_monomial,
                   symbolic_basis_product)


class ArityMismatch(ValueError):
    pass


def symbol_for(v: int) -> str:
    return f"i{v}"


def _times_basis(a: Dict[Tuple[int, int], int], i: int, p: int) -> Dict[Tuple[int, int], int]:
    """``a * c_i`` on integer coefficient dicts, reduced mod ``p`` when ``p > 0``."""
    out: Dict[Tuple[int, int], int] = {}
    for (e, t), v in a.items():
        ff = 1
        for s in range(min(t, i) + 1):
            if s:
                ff *= i - s + 1
            key = (e + i - s, t - s + 1)
            out[key] = out.get(key, 0) + v * comb(t, s) * ff
    if p:
        return {k: v % p for k, v in out.items() if v % p}
    return {k: v for k, v in out.items() if v}


def eval_concrete(f: FreePoly, point: Sequence[int]) -> WeylElement:
    """``f(c_{point[0]}, c_{point[1]}, ...)`` in A_1."""
    if len(point) < f.nvars:
        raise ArityMismatch(f"{f.nvars} variables but {len(point)} values")
    if any(i < 0 for i in point):
        raise ValueError("basis indices are nonnegative")
    char = f.char
    prefix: Dict[Word, Dict[Tuple[int, int], int]] = {(): {(0, 0): 1}}

    def product(w: Word) -> Dict[Tuple[int, int], int]:
        if w not in prefix:
            prefix[w] = _times_basis(product(w[:-1]), point[w[-1] - 1], char.p)
        return prefix[w]

    acc: Dict[Tuple[int, int], object] = {}
    for w, c in f.terms.items():
        for k, v in product(w).items():
            acc[k] = acc.get(k, 0) + c.value * v
    return WeylElement(acc, char)


@lru_cache(maxsize=4096)
def _word_symbolic(w: Word) -> SymbolicWeylElement:
    return symbolic_basis_product(symbol_for(v) for v in w)


def integral_coefficients(f: FreePoly) -> Dict[Word, int]:
    """Integer coefficient map of ``D*f``, ``D`` the lcm of denominators.

    In characteristic p the residues themselves are used.
    """
    if f.char.p:
        return {w: c.value for w, c in f.terms.items()}
    den = lcm(*(c.value.denominator for c in f.terms.values())) if f.terms else 1
    return {w: int(c.value * den) for w, c in f.terms.items()}


def eval_symbolic(f: FreePoly) -> SymbolicWeylElement:
    """Symbolic normal form of ``f(c_{i1}, c_{i2}, ...)``.

    Variable ``x_v`` is sent to ``c_{iv}`` with symbol ``iv``.  Rational
    coefficients are cleared first, so the result represents ``D*f`` for the
    lcm ``D`` of the denominators (``D = 1`` for integral input).
    """
    if not f.is_multihomogeneous():
        raise NotMultihomogeneous("eval_symbolic needs a multihomogeneous polynomial")
    out = SymbolicWeylElement()
    for w, n in integral_coefficients(f).items():
        out = out + _word_symbolic(w).scale(n)
    return out


@dataclass(frozen=True)
class Witness:
    linearization: Tuple[Composition, ...]
    polynomial: FreePoly
    point: Tuple[int, ...]
    monomial: Tuple[int, int]
    coefficient: Scalar
    value: WeylElement

    def recheck(self) -> bool:
        return bool(eval_concrete(self.polynomial, self.point).coeff(*self.monomial))

    def to_dict(self) -> dict:
        return {
            "linearization": [list(g) for g in self.linearization],
            "polynomial": render(self.polynomial),
            "point": list(self.point),
            "monomial": render_monomial(*self.monomial),
            "coefficient": self.coefficient.plain(),
            "value": str(self.value),
        }


@dataclass(frozen=True)
class EvalReport:
    polynomial: FreePoly
    char: Char
    witness: Optional[Witness] = None
    checked: int = field(default=0, compare=False)

    @property
    def is_identity(self) -> bool:
        return self.witness is None

    @property
    def verdict(self) -> str:
        return "Identity" if self.is_identity else "NotIdentity"

    def to_dict(self) -> dict:
        out = {"polynomial": render(self.polynomial), "char": self.char.p,
               "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        if self.is_identity:
            return "Identity"
        w = self.witness
        args = ", ".join(f"c{i}" for i in w.point)
        lines = ["NotIdentity"]
        if any(len(g) > 1 for g in w.linearization):
            lines.append(f"  linearization {[list(g) for g in w.linearization]}: {render(w.polynomial)}")
        lines.append(f"  at ({args}) -> {w.value}")
        lines.append(f"  coefficient of {render_monomial(*w.monomial)} is {w.coefficient.plain()}")
        return "\n".join(lines)


def _find_witness(g: FreePoly, coef: ExpPoly, c: Char) -> Tuple[int, ...]:
    m = g.nvars
    names = [symbol_for(v) for v in range(1, m + 1)]
    if c.p:
        bound = c.p - 1
    else:
        bound = max((e for mono in coef.terms for _, e in mono), default=0)
    points = sorted(itertools.product(range(bound + 1), repeat=m), key=lambda p: (sum(p), p))
    for pt in points:
        v = coef.eval(dict(zip(names, pt)))
        if v % c.p if c.p else v:
            return pt
    raise AssertionError("nonzero coefficient without a nonvanishing point")


def _check_homogeneous(f: FreePoly, c: Char):
    """Return (witness or None, number of linearizations checked)."""
    count = 0
    for gammas, g in iter_linearizations(f, dedup=True):
        count += 1
        if not g:
            continue
        sym = eval_symbolic(g)
        for (xexp, t), coef in sym.terms.items():
            if is_zero_function(coef, c):
                continue
            point = _find_witness(g, coef, c)
            value = eval_concrete(g, point)
            names = {symbol_for(v): point[v - 1] for v in range(1, len(point) + 1)}
            e = sum(mult * names[s] for s, mult in xexp[0]) + xexp[1]
            return Witness(gammas, g, point, (e, t), value.coeff(e, t), value), count
    return None, count


def is_identity(f: FreePoly, c: Char = None) -> EvalReport:
    """Decide whether ``f`` is a polynomial identity for A_1^(-,1).

    Non-homogeneous input is split into multihomogeneous components, each of
    which must be an identity on its own.  Over a finite field this is a
    sufficient condition only, and a witness then certifies a component.
    """
    if c is None:
        c = f.char
    if f.char != c:
        if not f.char.is_zero:
            raise CharMismatch(f"{f.char} polynomial tested in {c}")
        f = f.with_char(c)
    total = 0
    for _, comp in sorted(f.components().items()):
        witness, n = _check_homogeneous(comp, c)
        total += n
        if witness is not None:
            return EvalReport(f, c, witness, total)
    return EvalReport(f, c, None, total)


def brute_force_identity(f: FreePoly, c: Char = None, bound: int = 6) -> bool:
    """Grid oracle: every linearization vanishes at every tuple in {0..bound}^m.

    Uses concrete products only.  In characteristic p this is a proof once
    ``bound >= p - 1``; in characteristic 0 it is a necessary condition.
    """
    if c is None:
        c = f.char
    if f.char != c:
        f = f.with_char(c)
    for comp in f.components().values():
        for _, g in iter_linearizations(comp, dedup=False):
            for pt in itertools.product(range(bound + 1), repeat=g.nvars):
                if eval_concrete(g, pt):
                    return False
    return True
