"""Integer polynomials in exponent symbols.

These are the coefficients that appear when basis elements ``x^i y`` with
symbolic ``i`` are multiplied out in the Weyl algebra.  They carry integer
coefficients only; the characteristic enters in :func:`is_zero_function` and
:meth:`ExpPoly.reduced`.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Tuple, Union

from .scalar import Char

# A monomial is a tuple of (symbol, exponent) pairs sorted by symbol key,
# exponents >= 1.  The empty tuple is the constant monomial.
Monomial = Tuple[Tuple[str, int], ...]


class MissingSymbol(KeyError):
    pass


def symbol_key(sym: str):
    """Natural sort key so that ``i2`` sorts before ``i10``."""
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", sym))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for s, e in b:
        d[s] = d.get(s, 0) + e
    return tuple(sorted(d.items(), key=lambda t: symbol_key(t[0])))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: Monomial):
    # higher degree first, then lex on (symbol, exponent) descending
    return (-_mono_degree(m), [(symbol_key(s), -e) for s, e in m])


class ExpPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = clean.get(m, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @classmethod
    def const(cls, n: int) -> "ExpPoly":
        return cls({(): n})

    @classmethod
    def symbol(cls, sym: str) -> "ExpPoly":
        return cls({((sym, 1),): 1})

    @property
    def symbols(self) -> Tuple[str, ...]:
        out = {s for m in self.terms for s, _ in m}
        return tuple(sorted(out, key=symbol_key))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @staticmethod
    def _lift(other) -> "ExpPoly":
        if isinstance(other, ExpPoly):
            return other
        if isinstance(other, int):
            return ExpPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ExpPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return ExpPoly(out)

    __rmul__ = __mul__

    def scale(self, n: int) -> "ExpPoly":
        return ExpPoly({m: c * n for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = ExpPoly.const(other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = [s if e == 1 else f"{s}^{e}" for s, e in m]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"ExpPoly({self})"

    def eval(self, point: Mapping[str, int]) -> int:
        total = 0
        for m, c in self.terms.items():
            v = c
            for s, e in m:
                try:
                    v *= point[s] ** e
                except KeyError:
                    raise MissingSymbol(s) from None
            total += v
        return total

    def reduced(self, c: Char) -> Dict[Monomial, int]:
        """Canonical form of ``self`` as a function on nonnegative integers.

        In characteristic 0 this is the term map itself.  In characteristic p
        exponents are capped to ``((e - 1) mod (p - 1)) + 1`` (the quotient by
        ``s^p = s``) and coefficients are reduced mod p.
        """
        if c.p == 0:
            return dict(self.terms)
        p = c.p
        out: Dict[Monomial, int] = {}
        for m, coef in self.terms.items():
            capped = tuple((s, (e - 1) % (p - 1) + 1) for s, e in m)
            out[capped] = (out.get(capped, 0) + coef) % p
        return {m: v for m, v in out.items() if v}


def ep_add(p: ExpPoly, q: ExpPoly) -> ExpPoly:
    return p + q


def ep_mul(p: ExpPoly, q: ExpPoly) -> ExpPoly:
    return p * q


def ep_scale(p: ExpPoly, n: int) -> ExpPoly:
    return p.scale(n)


def ep_eval(p: ExpPoly, point: Mapping[str, int]) -> int:
    return p.eval(point)


def falling_factorial(sym: Union[str, ExpPoly], s: int) -> ExpPoly:
    """``sym (sym - 1) ... (sym - s + 1)``; the empty product is 1."""
    base = ExpPoly.symbol(sym) if isinstance(sym, str) else sym
    out = ExpPoly.const(1)
    for k in range(s):
        out = out * (base - k)
    return out


def is_zero_function(p: ExpPoly, c: Char) -> bool:
    """True iff ``p`` vanishes at every point of N^m in the field of char ``c``."""
    return not p.reduced(c)


def parse_exppoly(text: str) -> ExpPoly:
    """Small helper for tests: parses sums like ``3*j*k^2 - i + 4``."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty expression")
    if text[0] not in "+-":
        text = "+" + text
    out = ExpPoly()
    for sign, body in re.findall(r"([+-])([^+-]+)", text):
        term = ExpPoly.const(1)
        for factor in body.split("*"):
            if factor.isdigit():
                term = term.scale(int(factor))
                continue
            name, _, exp = factor.partition("^")
            term = term * _power(ExpPoly.symbol(name), int(exp) if exp else 1)
        out = out + (term if sign == "+" else -term)
    return out


def _power(p: ExpPoly, e: int) -> ExpPoly:
    out = ExpPoly.const(1)
    for _ in range(e):
        out = out * p
    return out


def monomials_of(polys: Iterable[ExpPoly]):
    seen = set()
    for p in polys:
        seen.update(p.terms)
    return sorted(seen, key=_grlex_key)
