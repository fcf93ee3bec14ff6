"""The first Weyl algebra A_1 = F<x, y> / (yx - xy - 1) in normal-ordered form.

Two independent product routes are kept on purpose:

* :func:`normal_form` rewrites ``yx -> xy + 1`` on words until none is left;
* :func:`weyl_mul` uses the reordering rule
  ``y^b x^c = sum_s C(b, s) c(c-1)...(c-s+1) x^(c-s) y^(b-s)``.

:class:`SymbolicWeylElement` runs the same reordering rule with symbolic
x-exponents, which is what makes exact identity testing possible.
"""

from __future__ import annotations

from math import comb
from typing import Dict, Iterable, Mapping, Tuple

from .exppoly import ExpPoly, falling_factorial, symbol_key
from .scalar import Char, CharMismatch, Scalar, ZERO


def _ff_int(n: int, s: int) -> int:
    out = 1
    for k in range(s):
        out *= n - k
    return out


class WeylElement:
    """Finite sum of ``c_ij x^i y^j`` with nonzero coefficients."""

    __slots__ = ("char", "terms")

    def __init__(self, terms: Mapping[Tuple[int, int], object] = None, char: Char = ZERO):
        clean: Dict[Tuple[int, int], Scalar] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in x^{i} y^{j}")
            if not isinstance(c, Scalar):
                c = Scalar(c, char)
            elif c.char != char:
                raise CharMismatch(f"{c.char} vs {char}")
            prev = clean.get((i, j))
            clean[(i, j)] = c if prev is None else prev + c
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    @classmethod
    def _from_ints(cls, terms: Mapping[Tuple[int, int], int], char: Char) -> "WeylElement":
        return cls({k: v for k, v in terms.items() if v}, char)

    @classmethod
    def one(cls, char: Char = ZERO) -> "WeylElement":
        return cls({(0, 0): 1}, char)

    @classmethod
    def monomial(cls, i: int, j: int, char: Char = ZERO, coeff=1) -> "WeylElement":
        return cls({(i, j): coeff}, char)

    @classmethod
    def basis(cls, i: int, char: Char = ZERO) -> "WeylElement":
        """The spanning element ``c_i = x^i y`` of the subspace A_1^(-,1)."""
        return cls({(i, 1): 1}, char)

    def _check(self, other: "WeylElement"):
        if self.char != other.char:
            raise CharMismatch(f"{self.char} vs {other.char}")

    def __add__(self, other: "WeylElement") -> "WeylElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            out[k] = c if prev is None else prev + c
        return WeylElement(out, self.char)

    def __neg__(self):
        return WeylElement({k: -c for k, c in self.terms.items()}, self.char)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return WeylElement({k: c * other for k, c in self.terms.items()}, self.char)
        return weyl_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.char == other.char and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.char, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), Scalar(0, self.char))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def __str__(self):
        return render_weyl(self)

    def __repr__(self):
        return f"WeylElement({render_weyl(self)!r}, {self.char!r})"

    def in_span_of_basis(self) -> bool:
        """True iff every term has the form x^i y (the subspace A_1^(-,1))."""
        return all(j == 1 for (_, j) in self.terms)


def render_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts) if parts else "1"


def render_weyl(a: WeylElement) -> str:
    if not a.terms:
        return "0"
    out = ""
    for n, ((i, j), c) in enumerate(a.sorted_terms()):
        if a.char.p:
            neg, mag = False, str(c.value)
        else:
            neg = c.value < 0
            mag = c.plain().lstrip("-")
        mono = render_monomial(i, j)
        if mono == "1":
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    a._check(b)
    acc: Dict[Tuple[int, int], Scalar] = {}
    for (i1, j1), c1 in a.terms.items():
        for (i2, j2), c2 in b.terms.items():
            base = c1 * c2
            for s in range(min(j1, i2) + 1):
                k = comb(j1, s) * _ff_int(i2, s)
                key = (i1 + i2 - s, j1 + j2 - s)
                term = base * k
                prev = acc.get(key)
                acc[key] = term if prev is None else prev + term
    return WeylElement(acc, a.char)


def weyl_commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    return weyl_mul(a, b) - weyl_mul(b, a)


def weyl_product(factors: Iterable[WeylElement], char: Char = ZERO) -> WeylElement:
    out = WeylElement.one(char)
    for f in factors:
        out = weyl_mul(out, f)
    return out


def normal_form(word: str, c: Char = ZERO) -> WeylElement:
    """Normal-order a word over ``{x, y}`` by exhaustive rewriting ``yx -> xy + 1``."""
    if set(word) - {"x", "y"}:
        raise ValueError(f"word must be over {{x, y}}: {word!r}")
    pending: Dict[str, int] = {word: 1}
    done: Dict[Tuple[int, int], int] = {}
    while pending:
        w, coef = pending.popitem()
        k = w.find("yx")
        if k < 0:
            key = (w.count("x"), w.count("y"))
            done[key] = done.get(key, 0) + coef
            continue
        for nw in (w[:k] + "xy" + w[k + 2:], w[:k] + w[k + 2:]):
            pending[nw] = pending.get(nw, 0) + coef
    return WeylElement._from_ints(done, c)


def quartic_closed_form(i: int, j: int, k: int, l: int, c: Char = ZERO) -> WeylElement:
    """``c_i c_j c_k c_l`` from the four-term closed form.

    With ``e = i + j + k + l`` the coefficients of ``x^e y^4``, ``x^(e-1) y^3``,
    ``x^(e-2) y^2`` and ``x^(e-3) y`` are ``1``, ``j + 2k + 3l``,
    ``(k + 2l)(j + k + l - 1) + l(k + l - 1)`` and ``l(k + l - 1)(j + k + l - 2)``.
    """
    e = i + j + k + l
    coeffs = [
        1,
        j + 2 * k + 3 * l,
        (k + 2 * l) * (j + k + l - 1) + l * (k + l - 1),
        l * (k + l - 1) * (j + k + l - 2),
    ]
    terms = {}
    for s, coef in enumerate(coeffs):
        if e - s < 0:
            # a negative power of x only ever appears with a zero coefficient
            assert coef == 0, (i, j, k, l, s, coef)
            continue
        terms[(e - s, 4 - s)] = coef
    return WeylElement._from_ints(terms, c)


# -- symbolic exponents -------------------------------------------------------

class NegativeExponentWithNonzeroCoeff(ArithmeticError):
    pass


Affine = Tuple[Tuple[Tuple[str, int], ...], int]


def affine_add(a: Affine, sym: str, shift: int) -> Affine:
    d = dict(a[0])
    d[sym] = d.get(sym, 0) + 1
    return (tuple(sorted(d.items(), key=lambda t: symbol_key(t[0]))), a[1] + shift)


def affine_eval(a: Affine, point: Mapping[str, int]) -> int:
    return sum(m * point[s] for s, m in a[0]) + a[1]


def render_affine(a: Affine) -> str:
    parts = [s if m == 1 else f"{m}*{s}" for s, m in a[0]]
    out = "+".join(parts)
    if a[1] or not parts:
        out += f"{a[1]:+d}" if parts else str(a[1])
    return out


class SymbolicWeylElement:
    """Sum of ``coeff * x^(affine form) * y^t`` with :class:`ExpPoly` coefficients.

    Terms are keyed by ``(x_exponent, y_exponent)``; the x-exponent is an
    affine form ``(((symbol, multiplicity), ...), offset)``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[Affine, int], ExpPoly] = None):
        object.__setattr__(self, "terms", {k: v for k, v in (terms or {}).items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicWeylElement is immutable")

    @classmethod
    def one(cls) -> "SymbolicWeylElement":
        return cls({(((), 0), 0): ExpPoly.const(1)})

    def __add__(self, other: "SymbolicWeylElement") -> "SymbolicWeylElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return SymbolicWeylElement(out)

    def scale(self, n: int) -> "SymbolicWeylElement":
        return SymbolicWeylElement({k: v.scale(n) for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, SymbolicWeylElement):
            return self.terms == other.terms
        return NotImplemented

    def by_y_degree(self) -> Dict[int, Tuple[Affine, ExpPoly]]:
        return {t: (x, c) for (x, t), c in self.terms.items()}

    def coefficients(self):
        """``[(x_exponent, y_exponent, coeff), ...]`` sorted by descending y."""
        return [(x, t, c) for (x, t), c in sorted(self.terms.items(), key=lambda kv: -kv[0][1])]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*x^({render_affine(x)})*y^{t}" for x, t, c in self.coefficients())

    __repr__ = __str__


def sym_mul_basis(a: SymbolicWeylElement, sym: str) -> SymbolicWeylElement:
    """Right-multiply ``a`` by ``x^sym y``."""
    out: Dict[Tuple[Affine, int], ExpPoly] = {}
    ff_cache: Dict[int, ExpPoly] = {}
    for (xexp, t), coef in a.terms.items():
        for s in range(t + 1):
            if s not in ff_cache:
                ff_cache[s] = falling_factorial(sym, s)
            term = coef * ff_cache[s].scale(comb(t, s))
            key = (affine_add(xexp, sym, -s), t - s + 1)
            out[key] = out[key] + term if key in out else term
    return SymbolicWeylElement(out)


def symbolic_basis_product(symbols: Iterable[str]) -> SymbolicWeylElement:
    """``c_{s1} c_{s2} ... c_{sn}`` with symbolic indices."""
    out = SymbolicWeylElement.one()
    for s in symbols:
        out = sym_mul_basis(out, s)
    return out


def substitute(a: SymbolicWeylElement, point: Mapping[str, int], c: Char = ZERO) -> WeylElement:
    terms: Dict[Tuple[int, int], int] = {}
    for (xexp, t), coef in a.terms.items():
        e = affine_eval(xexp, point)
        v = coef.eval(point)
        if e < 0:
            if v != 0:
                raise NegativeExponentWithNonzeroCoeff(
                    f"x^{e} y^{t} has coefficient {v} at {dict(point)}")
            continue
        terms[(e, t)] = terms.get((e, t), 0) + v
    return WeylElement._from_ints(terms, c)
