"""Named degree-four elements of F<X> and reduction of multilinear elements.

Everything here is built from explicit formulas.  Elements that are
linearizations of others (``Phi211``, ``PhiLin``, ``PsiLin``) are stored as
expansions or substitutions and cross-checked against
:mod:`weylpi.linearize` in the test suite.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Tuple

from .freealg import FreePoly, Word, parse, standard_polynomial, word_mdeg
from .scalar import Char, ZERO


class UnknownName(KeyError):
    pass


class WrongMultidegree(ValueError):
    pass


PHI22 = ("x1^2*x2^2 - 3*x1*x2*x1*x2 + 2*x1*x2^2*x1 + 2*x2*x1^2*x2"
         " - 3*x2*x1*x2*x1 + x2^2*x1^2")

PHI211 = ("x1^2*x2*x3 + x1^2*x3*x2 - 3*x1*x2*x1*x3 + 2*x1*x2*x3*x1 - 3*x1*x3*x1*x2"
          " + 2*x1*x3*x2*x1 + 2*x2*x1^2*x3 - 3*x2*x1*x3*x1 + x2*x3*x1^2"
          " + 2*x3*x1^2*x2 - 3*x3*x1*x2*x1 + x3*x2*x1^2")

PHI_LIN = ("x1*x2*x3*x4 + x1*x2*x4*x3 - 3*x1*x3*x2*x4 + 2*x1*x3*x4*x2 - 3*x1*x4*x2*x3"
           " + 2*x1*x4*x3*x2 + x2*x1*x3*x4 + x2*x1*x4*x3 - 3*x2*x3*x1*x4 + 2*x2*x3*x4*x1"
           " - 3*x2*x4*x1*x3 + 2*x2*x4*x3*x1 + 2*x3*x1*x2*x4 - 3*x3*x1*x4*x2"
           " + 2*x3*x2*x1*x4 - 3*x3*x2*x4*x1 + x3*x4*x1*x2 + x3*x4*x2*x1"
           " + 2*x4*x1*x2*x3 - 3*x4*x1*x3*x2 + 2*x4*x2*x1*x3 - 3*x4*x2*x3*x1"
           " + x4*x3*x1*x2 + x4*x3*x2*x1")

PSI = "x2*[x1,x4]*x3 + x3*[x1,x4]*x2"

PSI211 = "x1*[x1,x2]*x3 + x3*[x1,x2]*x1"

GAMMA = ("-x1*x2*x3*x4 + 2*x1*x2*x4*x3 + x1*x3*x4*x2 - 2*x1*x4*x2*x3"
         " + 2*x2*x1*x3*x4 - 2*x2*x1*x4*x3 - 2*x2*x3*x1*x4 + x2*x3*x4*x1 + x2*x4*x1*x3"
         " + x3*x1*x2*x4 - 2*x3*x1*x4*x2 + x3*x4*x1*x2 + x4*x1*x2*x3 - x4*x2*x3*x1")

LAMBDA = ("-3*x1*x2*x3*x4 + 3*x1*x2*x4*x3 + 2*x1*x3*x2*x4 - 2*x1*x4*x2*x3"
          " + 3*x2*x1*x3*x4 - 3*x2*x1*x4*x3 - 2*x2*x3*x1*x4 + 2*x2*x4*x1*x3"
          " - x3*x1*x4*x2 + x3*x2*x4*x1 + x4*x1*x3*x2 - x4*x2*x3*x1")

DELTA = ("x2*x1*x3*x4 + x2*x4*x1*x3 + x3*x1*x2*x4 + x3*x4*x1*x2"
         " + x4*x1*x2*x3 + x4*x1*x3*x2")

H = ("x1^2*x3*x2 + 2*x3*x1^2*x2 + x3*x2*x1^2 - x1*x2*x3*x1 + 3*x1*x3*x2*x1"
     " - 3*x1*x3*x1*x2 - 3*x3*x1*x2*x1")

G = "[[x1,x3],[x2,x4]] + x2*St3(x1,x3,x4) + St3(x1,x2,x4)*x3"

# the twelve words of g over F_2
G_EXPANSION_F2 = ("x1*x2*x4*x3 + x1*x3*x2*x4 + x1*x3*x4*x2 + x1*x4*x2*x3"
                  " + x2*x1*x3*x4 + x2*x3*x1*x4 + x2*x3*x4*x1 + x2*x4*x1*x3"
                  " + x3*x1*x2*x4 + x3*x1*x4*x2 + x4*x1*x2*x3 + x4*x2*x3*x1")


def psi_of(a: FreePoly, b: FreePoly, c: FreePoly, d: FreePoly) -> FreePoly:
    """``Psi(a, b, c, d) = b[a, d]c + c[a, d]b``."""
    comm = a * d - d * a
    return b * comm * c + c * comm * b


def st3_left(i: int, c: Char = ZERO) -> FreePoly:
    """``x_i St3(x_j, x_k, x_l)`` with ``{j, k, l} = {1, 2, 3, 4} - {i}`` ascending."""
    rest = [v for v in (1, 2, 3, 4) if v != i]
    return FreePoly.var(i, c) * standard_polynomial(3, rest, c)


def st3_right(i: int, c: Char = ZERO) -> FreePoly:
    rest = [v for v in (1, 2, 3, 4) if v != i]
    return standard_polynomial(3, rest, c) * FreePoly.var(i, c)


def _psi_lin(c: Char) -> FreePoly:
    x = [None] + [FreePoly.var(v, c) for v in range(1, 5)]
    return psi_of(x[1], x[2], x[4], x[3]) + psi_of(x[2], x[1], x[4], x[3])


_BUILDERS: Dict[str, Callable[[Char], FreePoly]] = {
    "Phi22": lambda c: parse(PHI22, c),
    "Phi211": lambda c: parse(PHI211, c),
    "PhiLin": lambda c: parse(PHI_LIN, c),
    "Psi": lambda c: parse(PSI, c),
    "Psi211": lambda c: parse(PSI211, c),
    "PsiLin": _psi_lin,
    "Gamma": lambda c: parse(GAMMA, c),
    "Lambda": lambda c: parse(LAMBDA, c),
    "Delta": lambda c: parse(DELTA, c),
    "H": lambda c: parse(H, c),
    "G": lambda c: parse(G, c),
    "CommSq": lambda c: parse("[[x1,x2],[x3,x4]]", c),
    "CommSq211": lambda c: parse("[[x1,x2],[x1,x3]]", c),
    "CommSq1324": lambda c: parse("[[x1,x3],[x2,x4]]", c),
    "St2": lambda c: standard_polynomial(2, None, c),
    "St3": lambda c: standard_polynomial(3, None, c),
    "St3_left_211": lambda c: parse("x1*St3(x1,x2,x3)", c),
    "St3_right_211": lambda c: parse("St3(x1,x2,x3)*x1", c),
}
for _i in (1, 2, 3, 4):
    _BUILDERS[f"St3_left_{_i}"] = (lambda i: lambda c: st3_left(i, c))(_i)
    _BUILDERS[f"St3_right_{_i}"] = (lambda i: lambda c: st3_right(i, c))(_i)

NAMES: Tuple[str, ...] = tuple(_BUILDERS)
_LOOKUP = {n.lower(): n for n in NAMES}


def canonical_name(name: str) -> str:
    try:
        return _LOOKUP[name.lower()]
    except KeyError:
        raise UnknownName(f"unknown catalog name {name!r}") from None


def named(name: str, c: Char = ZERO) -> FreePoly:
    """Polynomial for a catalog name (case-insensitive) over characteristic ``c``."""
    return _BUILDERS[canonical_name(name)](c)


# -- reduced multilinear monomials ----------------------------------------

NONREDUCED: Tuple[Word, ...] = (
    (1, 4, 3, 2), (2, 4, 3, 1), (3, 2, 1, 4), (3, 4, 2, 1),
    (4, 2, 1, 3), (4, 3, 1, 2), (4, 3, 2, 1),
)

# alpha_1 .. alpha_17, in the order the unknowns are numbered
REDUCED: Tuple[Word, ...] = (
    (1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 2, 4), (1, 3, 4, 2), (1, 4, 2, 3),
    (2, 1, 3, 4), (2, 1, 4, 3), (2, 3, 1, 4), (2, 3, 4, 1), (2, 4, 1, 3),
    (3, 1, 2, 4), (3, 1, 4, 2), (3, 2, 4, 1), (3, 4, 1, 2),
    (4, 1, 2, 3), (4, 1, 3, 2), (4, 2, 3, 1),
)


def nonreduced_monomials() -> List[Word]:
    return list(NONREDUCED)


def reduced_monomials() -> List[Word]:
    return list(REDUCED)


def _rule(w: Word, c: Char) -> FreePoly:
    """The St3 product whose lex-largest word is the non-reduced ``w``."""
    rules = {
        (1, 4, 3, 2): lambda: st3_left(1, c),
        (2, 4, 3, 1): lambda: st3_left(2, c),
        (3, 4, 2, 1): lambda: st3_left(3, c),
        (4, 3, 2, 1): lambda: st3_left(4, c),
        (4, 3, 1, 2): lambda: st3_right(2, c),
        (4, 2, 1, 3): lambda: st3_right(3, c),
        (3, 2, 1, 4): lambda: st3_right(4, c),
    }
    return rules[w]()


def reduce_to_reduced(f: FreePoly) -> Tuple[FreePoly, FreePoly]:
    """Split a (1,1,1,1)-element as ``f1 + f2`` with ``f1`` reduced.

    ``f2`` is a combination of ``x_i St3(...)`` and ``St3(...) x_l``.  The
    non-reduced word that is largest in lex order is eliminated first; each
    rule only introduces smaller words, so the loop terminates.
    """
    c = f.char
    if any(word_mdeg(w, 4) != (1, 1, 1, 1) for w in f.terms):
        raise WrongMultidegree("reduce_to_reduced expects multidegree (1,1,1,1)")
    f1 = f
    f2 = FreePoly.zero(c)
    bad = set(NONREDUCED)
    while True:
        present = sorted((w for w in f1.terms if w in bad), reverse=True)
        if not present:
            return f1, f2
        w = present[0]
        gen = _rule(w, c)
        k = f1.coeff(w) / gen.coeff(w)
        f1 = f1 - gen.scale(k)
        f2 = f2 + gen.scale(k)


# -- the two displayed St3 relations among degree-four elements ------------

def st3_combination_for_gamma_lambda(c: Char = ZERO) -> FreePoly:
    """``Phi_lin`` plus the St3 terms that together equal ``4 Gamma - 2 Lambda``."""
    return (named("PhiLin", c)
            + st3_left(1, c) + st3_left(2, c) + st3_left(3, c).scale(2)
            + st3_right(1, c) + st3_right(2, c) + st3_right(3, c).scale(2))


def alternating_st3_sum(c: Char = ZERO) -> FreePoly:
    """``sum_i (-1)^(i+1) (x_i St3(...) + St3(...) x_i)``, which vanishes."""
    out = FreePoly.zero(c)
    for i in (1, 2, 3, 4):
        term = st3_left(i, c) + st3_right(i, c)
        out = out + term if i % 2 else out - term
    return out
