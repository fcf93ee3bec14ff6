"""The space of multihomogeneous identities of A_1^(-,1) of a given multidegree.

A generic element ``sum_w a_w w`` over all words ``w`` of multidegree ``d`` is
an identity iff, for each partial linearization, every exponent-monomial of
every coefficient of its symbolic evaluation vanishes (after reduction for
characteristic p).  Each such monomial gives one linear equation in the
``a_w``; the identity space is the exact nullspace of that system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .catalog import REDUCED, WrongMultidegree, named
from .exppoly import Monomial
from .freealg import FreePoly, MultiDegree, Word, trim, word_mdeg, words_of_mdeg
from .linalg import det, in_span, nullspace, rank
from .linearize import linearization_family, lin_multi
from .scalar import Char, Scalar, ZERO
from .witt import eval_concrete, eval_symbolic


@dataclass(frozen=True)
class SolveReport:
    mdeg: MultiDegree
    char: Char
    monomials: Tuple[Word, ...]
    basis: Tuple[Tuple[Scalar, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def polynomials(self) -> List[FreePoly]:
        return [FreePoly(dict(zip(self.monomials, v)), self.char) for v in self.basis]

    def vector(self, f: FreePoly) -> List[Scalar]:
        return [f.coeff(w) for w in self.monomials]

    def to_dict(self) -> dict:
        return {
            "mdeg": list(self.mdeg),
            "char": self.char.p,
            "monomial_order": [list(w) for w in self.monomials],
            "dimension": self.dimension,
            "basis": [[s.plain() for s in v] for v in self.basis],
        }

    def to_json(self) -> str:
        d = self.to_dict()
        rows = lambda xs: "[" + ",\n    ".join(json.dumps(x) for x in xs) + "]"
        return (
            "{\n"
            f'  "mdeg": {json.dumps(d["mdeg"])},\n'
            f'  "char": {d["char"]},\n'
            f'  "monomial_order": {rows(d["monomial_order"])},\n'
            f'  "dimension": {d["dimension"]},\n'
            f'  "basis": {rows(d["basis"])}\n'
            "}"
        )

    @classmethod
    def from_dict(cls, data: dict) -> "SolveReport":
        c = Char(data["char"])
        basis = tuple(tuple(Scalar(Fraction(x), c) for x in v) for v in data["basis"])
        report = cls(tuple(data["mdeg"]), c, tuple(tuple(w) for w in data["monomial_order"]), basis)
        if report.dimension != data["dimension"]:
            raise ValueError("dimension field disagrees with basis length")
        return report



@lru_cache(maxsize=None)
def _constraint_table(d: MultiDegree) -> Tuple[Tuple[Tuple, Tuple[Tuple[int, Monomial, int], ...]], ...]:
    """Per (linearization, y-degree): integer ExpPoly coefficients of every word.

    Characteristic independent; cached per multidegree.
    """
    words = words_of_mdeg(d)
    out = []
    for gammas in linearization_family(d, dedup=True):
        per_t: Dict[int, List[Tuple[int, Monomial, int]]] = {}
        for col, w in enumerate(words):
            g = lin_multi(FreePoly.word(w), gammas)
            for (_, t), coef in eval_symbolic(g).terms.items():
                bucket = per_t.setdefault(t, [])
                for mono, n in coef.terms.items():
                    bucket.append((col, mono, n))
        for t in sorted(per_t):
            out.append(((gammas, t), tuple(per_t[t])))
    return tuple(out)


def constraint_matrix(d: Sequence[int], c: Char = ZERO) -> List[List[int]]:
    """Linear equations on the word coefficients, one per reduced exponent-monomial."""
    d = trim(d)
    ncols = len(words_of_mdeg(d))
    rows: List[List[int]] = []
    for _, entries in _constraint_table(d):
        by_mono: Dict[Monomial, List[int]] = {}
        for col, mono, n in entries:
            if c.p:
                p = c.p
                mono = tuple((s, (e - 1) % (p - 1) + 1) for s, e in mono)
            row = by_mono.setdefault(mono, [0] * ncols)
            row[col] += n
        for row in by_mono.values():
            if c.p:
                row = [x % c.p for x in row]
            if any(row):
                rows.append(row)
    return rows


def solve(d: Sequence[int], c: Char = ZERO) -> SolveReport:
    d = trim(d)
    if sum(d) < 1:
        raise ValueError("multidegree must have positive total degree")
    words = tuple(words_of_mdeg(d))
    rows = constraint_matrix(d, c)
    basis = nullspace(rows, len(words), c)
    return SolveReport(d, c, words, tuple(tuple(v) for v in basis))


def contains(report: SolveReport, f: FreePoly) -> bool:
    if f.char != report.char:
        f = f.with_char(report.char)
    if f and any(trim(word_mdeg(w)) != report.mdeg for w in f.terms):
        raise WrongMultidegree(f"expected multidegree {report.mdeg}")
    return in_span([list(v) for v in report.basis], report.vector(f), report.char)


def span_rank(polys: Sequence[FreePoly], c: Char = None) -> int:
    """Rank of a family of polynomials (coefficient vectors over their joint support)."""
    if not polys:
        return 0
    c = polys[0].char if c is None else c
    words = sorted({w for f in polys for w in f.terms})
    return rank([[f.coeff(w) for w in words] for f in polys], len(words), c)


def characteristic_sweep(d: Sequence[int], primes: Sequence[int] = (2, 3, 5)) -> Dict[int, int]:
    """Dimension of the identity space over Q and each F_p."""
    out = {0: solve(d, ZERO).dimension}
    for p in primes:
        out[p] = solve(d, Char(p)).dimension
    return out


# -- rebuilding the reference coefficient matrices ----------------------

# (basis indices, (r, s)) : row = coefficient of x^r y^s in f(c_i, c_j, c_k, c_l)
P44_ROWS = (
    ((1, 0, 0, 0), (1, 4)), ((1, 0, 0, 0), (0, 3)), ((0, 1, 0, 0), (0, 3)),
    ((0, 0, 1, 0), (0, 3)), ((2, 0, 0, 0), (0, 2)), ((0, 2, 0, 0), (0, 2)),
    ((0, 0, 2, 0), (0, 2)), ((1, 1, 0, 0), (0, 2)), ((1, 0, 1, 0), (0, 2)),
    ((1, 1, 1, 0), (0, 1)), ((1, 1, 0, 1), (0, 1)), ((1, 0, 1, 1), (0, 1)),
    ((2, 1, 0, 0), (0, 1)), ((2, 0, 1, 0), (0, 1)), ((0, 2, 1, 0), (0, 1)),
)
P44_COLUMNS = tuple(range(15))  # alpha_1 .. alpha_15

P45_ROWS = (
    ((1, 0, 0, 0), (1, 4)), ((1, 0, 0, 0), (0, 3)), ((0, 1, 0, 0), (0, 3)),
    ((0, 0, 1, 0), (0, 3)), ((1, 1, 0, 0), (0, 2)), ((1, 0, 1, 0), (0, 2)),
    ((1, 1, 1, 0), (0, 1)), ((1, 1, 1, 0), (1, 2)), ((1, 1, 0, 1), (0, 1)),
    ((1, 1, 0, 1), (1, 2)), ((1, 0, 1, 1), (0, 1)), ((1, 0, 1, 1), (1, 2)),
)
# alpha_1, alpha_3, ..., alpha_12, alpha_15 (zero-based indices into REDUCED)
P45_COLUMNS = (0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14)

P45S_ELEMENTS = ("Gamma", "Psi", "Delta", "Lambda", "G")
P45S_WORDS: Tuple[Word, ...] = ((1, 2, 4, 3), (3, 2, 4, 1), (3, 4, 1, 2), (4, 1, 3, 2), (4, 2, 3, 1))

REFERENCE_P44 = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 1, 1, 2, 3, 2, 1, 1, 3, 2, 1),
    (1, 1, 2, 3, 2, 0, 0, 0, 0, 0, 2, 3, 1, 3, 2),
    (2, 3, 1, 1, 3, 2, 3, 1, 1, 3, 0, 0, 0, 0, 3),
    (0, 0, 0, 0, 0, 0, 0, 2, 6, 2, 0, 0, 6, 2, 0),
    (0, 0, 2, 6, 2, 0, 0, 0, 0, 0, 2, 6, 0, 6, 2),
    (2, 6, 0, 0, 6, 2, 6, 0, 0, 6, 0, 0, 0, 0, 6),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 4, 1),
    (0, 0, 0, 0, 0, 1, 2, 1, 2, 4, 0, 0, 0, 0, 2),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0),
    (0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0),
    (0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2),
)

REFERENCE_P45 = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1),
    (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0),
    (0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 1),
    (0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0),
    (0, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0),
)

REFERENCE_P45S = (
    (0, 0, 1, 0, 1),
    (0, 0, 1, 0, 0),
    (0, 0, 1, 1, 0),
    (1, 1, 0, 1, 1),
    (1, 0, 0, 0, 1),
)


@dataclass(frozen=True)
class PaperMatrix:
    label: str
    char: Char
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    def det(self) -> int:
        return det(self.entries, self.char)

    def to_dict(self) -> dict:
        return {"label": self.label, "char": self.char.p, "entries": [list(r) for r in self.entries]}


def _tuple_rows(rows, columns, c: Char) -> Tuple[Tuple[int, ...], ...]:
    words = [REDUCED[k] for k in columns]
    out = []
    for point, (r, s) in rows:
        row = []
        for w in words:
            v = eval_concrete(FreePoly.word(w, c), point).coeff(r, s).value
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def assemble_paper_matrix(label: str) -> PaperMatrix:
    """Rebuild one of the three reference coefficient matrices from scratch.

    ``P44``: 15 reduced words against 15 (basis tuple, monomial) pairs over Z.
    ``P45``: the characteristic-2 analogue with 12 words and 12 pairs.
    ``P45S``: coefficients of Gamma, Psi, Delta, Lambda, g on five words, mod 2.
    """
    key = label.upper()
    if key == "P44":
        return PaperMatrix("P44", ZERO, _tuple_rows(P44_ROWS, P44_COLUMNS, ZERO))
    if key == "P45":
        c = Char(2)
        return PaperMatrix("P45", c, _tuple_rows(P45_ROWS, P45_COLUMNS, c))
    if key == "P45S":
        c = Char(2)
        rows = []
        for name in P45S_ELEMENTS:
            f = named(name, c)
            rows.append(tuple(f.coeff(w).value for w in P45S_WORDS))
        return PaperMatrix("P45S", c, tuple(rows))
    raise KeyError(f"unknown matrix label {label!r}")


REFERENCE_MATRICES = {"P44": REFERENCE_P44, "P45": REFERENCE_P45, "P45S": REFERENCE_P45S}
