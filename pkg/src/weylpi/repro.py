"""Reproduction table: every reference result recomputed and compared.

Used by ``weylpi repro``; golden JSON reports live in ``weylpi/golden``.
"""

from __future__ import annotations

import itertools
import json
import random
from importlib import resources
from pathlib import Path
from typing import Callable, List, Tuple

from .catalog import (alternating_st3_sum, named, st3_combination_for_gamma_lambda)
from .exppoly import ExpPoly, is_zero_function
from .freealg import FreePoly, parse, render, standard_polynomial
from .idsolve import (REFERENCE_MATRICES, SolveReport, assemble_paper_matrix, contains,
                      solve, span_rank)
from .linearize import lin
from .scalar import Char, Scalar, ZERO
from .weyl import (NegativeExponentWithNonzeroCoeff, WeylElement, quartic_closed_form, substitute, symbolic_basis_product,
                   weyl_commutator, weyl_product)
from .witt import eval_concrete, is_identity

F2, F3, F5 = Char(2), Char(3), Char(5)

SOLVE_CASES = ((1, 1, 1), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
GOLDEN_CHARS = (ZERO, F2)
MATRIX_LABELS = ("P44", "P45", "P45S")

Check = Callable[[], Tuple[bool, str]]


def _quartic() -> Tuple[bool, str]:
    bad = 0
    for c in (ZERO, F2, F3):
        for i, j, k, l in itertools.product(range(7), repeat=4):
            chain = weyl_product((WeylElement.basis(n, c) for n in (i, j, k, l)), c)
            bad += chain != quartic_closed_form(i, j, k, l, c)
    return bad == 0, f"{3 * 7 ** 4} tuples, {bad} mismatches"


def _st3_span() -> Tuple[bool, str]:
    details = []
    ok = True
    for c in (ZERO, F2):
        r = solve((1, 1, 1), c)
        good = r.dimension == 1 and contains(r, standard_polynomial(3, None, c))
        ok &= good
        details.append(f"{c}: dim {r.dimension}")
    return ok, ", ".join(details)


def _deg31() -> Tuple[bool, str]:
    dims = {c.p: solve((3, 1), c).dimension for c in (ZERO, F2, F3, F5)}
    return all(d == 0 for d in dims.values()), f"dims {dims}"


def _deg22() -> Tuple[bool, str]:
    out = {}
    ok = True
    for c in (ZERO, F2, F3, F5):
        r = solve((2, 2), c)
        out[c.p] = r.dimension
        ok &= r.dimension == 1 and contains(r, named("Phi22", c))
    return ok, f"dims {out}"


def _deg211() -> Tuple[bool, str]:
    r0 = solve((2, 1, 1), ZERO)
    l0 = [named(n) for n in ("St3_left_211", "St3_right_211", "Phi211")]
    r2 = solve((2, 1, 1), F2)
    l2 = [named(n, F2) for n in ("St3_left_211", "St3_right_211", "Psi211", "CommSq211")]
    ok = (r0.dimension == 3 and all(contains(r0, f) for f in l0) and span_rank(l0) == 3
          and r2.dimension == 4 and all(contains(r2, f) for f in l2) and span_rank(l2) == 4)
    return ok, f"dim {r0.dimension} (char 0), {r2.dimension} (char 2)"


def _deg1111() -> Tuple[bool, str]:
    l0 = [named(n) for n in ("Gamma", "PhiLin", "St3_left_1", "St3_left_2", "St3_left_3",
                             "St3_left_4", "St3_right_1", "St3_right_2", "St3_right_3")]
    l2 = [named(n, F2) for n in ("Gamma", "Psi", "Delta", "Lambda", "St3_left_1", "St3_left_2",
                                 "St3_left_3", "St3_left_4", "St3_right_1", "St3_right_2",
                                 "St3_right_3", "CommSq1324")]
    r0 = solve((1, 1, 1, 1), ZERO)
    r2 = solve((1, 1, 1, 1), F2)
    ok = (r0.dimension == 9 and all(contains(r0, f) for f in l0) and span_rank(l0) == 9
          and r2.dimension == 12 and all(contains(r2, f) for f in l2) and span_rank(l2) == 12)
    return ok, f"dim {r0.dimension} (char 0), {r2.dimension} (char 2)"


def _matrices() -> Tuple[bool, str]:
    p44 = assemble_paper_matrix("P44")
    p45 = assemble_paper_matrix("P45")
    p45s = assemble_paper_matrix("P45S")
    ok = (p44.entries == REFERENCE_MATRICES["P44"] and p44.det() == -64
          and p45.entries == REFERENCE_MATRICES["P45"] and p45.det() == 1
          and p45s.entries == REFERENCE_MATRICES["P45S"] and p45s.det() != 0)
    return ok, f"det P44 = {p44.det()}, det P45 = {p45.det()} mod 2, det P45S = {p45s.det()} mod 2"


def _st3_relations() -> Tuple[bool, str]:
    lhs = named("Gamma").scale(4) - named("Lambda").scale(2)
    ok1 = lhs == st3_combination_for_gamma_lambda()
    ok2 = alternating_st3_sum() == 0
    return ok1 and ok2, f"4Gamma-2Lambda relation {ok1}, alternating sum zero {ok2}"


def _verify() -> Tuple[bool, str]:
    ok = True
    for name in ("Phi22", "Phi211", "PhiLin"):
        for c in (ZERO, F2, F3, F5):
            ok &= is_identity(named(name, c)).is_identity
    for name in ("Psi211", "Psi", "PsiLin", "CommSq", "Delta", "Gamma", "Lambda"):
        ok &= is_identity(named(name, F2)).is_identity
    delta = is_identity(named("Delta"))
    ok &= not delta.is_identity and delta.witness.recheck()
    for c in (ZERO, F2, F3, F5):
        rep = is_identity(named("St2", c))
        ok &= not rep.is_identity and rep.witness.recheck()
    return ok, "identities and witnesses as expected" if ok else "mismatch"


def _eq14() -> Tuple[bool, str]:
    target = WeylElement.monomial(2, 1, F2)
    vals = []
    for text in ("x1^2*x2^2 - x2^2*x1^2", "x1*x2*x1*x2 + x2*x1*x2*x1"):
        g = lin(parse(text, F2), 2, (1, 1))
        vals.append(eval_concrete(g, (1, 1, 2)))
    return all(v == target for v in vals), ", ".join(str(v) for v in vals)


def _properties() -> Tuple[bool, str]:
    rng = random.Random(20240226)
    failures = []
    # field axioms
    for c in (ZERO, F2, F3, F5):
        for _ in range(50):
            a, b, d = (Scalar(rng.randint(-20, 20), c) for _ in range(3))
            if (a + b) * d != a * d + b * d or (a * b) * d != a * (b * d):
                failures.append(f"field axioms {c}")
    # Frobenius criterion against brute force
    for p in (2, 3, 5):
        for _ in range(20):
            f = ExpPoly()
            for _ in range(3):
                mono = ExpPoly.const(rng.randint(-5, 5))
                for s in ("i", "j"):
                    for _ in range(rng.randint(0, 4)):
                        mono = mono * ExpPoly.symbol(s)
                f = f + mono
            brute = all(f.eval({"i": u, "j": v}) % p == 0 for u in range(p) for v in range(p))
            if brute != is_zero_function(f, Char(p)):
                failures.append(f"is_zero_function p={p}")
    # St_N alternation and parse/render round trip
    for n in (2, 3, 4):
        st = standard_polynomial(n)
        for a, b in itertools.combinations(range(1, n + 1), 2):
            if st.rename({a: b, b: a}) != -st:
                failures.append(f"St{n} alternation")
    for _ in range(30):
        f = FreePoly({tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4))): rng.randint(-4, 4)
                      for _ in range(4)})
        if parse(render(f)) != f:
            failures.append("round trip")
    # centre of A_1 in characteristic p
    for p in (2, 3, 5):
        c = Char(p)
        if weyl_commutator(WeylElement.monomial(p, 0, c), WeylElement.monomial(0, 1, c)) \
                or weyl_commutator(WeylElement.monomial(0, p, c), WeylElement.monomial(1, 0, c)):
            failures.append(f"centre p={p}")
    # truncation soundness and substitution homomorphism on short products
    for n in range(1, 5):
        names = [f"i{k}" for k in range(1, n + 1)]
        sym = symbolic_basis_product(names)
        for pt in itertools.product(range(4), repeat=n):
            conc = weyl_product(WeylElement.basis(i) for i in pt)
            if substitute(sym, dict(zip(names, pt))) != conc:
                failures.append(f"substitution n={n}")
    # truncation soundness for up to six factors: exponents are sum(point) + offset,
    # so only points with a small index sum can reach a negative exponent
    for n in range(1, 7):
        names = [f"i{k}" for k in range(1, n + 1)]
        sym = symbolic_basis_product(names)
        worst = -min(off for ((_, off), _t) in sym.terms)
        for pt in itertools.product(range(7), repeat=n):
            if sum(pt) < worst:
                try:
                    substitute(sym, dict(zip(names, pt)))
                except NegativeExponentWithNonzeroCoeff:
                    failures.append(f"truncation n={n}")
    # multinomial substitution for linearizations
    f = named("Phi22")
    g = lin(f, 1, (1, 1))
    for i, j in itertools.product(range(4), repeat=2):
        if eval_concrete(g, (i, i, j)) != eval_concrete(f, (i, j)) * 2:
            failures.append("multinomial")
    return not failures, "all sampled properties hold" if not failures else ", ".join(sorted(set(failures)))


CHECKS: List[Tuple[str, Check]] = [
    ("quartic closed form = product chain on {0..6}^4 (Q, F2, F3)", _quartic),
    ("degree-3 identities spanned by St3 (Q, F2)", _st3_span),
    ("no (3,1) identities (Q, F2, F3, F5)", _deg31),
    ("(2,2) identities = span Phi22 (Q, F2, F3, F5)", _deg22),
    ("(2,1,1): dim 3 over Q, dim 4 over F2, listed bases", _deg211),
    ("(1,1,1,1): dim 9 over Q, dim 12 over F2, listed bases", _deg1111),
    ("reference matrices and determinants", _matrices),
    ("St3 relations among Gamma, Lambda, Phi_lin", _st3_relations),
    ("identity verdicts and witnesses", _verify),
    ("lin_{x2}^{(1,1)} values at (c1, c1, c2) over F2", _eq14),
    ("property samples (field, Frobenius, St_N, parser, centre, truncation, substitution)", _properties),
]


def golden_dir() -> Path:
    return Path(str(resources.files("weylpi") / "golden"))


def golden_name(d, c: Char) -> str:
    return f"solve_{'-'.join(map(str, d))}_p{c.p}.json"


def write_goldens(directory: Path = None) -> List[Path]:
    directory = golden_dir() if directory is None else Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for d in SOLVE_CASES:
        for c in GOLDEN_CHARS:
            path = directory / golden_name(d, c)
            path.write_text(solve(d, c).to_json() + "\n")
            written.append(path)
    for label in MATRIX_LABELS:
        path = directory / f"matrix_{label}.json"
        path.write_text(json.dumps(assemble_paper_matrix(label).to_dict()) + "\n")
        written.append(path)
    return written


def _goldens() -> Tuple[bool, str]:
    directory = golden_dir()
    bad = []
    for d in SOLVE_CASES:
        for c in GOLDEN_CHARS:
            data = json.loads((directory / golden_name(d, c)).read_text())
            if SolveReport.from_dict(data) != solve(d, c):
                bad.append(golden_name(d, c))
    for label in MATRIX_LABELS:
        data = json.loads((directory / f"matrix_{label}.json").read_text())
        if data != assemble_paper_matrix(label).to_dict():
            bad.append(label)
    return not bad, "all golden files match" if not bad else f"differ: {bad}"


CHECKS.append(("golden reports unchanged", _goldens))


def run(out=print) -> bool:
    all_ok = True
    for n, (title, check) in enumerate(CHECKS, start=1):
        ok, detail = check()
        all_ok &= ok
        out(f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {title}: {detail}")
    return all_ok
