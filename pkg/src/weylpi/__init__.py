"""Exact computation of polynomial identities for the subspace span{x^i y} of A_1."""

from .catalog import named, reduce_to_reduced
from .freealg import FreePoly, bracket, parse, render, standard_polynomial
from .idsolve import assemble_paper_matrix, contains, solve
from .linearize import all_linearizations, lin, lin_complete
from .scalar import Char, Scalar
from .weyl import WeylElement, normal_form, quartic_closed_form, weyl_mul
from .witt import eval_concrete, eval_symbolic, is_identity

__all__ = [
    "Char", "Scalar", "FreePoly", "WeylElement",
    "parse", "render", "bracket", "standard_polynomial",
    "normal_form", "weyl_mul", "quartic_closed_form",
    "eval_concrete", "eval_symbolic", "is_identity",
    "lin", "lin_complete", "all_linearizations",
    "named", "reduce_to_reduced",
    "solve", "contains", "assemble_paper_matrix",
]
