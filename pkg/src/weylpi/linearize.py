"""Partial and complete linearization of multihomogeneous free polynomials.

Variable numbering: linearizing ``x_i`` along a composition with ``k`` parts
puts the new variables at ``x_i, ..., x_{i+k-1}`` and shifts every later
variable up by ``k - 1``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterator, List, Sequence, Tuple

from .freealg import FreePoly, NotMultihomogeneous, Word
from .scalar import Scalar

Composition = Tuple[int, ...]


class DegreeMismatch(ValueError):
    pass


def compositions(n: int) -> List[Composition]:
    """All ordered compositions of ``n`` into positive parts."""
    if n == 0:
        return [()]
    out = []
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def partitions(n: int, largest: int = None) -> List[Composition]:
    """Compositions with non-increasing parts: one per part-multiset."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _distributions(gamma: Composition, base: int) -> List[Tuple[int, ...]]:
    letters = []
    for t, g in enumerate(gamma):
        letters.extend([base + t] * g)
    return sorted(set(permutations(letters)))


def lin(f: FreePoly, var: int, gamma: Sequence[int]) -> FreePoly:
    """Partial linearization of ``f`` in ``x_var`` of multidegree ``gamma``."""
    gamma = tuple(gamma)
    if not gamma or any(g < 1 for g in gamma):
        raise ValueError(f"composition parts must be positive: {gamma}")
    if not f:
        return f
    d = f.multidegree()
    deg = d[var - 1] if var <= len(d) else 0
    if sum(gamma) != deg:
        raise DegreeMismatch(f"|{gamma}| = {sum(gamma)} but deg_x{var} = {deg}")
    k = len(gamma)
    dists = _distributions(gamma, var)
    out: Dict[Word, Scalar] = {}
    for w, c in f.terms.items():
        shifted = [v + k - 1 if v > var else v for v in w]
        slots = [n for n, v in enumerate(w) if v == var]
        for dist in dists:
            nw = list(shifted)
            for pos, letter in zip(slots, dist):
                nw[pos] = letter
            nw = tuple(nw)
            prev = out.get(nw)
            out[nw] = c if prev is None else prev + c
    return FreePoly._raw(out, f.char)


def lin_multi(f: FreePoly, gammas: Sequence[Sequence[int]]) -> FreePoly:
    """Apply one composition per original variable (empty for degree 0)."""
    if not f:
        return f
    d = f.multidegree()
    if len(gammas) != len(d):
        raise DegreeMismatch(f"{len(gammas)} compositions for {len(d)} variables")
    out = f
    # last variable first, so earlier indices are untouched by the shifts
    for v in range(len(d), 0, -1):
        g = tuple(gammas[v - 1])
        if d[v - 1] == 0:
            if g:
                raise DegreeMismatch(f"x{v} does not occur")
            continue
        if len(g) > 1:
            out = lin(out, v, g)
        elif g != (d[v - 1],):
            raise DegreeMismatch(f"composition {g} of deg_x{v} = {d[v - 1]}")
    return out


def lin_complete(f: FreePoly) -> FreePoly:
    if not f:
        return f
    d = f.multidegree()
    return lin_multi(f, [(1,) * k for k in d])


def linearization_family(d: Sequence[int], dedup: bool = True) -> List[Tuple[Composition, ...]]:
    """Composition tuples, one per variable, indexing the partial linearizations.

    With ``dedup`` only non-increasing compositions are kept: reordering the
    parts of one composition just renames variables.
    """
    pick = partitions if dedup else compositions
    families: List[Tuple[Composition, ...]] = [()]
    for k in d:
        opts = pick(k) if k else [()]
        families = [fam + (g,) for fam in families for g in opts]
    return families


def iter_linearizations(f: FreePoly, dedup: bool = True) -> Iterator[Tuple[Tuple[Composition, ...], FreePoly]]:
    if not f.is_multihomogeneous():
        raise NotMultihomogeneous("linearization needs a multihomogeneous polynomial")
    if not f:
        return
    d = f.multidegree()
    for gammas in linearization_family(d, dedup):
        yield gammas, lin_multi(f, gammas)


def all_linearizations(f: FreePoly, dedup: bool = True) -> List[FreePoly]:
    """``f`` together with all iterated partial linearizations."""
    return [g for _, g in iter_linearizations(f, dedup)]
