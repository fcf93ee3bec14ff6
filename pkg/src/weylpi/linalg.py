"""Exact linear algebra over Q (fraction-free Bareiss) and over F_p."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

from .scalar import Char, Scalar, ZERO

Matrix = List[List]


def _raw_rows(rows: Sequence[Sequence], c: Char) -> List[List]:
    out = []
    for row in rows:
        out.append([x.value if isinstance(x, Scalar) else c.reduce(x) for x in row])
    return out


def _bareiss_echelon(rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form of an integer matrix; returns (rows, pivot columns)."""
    a = [list(r) for r in rows]
    m = len(a)
    prev = 1
    r = 0
    pivots = []
    for col in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for i in range(r + 1, m):
            q = a[i][col]
            row_i = a[i]
            row_r = a[r]
            for j in range(col + 1, ncols):
                num = p * row_i[j] - q * row_r[j]
                quo, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = quo
            row_i[col] = 0
        # rows above r untouched; rows below scaled consistently
        prev = p
        pivots.append(col)
        r += 1
    return a[:r], pivots


def rref(rows: Sequence[Sequence], ncols: int, c: Char = ZERO) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form as raw values (Fraction or residues) and pivots.

    Pivot choice is deterministic: the first row with a nonzero entry in the
    leftmost remaining column.
    """
    raw = _raw_rows(rows, c)
    if c.p == 0:
        ints = []
        for row in raw:
            den = lcm(*(x.denominator for x in row)) if row else 1
            ints.append([int(x * den) for x in row])
        ech, pivots = _bareiss_echelon(ints, ncols)
        red = [[Fraction(x) for x in row] for row in ech]
        for k in range(len(pivots) - 1, -1, -1):
            col = pivots[k]
            p = red[k][col]
            red[k] = [x / p for x in red[k]]
            for i in range(k):
                q = red[i][col]
                if q:
                    red[i] = [x - q * y for x, y in zip(red[i], red[k])]
        return red, pivots
    p = c.p
    a = [list(r) for r in raw]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                q = a[i][col]
                a[i] = [(x - q * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int = None, c: Char = ZERO) -> int:
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return len(rref(rows, ncols, c)[1])


def nullspace(rows: Sequence[Sequence], ncols: int = None, c: Char = ZERO) -> List[List[Scalar]]:
    """Basis of ``{v : M v = 0}``, one vector per free column.

    Each vector has a 1 in its free column and 0 in the other free columns, so
    the basis depends only on the solution space.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows, ncols, c)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for k, col in enumerate(pivots):
            v[col] = -red[k][f]
        basis.append([Scalar(x, c) for x in v])
    return basis


def in_span(basis: Sequence[Sequence], v: Sequence, c: Char = ZERO) -> bool:
    n = len(v)
    return rank(list(basis) + [v], n, c) == rank(list(basis), n, c) if basis else all(
        (x.value if isinstance(x, Scalar) else c.reduce(x)) == 0 for x in v)


def det(rows: Sequence[Sequence[int]], c: Char = ZERO):
    """Determinant: exact integer (Bareiss) for integer input over Q, residue mod p otherwise."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if c.p:
        a = _raw_rows(rows, c)
        p = c.p
        d = 1
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col]), None)
            if piv is None:
                return 0
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                d = -d
            d = d * a[col][col] % p
            inv = pow(a[col][col], -1, p)
            for i in range(col + 1, n):
                q = a[i][col] * inv % p
                if q:
                    a[i] = [(x - q * y) % p for x, y in zip(a[i], a[col])]
        return d % p
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
