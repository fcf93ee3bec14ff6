import itertools

import pytest
from hypothesis import given, strategies as st

from weylpi.exppoly import (ExpPoly, MissingSymbol, ep_add, ep_eval, ep_mul, ep_scale,
                            falling_factorial, is_zero_function, parse_exppoly as P)
from weylpi.scalar import Char


def test_ring_examples():
    assert ep_add(P("j + 2*k + 3*l"), P("j - 2*k")) == P("2*j + 3*l")
    assert ep_mul(P("i"), P("i - 1")) == P("i^2 - i")
    assert ep_scale(P("j + k"), 0).is_zero()


def test_falling_factorial_examples():
    assert falling_factorial("j", 2) == P("j^2 - j")
    assert falling_factorial("j", 0) == ExpPoly.const(1)
    assert ep_eval(falling_factorial("j", 3), {"j": 2}) == 0


def test_eval_examples():
    assert ep_eval(P("j + 2*k + 3*l"), {"j": 1, "k": 1, "l": 1}) == 6
    # (k+2l)(j+k+l-1) + l(k+l-1) at (1,1,1): 3*2 + 1*1
    c = P("k + 2*l") * P("j + k + l - 1") + P("l") * P("k + l - 1")
    assert ep_eval(c, {"j": 1, "k": 1, "l": 1}) == 7
    q = P("3*j*k^2 - 5 + i")
    assert ep_eval(q, {"i": 0, "j": 0, "k": 0}) == -5
    with pytest.raises(MissingSymbol):
        ep_eval(q, {"i": 1})


def test_zero_function_examples():
    assert is_zero_function(P("i^2 - i"), Char(2))
    assert not is_zero_function(P("i^2 - i"), Char(0))
    assert is_zero_function(P("2*j + 2*k"), Char(2))
    assert is_zero_function(P("i^3 - i"), Char(2))
    assert is_zero_function(P("i^3 - i"), Char(3))


def test_render_grlex():
    assert str(P("i + 3*j*k^2 - 4")) == "3*j*k^2 + i - 4"
    assert str(ExpPoly()) == "0"
    assert str(P("-i^2 + i")) == "-i^2 + i"


def test_canonical_equality():
    assert P("i*j + j*i") == P("2*i*j")
    assert P("i - i") == ExpPoly()


SYMS = ["a", "b", "c", "d"]


@st.composite
def exppolys(draw, nsyms=2, max_exp=5):
    syms = SYMS[:nsyms]
    terms = {}
    for _ in range(draw(st.integers(0, 5))):
        mono = tuple((s, e) for s in syms if (e := draw(st.integers(0, max_exp))))
        terms[mono] = terms.get(mono, 0) + draw(st.integers(-12, 12))
    return ExpPoly(terms)


@given(p=exppolys(3), q=exppolys(3), pt=st.tuples(*[st.integers(0, 9)] * 3))
def test_eval_is_ring_homomorphism(p, q, pt):
    point = dict(zip(SYMS, pt))
    assert ep_eval(p + q, point) == ep_eval(p, point) + ep_eval(q, point)
    assert ep_eval(p * q, point) == ep_eval(p, point) * ep_eval(q, point)


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
@given(data=st.data())
def test_zero_function_matches_brute_force(q, m, data):
    p = data.draw(exppolys(m, max_exp=7 if m <= 2 else 4))
    # pick a polynomial that is zero mod q half the time
    if data.draw(st.booleans()):
        s = SYMS[data.draw(st.integers(0, m - 1))]
        p = p * (ExpPoly.symbol(s) * _pow(ExpPoly.symbol(s), q - 1) - ExpPoly.symbol(s))
    brute = all(ep_eval(p, dict(zip(SYMS, pt))) % q == 0
                for pt in itertools.product(range(q), repeat=m))
    assert is_zero_function(p, Char(q)) == brute


def _pow(p, e):
    out = ExpPoly.const(1)
    for _ in range(e):
        out = out * p
    return out


@given(s=st.integers(0, 8))
def test_falling_factorial_vanishes_below_order(s):
    ff = falling_factorial("j", s)
    assert all(ep_eval(ff, {"j": n}) == 0 for n in range(s))
    assert ep_eval(ff, {"j": s}) == _fact(s)


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out
