import itertools

import pytest
from hypothesis import given, strategies as st

from weylpi.freealg import (DuplicateVariable, ExprSyntaxError, FreePoly, NotMultihomogeneous,
                            UnknownFunction, bracket, homogeneous_component, mdeg, parse,
                            perm_sign, render, standard_polynomial, words_of_mdeg)
from weylpi.scalar import Char

x1, x2, x3, x4 = (FreePoly.var(i) for i in range(1, 5))


def test_product_and_sum_examples():
    f = (x1 + x2) * (x1 - x2)
    assert f == parse("x1^2 - x1*x2 + x2*x1 - x2^2")
    assert render(f) == "x1^2 - x1*x2 + x2*x1 - x2^2"
    assert (x1 * x2 - x2 * x1) == bracket(x1, x2)
    assert FreePoly.one() * x3 == x3 and x3 * 0 == 0


def test_double_bracket_has_eight_words():
    f = bracket(bracket(x1, x2), bracket(x3, x4))
    assert len(f) == 8
    expected = {}
    for (a, b, sab), (c, d, scd) in itertools.product([(1, 2, 1), (2, 1, -1)], [(3, 4, 1), (4, 3, -1)]):
        expected[(a, b, c, d)] = sab * scd
        expected[(c, d, a, b)] = -sab * scd
    assert {w: int(s.value) for w, s in f} == expected


def test_standard_polynomials():
    assert standard_polynomial(2) == bracket(x1, x2)
    st3 = standard_polynomial(3)
    assert len(st3) == 6
    for perm in itertools.permutations((1, 2, 3)):
        assert st3.coeff(perm) == perm_sign([p - 1 for p in perm])
    assert parse("St3(x1,x2,x3)") == st3
    with pytest.raises(DuplicateVariable):
        standard_polynomial(3, [1, 2, 1])


def test_characteristic_two_collapses_signs():
    f = parse("x1*x2 - x2*x1", Char(2))
    assert f == parse("x1*x2 + x2*x1", Char(2))
    assert render(parse("3*x1", Char(2))) == "x1"
    assert parse("2*x1", Char(2)) == 0


def test_multidegree_helpers():
    f = parse("x1^2*x2 + x2*x1^2 - 5*x3")
    assert mdeg((1, 1, 2)) == (2, 1)
    assert set(mdeg(f)) == {(2, 1, 0), (0, 0, 1)}
    assert not f.is_multihomogeneous()
    with pytest.raises(NotMultihomogeneous):
        f.multidegree()
    assert homogeneous_component(f, (2, 1)) == parse("x1^2*x2 + x2*x1^2")
    assert words_of_mdeg((2, 1)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert len(words_of_mdeg((2, 1, 1))) == 12


def test_rational_coefficients_round_trip():
    f = parse("1/2*x1*x2 - 3/4*x2")
    # shorter words first
    assert render(f) == "-3/4*x2 + 1/2*x1*x2"
    assert parse(render(f)) == f


@pytest.mark.parametrize("text,pos", [("x1 + ", 5), ("x1 * (x2", 8), ("x0", 1), ("x1 $ x2", 3)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text)
    assert info.value.pos == pos


def test_unknown_function_and_arity():
    with pytest.raises(UnknownFunction):
        parse("Foo(x1,x2)")
    with pytest.raises(ExprSyntaxError):
        parse("St3(x1,x2)")
    # St over arbitrary arguments is alternating, so a repeat gives 0
    assert parse("St2(x1,x1)") == 0


def test_substitute_and_rename():
    f = bracket(x1, x2)
    assert f.substitute({2: x1}) == 0
    assert f.substitute({1: x1 * x1}) == parse("x1^2*x2 - x2*x1^2")
    assert f.rename({1: 2, 2: 1}) == -f


@pytest.mark.parametrize("n", [2, 3, 4])
def test_standard_polynomial_alternates(n):
    st_n = standard_polynomial(n)
    for a, b in itertools.combinations(range(1, n + 1), 2):
        assert st_n.rename({a: b, b: a}) == -st_n
    # repeating a variable kills it
    assert st_n.substitute({2: FreePoly.var(1)}) == 0


@st.composite
def polys(draw, nvars=3, max_len=4, char=Char(0)):
    terms = {}
    for _ in range(draw(st.integers(0, 5))):
        w = tuple(draw(st.lists(st.integers(1, nvars), max_size=max_len)))
        if char.p:
            terms[w] = draw(st.integers(-5, 5))
        else:
            terms[w] = draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
    return FreePoly(terms, char)


@given(f=polys())
def test_parse_render_round_trip(f):
    assert parse(render(f)) == f


@given(f=polys(char=Char(3)))
def test_parse_render_round_trip_mod_p(f):
    assert parse(render(f), Char(3)) == f


@given(f=polys(max_len=2), g=polys(max_len=2), h=polys(max_len=2))
def test_ring_laws_and_jacobi(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    jac = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))
    assert jac == 0


@given(f=polys())
def test_components_sum_to_polynomial(f):
    comps = f.components()
    total = FreePoly.zero()
    for d, part in comps.items():
        assert part.components(len(d)) == {d: part}
        total = total + part
    assert total == f
