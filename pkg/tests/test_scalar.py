from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weylpi.scalar import (Char, CharMismatch, NotPrime, Scalar, scalar_add, scalar_from_integer,
                           scalar_inv, scalar_mul, scalar_neg)

CHARS = [Char(0), Char(2), Char(3), Char(5)]


def test_from_integer_examples():
    assert scalar_from_integer(5, Char(2)).value == 1
    assert scalar_from_integer(0, Char(0)).value == Fraction(0, 1)
    # -64 = (-22) * 3 + 2
    assert scalar_from_integer(-64, Char(3)).value == 2


def test_inverse_and_sum():
    assert scalar_inv(Scalar(2, Char(5))).value == 3
    assert scalar_add(Scalar(Fraction(1, 2)), Scalar(Fraction(1, 3))) == Scalar(Fraction(5, 6))
    assert scalar_neg(Scalar(1, Char(3))).value == 2


def test_char_validation():
    with pytest.raises(NotPrime):
        Char(4)
    with pytest.raises(NotPrime):
        Char.prime(0)
    assert Char(0) < Char(2) < Char(3)
    assert Char.zero() == Char(0) and Char.prime(7).p == 7


def test_mismatch_and_division_by_zero():
    with pytest.raises(CharMismatch):
        Scalar(1, Char(2)) + Scalar(1, Char(3))
    with pytest.raises(ZeroDivisionError):
        Scalar(0, Char(5)).inv()
    with pytest.raises(ZeroDivisionError):
        Scalar(3, Char(3)).inv()


def test_rendering():
    assert str(Scalar(Fraction(-3, 6))) == "-1/2"
    assert str(Scalar(4)) == "4"
    assert str(Scalar(7, Char(5))) == "2 (mod 5)"


def test_lowest_terms():
    s = Scalar(Fraction(4, -6))
    assert s.value.numerator == -2 and s.value.denominator == 3


ints = st.integers(-10**6, 10**6)
nonzero_rat = st.fractions(max_denominator=50)


@pytest.mark.parametrize("c", CHARS, ids=repr)
@given(a=ints, b=ints, d=ints)
def test_field_axioms(c, a, b, d):
    x, y, z = Scalar(a, c), Scalar(b, c), Scalar(d, c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == Scalar(0, c)
    if x:
        assert scalar_mul(x, x.inv()) == Scalar(1, c)


@given(a=nonzero_rat, b=nonzero_rat)
def test_rational_inverses(a, b):
    x = Scalar(a)
    if x:
        assert x * x.inv() == Scalar(1)
    assert (Scalar(a) + Scalar(b)).value == a + b


@pytest.mark.parametrize("c", CHARS, ids=repr)
@given(a=ints, b=ints)
def test_from_integer_is_ring_homomorphism(c, a, b):
    f = lambda n: scalar_from_integer(n, c)
    assert f(a + b) == f(a) + f(b)
    assert f(a * b) == f(a) * f(b)
