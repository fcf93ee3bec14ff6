"""Exact field arithmetic over Q and over prime fields F_p.

Every :class:`Scalar` carries its :class:`Char`; mixing characteristics raises
:class:`CharMismatch`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union


class CharMismatch(ValueError):
    """Raised when operands live in fields of different characteristic."""


class NotPrime(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@total_ordering
class Char:
    """Characteristic descriptor: ``Char(0)`` for Q, ``Char(p)`` for F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        p = int(p)
        if p != 0 and not is_prime(p):
            raise NotPrime(f"characteristic must be 0 or a prime, got {p}")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Char is immutable")

    @classmethod
    def zero(cls) -> "Char":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Char":
        if p == 0:
            raise NotPrime("Prime(0) is not a characteristic")
        return cls(p)

    @property
    def is_zero(self) -> bool:
        return self.p == 0

    def __eq__(self, other):
        if isinstance(other, Char):
            return self.p == other.p
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, Char):
            return NotImplemented
        return self.p < other.p

    def __hash__(self):
        return hash(("Char", self.p))

    def __repr__(self):
        return "Zero" if self.p == 0 else f"Prime({self.p})"

    # -- raw value helpers used by the hot loops elsewhere ------------------
    def reduce(self, n: Union[int, Fraction]) -> Union[int, Fraction]:
        """Canonical raw value of an integer or rational in this field."""
        if self.p == 0:
            return Fraction(n)
        if isinstance(n, Fraction):
            num = n.numerator % self.p
            den = n.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {n} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return n % self.p


ZERO = Char(0)


class Scalar:
    """An element of Q or F_p.

    ``value`` is a :class:`fractions.Fraction` in characteristic 0 and an int
    in ``[0, p)`` otherwise.
    """

    __slots__ = ("char", "value")

    def __init__(self, value, char: Char = ZERO):
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "value", char.reduce(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, value, char: Char) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "char", char)
        object.__setattr__(s, "value", value)
        return s

    def _check(self, other: "Scalar") -> None:
        if self.char != other.char:
            raise CharMismatch(f"{self.char} vs {other.char}")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other, self.char)
        raise TypeError(f"cannot combine Scalar with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        v = self.value + o.value
        if self.char.p:
            v %= self.char.p
        return Scalar._raw(v, self.char)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        if self.char.p:
            return Scalar._raw(-self.value % self.char.p, self.char)
        return Scalar._raw(-self.value, self.char)

    def __mul__(self, other):
        o = self._coerce(other)
        v = self.value * o.value
        if self.char.p:
            v %= self.char.p
        return Scalar._raw(v, self.char)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.char.p:
            return Scalar._raw(pow(self.value, -1, self.char.p), self.char)
        return Scalar._raw(1 / self.value, self.char)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.char == other.char and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.char.reduce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.char.p, self.value))

    def __repr__(self):
        return f"Scalar({self}, {self.char!r})"

    def __str__(self):
        if self.char.p:
            return f"{self.value} (mod {self.char.p})"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def plain(self) -> str:
        """Rendering without the ``(mod p)`` suffix, for embedding in formulas."""
        if self.char.p:
            return str(self.value)
        return str(self)


def scalar_from_integer(n: int, c: Char) -> Scalar:
    return Scalar(n, c)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    return -a


def scalar_inv(a: Scalar) -> Scalar:
    return a.inv()
