"""The free unital associative algebra F<x1, x2, ...>.

A word is a tuple of positive variable indices; ``()`` is the unit.  A
:class:`FreePoly` is a finite linear combination of words with coefficients in
a fixed characteristic.
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .scalar import Char, CharMismatch, Scalar, ZERO

Word = Tuple[int, ...]
MultiDegree = Tuple[int, ...]


class DuplicateVariable(ValueError):
    pass


class NotMultihomogeneous(ValueError):
    pass


def word_key(w: Word):
    """Length-then-lexicographic order on words."""
    return (len(w), w)


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    n = len(perm)
    for a in range(n):
        for b in range(a + 1, n):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def trim(d: Sequence[int]) -> MultiDegree:
    d = list(d)
    while d and d[-1] == 0:
        d.pop()
    return tuple(d)


def word_mdeg(w: Word, m: int = None) -> MultiDegree:
    n = max(w, default=0) if m is None else m
    out = [0] * n
    for letter in w:
        out[letter - 1] += 1
    return tuple(out)


class FreePoly:
    __slots__ = ("char", "terms")

    def __init__(self, terms: Mapping[Word, object] = None, char: Char = ZERO):
        clean: Dict[Word, Scalar] = {}
        for w, c in (terms or {}).items():
            if not isinstance(c, Scalar):
                c = Scalar(c, char)
            elif c.char != char:
                raise CharMismatch(f"{c.char} coefficient in {char} polynomial")
            w = tuple(w)
            if any(v < 1 for v in w):
                raise ValueError(f"variable indices are 1-based: {w}")
            prev = clean.get(w)
            clean[w] = c if prev is None else prev + c
        clean = {w: c for w, c in clean.items() if c}
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FreePoly is immutable")

    @classmethod
    def _raw(cls, terms: Dict[Word, Scalar], char: Char) -> "FreePoly":
        f = object.__new__(cls)
        object.__setattr__(f, "char", char)
        object.__setattr__(f, "terms", {w: c for w, c in terms.items() if c})
        return f

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, char: Char = ZERO) -> "FreePoly":
        return cls._raw({}, char)

    @classmethod
    def one(cls, char: Char = ZERO) -> "FreePoly":
        return cls({(): 1}, char)

    @classmethod
    def var(cls, i: int, char: Char = ZERO) -> "FreePoly":
        return cls({(i,): 1}, char)

    @classmethod
    def word(cls, w: Iterable[int], char: Char = ZERO, coeff=1) -> "FreePoly":
        return cls({tuple(w): coeff}, char)

    # -- ring structure -----------------------------------------------------
    def _check(self, other: "FreePoly") -> None:
        if not isinstance(other, FreePoly):
            raise TypeError(f"expected FreePoly, got {type(other).__name__}")
        if other.char != self.char:
            raise CharMismatch(f"{self.char} vs {other.char}")

    def _lift(self, other) -> "FreePoly":
        if isinstance(other, FreePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Scalar)):
            return FreePoly({(): other}, self.char)
        raise TypeError(f"cannot combine FreePoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            out[w] = c if prev is None else prev + c
        return FreePoly._raw(out, self.char)

    __radd__ = __add__

    def __neg__(self):
        return FreePoly._raw({w: -c for w, c in self.terms.items()}, self.char)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        other = self._lift(other)
        out: Dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                prev = out.get(w)
                out[w] = c1 * c2 if prev is None else prev + c1 * c2
        return FreePoly._raw(out, self.char)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return self._lift(other) * self

    def scale(self, s) -> "FreePoly":
        if not isinstance(s, Scalar):
            s = Scalar(s, self.char)
        elif s.char != self.char:
            raise CharMismatch(f"{s.char} vs {self.char}")
        return FreePoly._raw({w: c * s for w, c in self.terms.items()}, self.char)

    def __pow__(self, n: int):
        out = FreePoly.one(self.char)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self.char == other.char and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.char, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Word, Scalar]]:
        return iter(self.sorted_terms())

    # -- inspection ---------------------------------------------------------
    def sorted_terms(self) -> List[Tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def coeff(self, w: Iterable[int]) -> Scalar:
        return self.terms.get(tuple(w), Scalar(0, self.char))

    @property
    def nvars(self) -> int:
        return max((max(w, default=0) for w in self.terms), default=0)

    def support(self) -> List[Word]:
        return sorted(self.terms, key=word_key)

    def with_char(self, c: Char) -> "FreePoly":
        """Image under the canonical map; only meaningful from char 0 with
        coefficients whose denominators are invertible in ``c``."""
        return FreePoly({w: s.value for w, s in self.terms.items()}, c)

    def components(self, m: int = None) -> Dict[MultiDegree, "FreePoly"]:
        n = self.nvars if m is None else m
        buckets: Dict[MultiDegree, Dict[Word, Scalar]] = {}
        for w, c in self.terms.items():
            buckets.setdefault(word_mdeg(w, n), {})[w] = c
        return {d: FreePoly._raw(t, self.char) for d, t in buckets.items()}

    def is_multihomogeneous(self) -> bool:
        return len(self.components()) <= 1

    def multidegree(self) -> MultiDegree:
        comps = self.components()
        if len(comps) != 1:
            raise NotMultihomogeneous(f"{len(comps)} multihomogeneous components")
        return next(iter(comps))

    def substitute(self, images: Mapping[int, "FreePoly"]) -> "FreePoly":
        """Replace each variable ``x_v`` by ``images[v]`` (identity if absent)."""
        cache: Dict[int, FreePoly] = {}

        def image(v: int) -> FreePoly:
            if v not in cache:
                g = images.get(v)
                cache[v] = FreePoly.var(v, self.char) if g is None else self._lift(g)
            return cache[v]

        out = FreePoly.zero(self.char)
        for w, c in self.terms.items():
            term = FreePoly._raw({(): c}, self.char)
            for v in w:
                term = term * image(v)
            out = out + term
        return out

    def rename(self, mapping: Mapping[int, int]) -> "FreePoly":
        """Relabel variables by an index map (identity on missing keys)."""
        out: Dict[Word, Scalar] = {}
        for w, c in self.terms.items():
            nw = tuple(mapping.get(v, v) for v in w)
            prev = out.get(nw)
            out[nw] = c if prev is None else prev + c
        return FreePoly._raw(out, self.char)

    def __repr__(self):
        return f"FreePoly({render(self)!r}, {self.char!r})"

    def __str__(self):
        return render(self)


def fp_add(f: FreePoly, g: FreePoly) -> FreePoly:
    return f + g


def fp_mul(f: FreePoly, g: FreePoly) -> FreePoly:
    return f * g


def fp_scale(f: FreePoly, s) -> FreePoly:
    return f.scale(s)


def bracket(f: FreePoly, g: FreePoly) -> FreePoly:
    f._check(g)
    return f * g - g * f


def standard_of(args: Sequence[FreePoly]) -> FreePoly:
    """Alternating sum of products of ``args`` over all orderings."""
    if not args:
        raise ValueError("St_0 is undefined")
    char = args[0].char
    out = FreePoly.zero(char)
    for perm in permutations(range(len(args))):
        term = FreePoly.one(char)
        for k in perm:
            term = term * args[k]
        out = out + term if perm_sign(perm) > 0 else out - term
    return out


def standard_polynomial(n: int, variables: Sequence[int] = None, c: Char = ZERO) -> FreePoly:
    """St_n(x_{v1}, ..., x_{vn}); defaults to x1..xn."""
    if n < 1:
        raise ValueError("N must be positive")
    variables = list(range(1, n + 1)) if variables is None else list(variables)
    if len(variables) != n:
        raise ValueError(f"St{n} needs {n} variables, got {len(variables)}")
    if len(set(variables)) != n:
        raise DuplicateVariable(f"repeated variable in {variables}")
    out = {}
    for perm in permutations(range(n)):
        out[tuple(variables[k] for k in perm)] = perm_sign(perm)
    return FreePoly(out, c)


def mdeg(obj, m: int = None):
    """Multidegree of a word, or {multidegree: component} for a FreePoly."""
    if isinstance(obj, FreePoly):
        return obj.components(m)
    return word_mdeg(tuple(obj), m)


def homogeneous_component(f: FreePoly, d: Sequence[int]) -> FreePoly:
    target = trim(d)
    out = {w: c for w, c in f.terms.items() if trim(word_mdeg(w)) == target}
    return FreePoly._raw(out, f.char)


def words_of_mdeg(d: Sequence[int]) -> List[Word]:
    """All words of multidegree ``d`` in length-lex order."""
    letters: List[int] = []
    for v, k in enumerate(d, start=1):
        letters.extend([v] * k)
    out = sorted(set(permutations(letters)))
    return [tuple(w) for w in out]


# -- rendering and parsing --------------------------------------------------

def render_word(w: Word) -> str:
    if not w:
        return "1"
    parts = []
    k = 0
    while k < len(w):
        run = 1
        while k + run < len(w) and w[k + run] == w[k]:
            run += 1
        parts.append(f"x{w[k]}" if run == 1 else f"x{w[k]}^{run}")
        k += run
    return "*".join(parts)


def render(f: FreePoly) -> str:
    if not f.terms:
        return "0"
    out = ""
    for n, (w, c) in enumerate(f.sorted_terms()):
        if f.char.p:
            neg, mag = False, str(c.value)
            is_one = c.value == 1
        else:
            v = c.value
            neg = v < 0
            mag = str(abs(v.numerator)) if v.denominator == 1 else f"{abs(v.numerator)}/{v.denominator}"
            is_one = abs(v) == 1
        if not w:
            body = mag
        elif is_one:
            body = render_word(w)
        else:
            body = f"{mag}*{render_word(w)}"
        if n == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnknownFunction(ExprSyntaxError):
    pass


class _Parser:
    """Recursive-descent parser for the expression grammar.

    ::

        poly   := ['-'] term { ('+'|'-') term }
        term   := [coeff ['*']] factor { '*' factor } | coeff
        coeff  := integer ['/' integer]
        factor := atom ['^' integer]
        atom   := 'x' N | '[' poly ',' poly ']' | '(' poly ')'
                | 'St' N '(' poly {',' poly} ')'
    """

    def __init__(self, text: str, char: Char):
        self.text = text
        self.pos = 0
        self.char = char

    def error(self, msg: str):
        raise ExprSyntaxError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse(self) -> FreePoly:
        f = self.poly()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return f

    def poly(self) -> FreePoly:
        neg = False
        if self.peek() == "-":
            self.pos += 1
            neg = True
        f = self.term()
        if neg:
            f = -f
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            f = f + t if op == "+" else f - t
        return f

    def term(self) -> FreePoly:
        coeff = None
        if self.peek().isdigit():
            num = self.integer()
            coeff = Scalar(num, self.char)
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.integer()
                if Scalar(den, self.char) == 0:
                    raise ExprSyntaxError("zero denominator", at)
                coeff = coeff / Scalar(den, self.char)
            if self.peek() == "*":
                self.pos += 1
            elif not self._starts_atom():
                return FreePoly({(): coeff}, self.char)
        f = self.factor()
        while self.peek() == "*":
            self.pos += 1
            f = f * self.factor()
        return f if coeff is None else f.scale(coeff)

    def _starts_atom(self) -> bool:
        ch = self.peek()
        return ch in ("x", "[", "(", "S") or ch.isalpha()

    def factor(self) -> FreePoly:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            base = base ** self.integer()
        return base

    def atom(self) -> FreePoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            f = self.poly()
            self.expect(")")
            return f
        if ch == "[":
            self.pos += 1
            a = self.poly()
            self.expect(",")
            b = self.poly()
            self.expect("]")
            return bracket(a, b)
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            name = self.text[start:self.pos]
            if name == "x":
                at = self.pos
                idx = self.integer()
                if idx < 1:
                    raise ExprSyntaxError("variable indices start at 1", at)
                return FreePoly.var(idx, self.char)
            if name == "St":
                n = self.integer()
                if n < 1:
                    self.error("St needs a positive order")
                self.expect("(")
                args = [self.poly()]
                while self.peek() == ",":
                    self.pos += 1
                    args.append(self.poly())
                self.expect(")")
                if len(args) != n:
                    raise ExprSyntaxError(f"St{n} takes {n} arguments, got {len(args)}", start)
                return standard_of(args)
            raise UnknownFunction(f"unknown name {name!r}", start)
        self.error("expected variable, bracket or parenthesis" if ch else "unexpected end of input")


def parse(text: str, c: Char = ZERO) -> FreePoly:
    return _Parser(text, c).parse()
