"""Expression parsing for the polynomial and Laurent rings.

Grammar (whitespace insensitive)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | power
    power    := atom ['^' exponent]
    atom     := NUMBER ['/' NUMBER] | 'x' | 'y' | '(' expr ')'
    exponent := NUMBER | '-' NUMBER | '(' ['-'] NUMBER ['/' NUMBER] ')'

NUMBER '/' NUMBER is a rational literal (there is no division operator).
Integer exponents apply to any subexpression; negative or fractional
exponents are only meaningful on the bare variable x in a Laurent ring,
where p/q needs q | t.  Canonical printing is the ``str()`` of each ring
type; ``parse(str(p))`` returns ``p``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, RingMismatch
from .laurentpoly import LaurentBiPoly, LaurentPoly
from .poly import BiPoly, UniPoly


class _UniRing:
    name = "Q[x]"

    def const(self, q):
        return BiPoly.const(q)  # parsed via BiPoly, narrowed at the end

    def var(self, name, pos):
        if name != "x":
            raise ParseError(f"variable {name} not allowed in {self.name}", pos)
        return BiPoly.x()

    def x_pow(self, q, pos):
        raise RingMismatch(f"exponent {q} needs a Laurent ring, not {self.name}")


class _BiRing(_UniRing):
    name = "Q[x,y]"

    def var(self, name, pos):
        return BiPoly.x() if name == "x" else BiPoly.y()


class _LaurentRing:
    def __init__(self, t: int, with_y: bool):
        self.t = t
        self.with_y = with_y
        self.name = f"Q[x^(1/{t}), x^(-1/{t})" + (", y]" if with_y else "]")

    def const(self, q):
        return LaurentBiPoly.const(self.t, q)

    def var(self, name, pos):
        if name == "y":
            if not self.with_y:
                raise ParseError(f"variable y not allowed in {self.name}", pos)
            return LaurentBiPoly.y(self.t)
        return LaurentBiPoly.from_laurent(LaurentPoly.x_power(self.t, 1))

    def x_pow(self, q, pos):
        return LaurentBiPoly.from_laurent(LaurentPoly.x_power(self.t, q))


class _Parser:
    def __init__(self, text: str, ring):
        self.text = text
        self.pos = 0
        self.ring = ring

    # -- lexing helpers ----------------------------------------------

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            what = f"'{got}'" if got else "end of input"
            raise ParseError(f"expected '{ch}', found {what}", self.pos)
        self.pos += 1

    def read_int(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(self.text[start:self.pos])

    def read_rational(self) -> Fraction:
        num = self.read_int()
        if self.peek() == "/":
            self.pos += 1
            den = self.read_int()
            if den == 0:
                raise ParseError("zero denominator", self.pos - 1)
            return Fraction(num, den)
        return Fraction(num)

    # -- grammar -----------------------------------------------------

    def parse(self):
        value = self.expr()
        self._skip_ws()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected '{self.text[self.pos]}'", self.pos)
        return value

    def expr(self):
        value, _ = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()[0]
            elif ch == "-":
                self.pos += 1
                value = value - self.term()[0]
            else:
                return value

    def term(self):
        value, bare_x = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()[0]
            bare_x = False
        return value, bare_x

    def factor(self):
        if self.peek() == "-":
            self.pos += 1
            value, _ = self.factor()
            return -value, False
        return self.power()

    def power(self):
        value, bare_x = self.atom()
        if self.peek() != "^":
            return value, bare_x
        self.pos += 1
        at = self.pos
        exp = self.exponent()
        if exp.denominator == 1 and exp >= 0:
            return value ** int(exp), False
        if bare_x:
            return self.ring.x_pow(exp, at), False
        raise RingMismatch(f"exponent {exp} is only allowed on x in a Laurent ring")

    def exponent(self) -> Fraction:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            q = self.read_rational()
            self.expect(")")
            return sign * q
        if ch == "-":
            self.pos += 1
            return Fraction(-self.read_int())
        return Fraction(self.read_int())

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value, False
        if ch in ("x", "y"):
            at = self.pos
            self.pos += 1
            return self.ring.var(ch, at), ch == "x"
        if ch.isdigit():
            return self.ring.const(self.read_rational()), False
        what = f"'{ch}'" if ch else "end of input"
        raise ParseError(f"unexpected {what}", self.pos)


def _run(text: str, ring):
    return _Parser(text, ring).parse()


def parse_bipoly(text: str) -> BiPoly:
    """Parse an element of Q[x,y]."""
    return _run(text, _BiRing())


def parse_unipoly(text: str) -> UniPoly:
    """Parse an element of Q[x] (the variable y is rejected)."""
    p = _run(text, _UniRing())
    return p.ycoeff(0)


def parse_laurent(text: str, t: int) -> LaurentPoly:
    """Parse an element of Q[x^(1/t), x^(-1/t)]."""
    p = _run(text, _LaurentRing(t, with_y=False))
    return p.ycoeff(0)


def parse_laurent_bipoly(text: str, t: int) -> LaurentBiPoly:
    """Parse an element of Q[x^(1/t), x^(-1/t), y]."""
    return _run(text, _LaurentRing(t, with_y=True))
