"""Exact univariate and bivariate polynomial arithmetic over Q.

``UniPoly`` is a dense polynomial in x with ``fractions.Fraction``
coefficients.  ``BiPoly`` is a polynomial in y whose coefficients are
``UniPoly`` values (recursive dense); every computation downstream groups
terms by powers of y, so this shape keeps the bookkeeping direct.

Values are immutable after construction and safe to share across threads.
The degree of the zero polynomial is ``NEG_INF``, which compares below
every integer, so degree-bound checks need no special cases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidInput, NotDivisible

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot use {type(v).__name__} as an exact coefficient")


def _join_terms(parts: list[tuple[Fraction, str]]) -> str:
    """Render (coefficient, monomial-text) pairs canonically.

    The monomial text is "" for a constant term.  Output uses explicit
    '*' between coefficient and variables and ' + '/' - ' separators.
    """
    if not parts:
        return "0"
    chunks: list[str] = []
    for coeff, mono in parts:
        mag = -coeff if coeff < 0 else coeff
        if mono == "":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if coeff < 0 else body)
        else:
            chunks.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(chunks)


def _x_power_text(e: int, var: str = "x") -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


class UniPoly:
    """Polynomial in one variable over Q, represented densely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def const(cls, v) -> "UniPoly":
        return cls((_as_fraction(v),))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def x_pow(cls, e: int, coeff=1) -> "UniPoly":
        if e < 0:
            raise InvalidInput("negative exponent in a polynomial ring")
        return cls((0,) * e + (_as_fraction(coeff),))

    @classmethod
    def from_dict(cls, d: dict) -> "UniPoly":
        if not d:
            return cls()
        top = max(d)
        cs = [Fraction(0)] * (top + 1)
        for e, c in d.items():
            cs[e] = _as_fraction(c)
        return cls(cs)

    # -- structure ---------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> Fraction:
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return Fraction(0)

    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return UniPoly([c * q for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("polynomial powers take non-negative integer exponents")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other: "UniPoly") -> "UniPoly":
        """Exact quotient self / other; raises NotDivisible on a remainder."""
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other)
        if other.is_zero:
            raise InvalidInput("division by the zero polynomial")
        if self.is_zero:
            return UniPoly()
        if self.degree < other.degree:
            raise NotDivisible(f"{self} is not divisible by {other}")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lc()
        quot = [Fraction(0)] * (len(rem) - dq)
        for top in range(len(rem) - 1, dq - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            q = c / lead
            quot[top - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[top - dq + j] -= q * b
        if any(rem):
            raise NotDivisible(f"{self} is not divisible by {other}")
        return UniPoly(quot)

    # -- calculus ----------------------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def integrate_dx(self) -> "UniPoly":
        """Antiderivative with zero constant term."""
        return UniPoly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, v):
        acc = 0 * v  # keeps the caller's numeric type (Fraction or float)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    # -- printing ----------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        parts = [(c, _x_power_text(e, var))
                 for e in range(len(self.coeffs) - 1, -1, -1)
                 if (c := self.coeffs[e]) != 0]
        return _join_terms(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"UniPoly[{self.to_text()}]"


class BiPoly:
    """Polynomial in x and y over Q, stored as y-power list of UniPoly."""

    __slots__ = ("ycoeffs",)

    def __init__(self, ycoeffs: Iterable = ()):
        cs = []
        for c in ycoeffs:
            if isinstance(c, UniPoly):
                cs.append(c)
            else:
                cs.append(UniPoly.const(c) if isinstance(c, (int, Fraction, str)) else UniPoly(c))
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "ycoeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls((UniPoly.one(),))

    @classmethod
    def const(cls, v) -> "BiPoly":
        return cls((UniPoly.const(v),))

    @classmethod
    def from_uni(cls, u: UniPoly) -> "BiPoly":
        return cls((u,))

    @classmethod
    def x(cls) -> "BiPoly":
        return cls((UniPoly.x(),))

    @classmethod
    def y(cls) -> "BiPoly":
        return cls((UniPoly.zero(), UniPoly.one()))

    @classmethod
    def y_pow(cls, e: int, coeff: UniPoly | int = 1) -> "BiPoly":
        cu = coeff if isinstance(coeff, UniPoly) else UniPoly.const(coeff)
        return cls((UniPoly.zero(),) * e + (cu,))

    @classmethod
    def monomial(cls, xe: int, ye: int, coeff=1) -> "BiPoly":
        return cls.y_pow(ye, UniPoly.x_pow(xe, coeff))

    # -- structure ---------------------------------------------------

    @property
    def y_degree(self):
        return len(self.ycoeffs) - 1 if self.ycoeffs else NEG_INF

    @property
    def x_degree(self):
        degs = [c.degree for c in self.ycoeffs if not c.is_zero]
        return max(degs) if degs else NEG_INF

    @property
    def total_degree(self):
        degs = [i + c.degree for i, c in enumerate(self.ycoeffs) if not c.is_zero]
        return max(degs) if degs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.ycoeffs

    def ycoeff(self, i: int) -> UniPoly:
        if 0 <= i < len(self.ycoeffs):
            return self.ycoeffs[i]
        return UniPoly.zero()

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.ycoeffs == other.ycoeffs
        if isinstance(other, UniPoly):
            return self == BiPoly.from_uni(other)
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(("BiPoly", self.ycoeffs))

    def __bool__(self):
        return bool(self.ycoeffs)

    # -- arithmetic --------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return BiPoly.from_uni(other)
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.ycoeffs), len(o.ycoeffs))
        return BiPoly([self.ycoeff(i) + o.ycoeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([-c for c in self.ycoeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return BiPoly([c * q for c in self.ycoeffs])
        if isinstance(other, UniPoly):
            return BiPoly([c * other for c in self.ycoeffs])
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return BiPoly()
        out = [UniPoly.zero()] * (len(self.ycoeffs) + len(other.ycoeffs) - 1)
        for i, a in enumerate(self.ycoeffs):
            if not a.is_zero:
                for j, b in enumerate(other.ycoeffs):
                    if not b.is_zero:
                        out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("polynomial powers take non-negative integer exponents")
        result = BiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other: "BiPoly") -> "BiPoly":
        """Exact quotient in Q[x][y]; NotDivisible when a remainder is left."""
        o = self._coerce(other)
        if o is None:
            raise TypeError("divexact needs a polynomial divisor")
        if o.is_zero:
            raise InvalidInput("division by the zero polynomial")
        rem = self
        quot = BiPoly.zero()
        dq = o.y_degree
        while not rem.is_zero and rem.y_degree >= dq:
            cq = rem.ycoeff(rem.y_degree).divexact(o.ycoeff(dq))
            term = BiPoly.y_pow(rem.y_degree - dq, cq)
            quot = quot + term
            rem = rem - term * o
        if not rem.is_zero:
            raise NotDivisible(f"{self} is not divisible by {o}")
        return quot

    def divexact_y(self) -> "BiPoly":
        """Exact quotient by the variable y."""
        if self.is_zero:
            return self
        if not self.ycoeffs[0].is_zero:
            raise NotDivisible(f"{self} is not divisible by y")
        return BiPoly(self.ycoeffs[1:])

    # -- calculus ----------------------------------------------------

    def dx(self) -> "BiPoly":
        return BiPoly([c.derivative() for c in self.ycoeffs])

    def dy(self) -> "BiPoly":
        return BiPoly([i * c for i, c in enumerate(self.ycoeffs)][1:])

    def integrate_dx(self) -> "BiPoly":
        return BiPoly([c.integrate_dx() for c in self.ycoeffs])

    def evaluate(self, xv, yv):
        acc = 0 * yv
        for c in reversed(self.ycoeffs):
            acc = acc * yv + c(xv)
        return acc

    # -- printing ----------------------------------------------------

    def to_text(self, xvar: str = "x", yvar: str = "y") -> str:
        parts: list[tuple[Fraction, str]] = []
        for i in range(len(self.ycoeffs) - 1, -1, -1):
            ypart = _x_power_text(i, yvar)
            u = self.ycoeffs[i]
            for e in range(len(u.coeffs) - 1, -1, -1):
                c = u.coeffs[e]
                if c == 0:
                    continue
                xpart = _x_power_text(e, xvar)
                mono = "*".join(p for p in (xpart, ypart) if p)
                parts.append((c, mono))
        return _join_terms(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"BiPoly[{self.to_text()}]"
