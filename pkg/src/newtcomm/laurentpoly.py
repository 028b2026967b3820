"""Laurent polynomials in x with fractional exponents, and their y-extension.

A ``LaurentPoly`` lives in Q[x^(1/t), x^(-1/t)] for a declared root index
t >= 1.  Internally every exponent is an integer multiple of 1/t: the value
is stored as a map from z-exponent to coefficient where z = x^(1/t), so all
arithmetic is ordinary integer-exponent bookkeeping.  Operations require
equal t on both operands and raise ``RingMismatch`` otherwise; ``reduce_t``
re-expresses a value over the smallest root index it actually needs.

``LaurentBiPoly`` adjoins y as an ordinary polynomial variable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable

from .errors import InvalidInput, RingMismatch
from .poly import NEG_INF, BiPoly, UniPoly, _as_fraction, _join_terms, _x_power_text


def _exp_text(q: Fraction, var: str) -> str:
    if q == 0:
        return ""
    if q == 1:
        return var
    if q.denominator == 1 and q > 0:
        return f"{var}^{q}"
    return f"{var}^({q})"


class LaurentPoly:
    __slots__ = ("t", "terms")

    def __init__(self, t: int, terms: dict | Iterable = ()):
        if not isinstance(t, int) or t < 1:
            raise InvalidInput("root index t must be a positive integer")
        d = dict(terms)
        clean = {}
        for ze, c in d.items():
            cf = _as_fraction(c)
            if cf != 0:
                clean[int(ze)] = cf
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, t: int) -> "LaurentPoly":
        return cls(t, {})

    @classmethod
    def const(cls, t: int, v) -> "LaurentPoly":
        return cls(t, {0: _as_fraction(v)})

    @classmethod
    def term(cls, t: int, zexp: int, coeff=1) -> "LaurentPoly":
        return cls(t, {zexp: _as_fraction(coeff)})

    @classmethod
    def x_power(cls, t: int, exp, coeff=1) -> "LaurentPoly":
        """x^exp as an element of the ring with root index t."""
        q = exp if isinstance(exp, Fraction) else Fraction(exp)
        ze = q * t
        if ze.denominator != 1:
            raise RingMismatch(f"exponent {q} is not a multiple of 1/{t}")
        return cls.term(t, int(ze), coeff)

    @classmethod
    def from_unipoly(cls, u: UniPoly, t: int = 1) -> "LaurentPoly":
        return cls(t, {e * t: c for e, c in enumerate(u.coeffs) if c != 0})

    # -- structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def x_degree(self):
        """Top exponent as a Fraction (may be negative or fractional)."""
        if not self.terms:
            return NEG_INF
        return Fraction(max(self.terms), self.t)

    @property
    def min_x_degree(self):
        if not self.terms:
            return NEG_INF
        return Fraction(min(self.terms), self.t)

    def lc(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms)]

    def coeff_at(self, exp) -> Fraction:
        q = (exp if isinstance(exp, Fraction) else Fraction(exp)) * self.t
        if q.denominator != 1:
            return Fraction(0)
        return self.terms.get(int(q), Fraction(0))

    def _check(self, other: "LaurentPoly"):
        if self.t != other.t:
            raise RingMismatch(f"mixed root indices {self.t} and {other.t}")

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.t == other.t and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: _as_fraction(other)} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        return hash(("LaurentPoly", self.t, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.t, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for ze, c in other.terms.items():
            out[ze] = out.get(ze, Fraction(0)) + c
        return LaurentPoly(self.t, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.t, {ze: -c for ze, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.t, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return LaurentPoly(self.t, {ze: c * q for ze, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out: dict[int, Fraction] = {}
        for za, ca in self.terms.items():
            for zb, cb in other.terms.items():
                k = za + zb
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return LaurentPoly(self.t, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise InvalidInput("powers take integer exponents")
        if n < 0:
            if len(self.terms) != 1:
                raise InvalidInput("negative powers only of monomials")
            ((ze, c),) = self.terms.items()
            return LaurentPoly(self.t, {ze * n: c ** n})
        result = LaurentPoly.const(self.t, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; both shifted to plain polynomials in z first."""
        if not isinstance(other, LaurentPoly):
            raise TypeError("divexact needs a LaurentPoly divisor")
        self._check(other)
        if other.is_zero:
            raise InvalidInput("division by zero")
        if self.is_zero:
            return LaurentPoly.zero(self.t)
        sa, sb = min(self.terms), min(other.terms)
        ua = UniPoly.from_dict({ze - sa: c for ze, c in self.terms.items()})
        ub = UniPoly.from_dict({ze - sb: c for ze, c in other.terms.items()})
        q = ua.divexact(ub)
        return LaurentPoly(self.t, {ze + sa - sb: c for ze, c in enumerate(q.coeffs) if c != 0})

    # -- calculus ----------------------------------------------------

    def derivative(self) -> "LaurentPoly":
        """d/dx: x^(k/t) maps to (k/t) x^(k/t - 1)."""
        out = {}
        for ze, c in self.terms.items():
            if ze != 0:
                out[ze - self.t] = c * Fraction(ze, self.t)
        return LaurentPoly(self.t, out)

    # -- conversions -------------------------------------------------

    def to_unipoly(self) -> UniPoly:
        d = {}
        for ze, c in self.terms.items():
            if ze < 0 or ze % self.t:
                raise RingMismatch(f"{self} does not lie in the polynomial ring")
            d[ze // self.t] = c
        return UniPoly.from_dict(d)

    def in_ring(self, t2: int) -> "LaurentPoly":
        """Re-express over root index t2 (t must divide t2)."""
        if t2 % self.t:
            raise RingMismatch(f"cannot embed root index {self.t} into {t2}")
        s = t2 // self.t
        return LaurentPoly(t2, {ze * s: c for ze, c in self.terms.items()})

    def reduce_t(self) -> "LaurentPoly":
        """Smallest root index representation of the same value."""
        if not self.terms:
            return LaurentPoly.zero(1)
        g = self.t
        for ze in self.terms:
            g = gcd(g, abs(ze))
            if g == 1:
                break
        g = g or self.t
        return LaurentPoly(self.t // g, {ze // g: c for ze, c in self.terms.items()})

    # -- printing ----------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        parts = [(self.terms[ze], _exp_text(Fraction(ze, self.t), var))
                 for ze in sorted(self.terms, reverse=True)]
        return _join_terms(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly[t={self.t}; {self.to_text()}]"


class LaurentBiPoly:
    """Polynomial in y whose coefficients are LaurentPoly values."""

    __slots__ = ("t", "ycoeffs")

    def __init__(self, t: int, ycoeffs: Iterable = ()):
        cs = []
        for c in ycoeffs:
            if isinstance(c, LaurentPoly):
                if c.t != t:
                    raise RingMismatch(f"coefficient root index {c.t} != {t}")
                cs.append(c)
            elif isinstance(c, (int, Fraction)):
                cs.append(LaurentPoly.const(t, c))
            else:
                raise TypeError("LaurentBiPoly coefficients must be LaurentPoly or scalars")
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "ycoeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentBiPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, t: int) -> "LaurentBiPoly":
        return cls(t, ())

    @classmethod
    def const(cls, t: int, v) -> "LaurentBiPoly":
        return cls(t, (LaurentPoly.const(t, v),))

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "LaurentBiPoly":
        return cls(p.t, (p,))

    @classmethod
    def y(cls, t: int) -> "LaurentBiPoly":
        return cls(t, (LaurentPoly.zero(t), LaurentPoly.const(t, 1)))

    @classmethod
    def y_pow(cls, t: int, e: int, coeff: LaurentPoly | int = 1) -> "LaurentBiPoly":
        cl = coeff if isinstance(coeff, LaurentPoly) else LaurentPoly.const(t, coeff)
        return cls(t, (LaurentPoly.zero(t),) * e + (cl,))

    @classmethod
    def from_bipoly(cls, p: BiPoly, t: int = 1) -> "LaurentBiPoly":
        return cls(t, tuple(LaurentPoly.from_unipoly(c, t) for c in p.ycoeffs))

    # -- structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.ycoeffs

    @property
    def y_degree(self):
        return len(self.ycoeffs) - 1 if self.ycoeffs else NEG_INF

    def ycoeff(self, i: int) -> LaurentPoly:
        if 0 <= i < len(self.ycoeffs):
            return self.ycoeffs[i]
        return LaurentPoly.zero(self.t)

    def _check(self, other: "LaurentBiPoly"):
        if self.t != other.t:
            raise RingMismatch(f"mixed root indices {self.t} and {other.t}")

    def __eq__(self, other):
        if isinstance(other, LaurentBiPoly):
            return self.t == other.t and self.ycoeffs == other.ycoeffs
        if isinstance(other, (int, Fraction, LaurentPoly)):
            o = other if isinstance(other, LaurentPoly) else LaurentPoly.const(self.t, other)
            return self == LaurentBiPoly.from_laurent(o) if o.t == self.t else NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash(("LaurentBiPoly", self.t, self.ycoeffs))

    def __bool__(self):
        return bool(self.ycoeffs)

    # -- arithmetic --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentBiPoly):
            return other
        if isinstance(other, LaurentPoly):
            return LaurentBiPoly.from_laurent(other)
        if isinstance(other, (int, Fraction)):
            return LaurentBiPoly.const(self.t, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check(o)
        n = max(len(self.ycoeffs), len(o.ycoeffs))
        return LaurentBiPoly(self.t, [self.ycoeff(i) + o.ycoeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return LaurentBiPoly(self.t, [-c for c in self.ycoeffs])

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
            return LaurentBiPoly(self.t, [c * q for c in self.ycoeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check(o)
        if self.is_zero or o.is_zero:
            return LaurentBiPoly.zero(self.t)
        out = [LaurentPoly.zero(self.t)] * (len(self.ycoeffs) + len(o.ycoeffs) - 1)
        for i, a in enumerate(self.ycoeffs):
            if not a.is_zero:
                for j, b in enumerate(o.ycoeffs):
                    if not b.is_zero:
                        out[i + j] = out[i + j] + a * b
        return LaurentBiPoly(self.t, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("LaurentBiPoly powers take non-negative integer exponents")
        result = LaurentBiPoly.const(self.t, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus ----------------------------------------------------

    def dx(self) -> "LaurentBiPoly":
        return LaurentBiPoly(self.t, [c.derivative() for c in self.ycoeffs])

    def dy(self) -> "LaurentBiPoly":
        return LaurentBiPoly(self.t, [i * c for i, c in enumerate(self.ycoeffs)][1:])

    # -- conversions -------------------------------------------------

    def to_bipoly(self) -> BiPoly:
        return BiPoly([c.to_unipoly() for c in self.ycoeffs])

    # -- printing ----------------------------------------------------

    def to_text(self, xvar: str = "x", yvar: str = "y") -> str:
        parts: list[tuple[Fraction, str]] = []
        for i in range(len(self.ycoeffs) - 1, -1, -1):
            ypart = _x_power_text(i, yvar)
            lp = self.ycoeffs[i]
            for ze in sorted(lp.terms, reverse=True):
                xpart = _exp_text(Fraction(ze, self.t), xvar)
                mono = "*".join(p for p in (xpart, ypart) if p)
                parts.append((lp.terms[ze], mono))
        return _join_terms(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentBiPoly[t={self.t}; {self.to_text()}]"
