"""Obstruction polynomials for Laurent-coefficient symmetries at negative slope.

Feeding the ansatz of x-power coefficients into the level equations at
y-degree m collapses them, after eliminating everything else, to a single
polynomial condition P_m on the slope variable X.  The roots of P_m are
the slopes at which a nontrivial symmetry can exist.  The T-chain below
reproduces that elimination as a two-term recurrence; P_m keeps its
integer content (nothing is divided out), so root sets rather than
coefficients are the stable interface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput
from .poly import UniPoly


@dataclass(frozen=True)
class ObstructionPoly:
    m: int
    T: tuple[UniPoly, ...]  # T[0] .. T[m]
    P: UniPoly


def build_obstruction(m: int) -> ObstructionPoly:
    """The chain T_m, T_{m-1}, ..., T_0 and the obstruction P_m (odd m >= 3)."""
    if not isinstance(m, int) or m < 3 or m % 2 == 0:
        raise InvalidInput("m must be an odd integer >= 3")
    X = UniPoly.x()
    one = UniPoly.one()
    T: dict[int, UniPoly] = {m: one, m - 1: one}
    for k in range(1, (m - 1) // 2 + 1):
        T[m - 2 * k] = X * T[m - 2 * k + 1] \
            - (m - 2 * k + 2) * ((k - 1) * (X + one) + one) * T[m - 2 * k + 2]
        T[m - 2 * k - 1] = T[m - 2 * k] \
            - (m - 2 * k + 1) * k * (X + one) * T[m - 2 * k + 1]
    P = (Fraction(m - 1, 2) * (X + one) + one) * T[1] - X * T[0]
    return ObstructionPoly(m=m, T=tuple(T[i] for i in range(m + 1)), P=P)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: UniPoly) -> frozenset[Fraction]:
    """All rational roots of p, found exactly.

    Denominators are cleared, powers of x stripped (contributing the root 0),
    and the classical numerator/denominator divisor candidates are verified
    by exact evaluation.
    """
    if not isinstance(p, UniPoly):
        p = UniPoly.const(p)
    if p.is_zero:
        raise InvalidInput("the zero polynomial has every root")
    coeffs = list(p.coeffs)
    roots = set()
    v = 0
    while coeffs[v] == 0:
        v += 1
    if v:
        roots.add(Fraction(0))
        coeffs = coeffs[v:]
    if len(coeffs) == 1:
        return frozenset(roots)
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    a0, lead = ints[0], ints[-1]
    stripped = UniPoly(coeffs)
    found = 0
    for num in _divisors(a0):
        for den in _divisors(lead):
            if math.gcd(num, den) != 1:
                continue  # not in lowest terms: same fraction seen already
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if stripped(cand) == 0:
                    roots.add(cand)
                    found += 1
            if found == len(coeffs) - 1:  # a degree-n poly has at most n roots
                return frozenset(roots)
    return frozenset(roots)


def expected_root_set(m: int) -> frozenset[Fraction]:
    """{1} together with -(2k+1)/(2k-1) for 1 <= k <= (m-1)/2."""
    if not isinstance(m, int) or m < 3 or m % 2 == 0:
        raise InvalidInput("m must be an odd integer >= 3")
    roots = {Fraction(1)}
    for k in range(1, (m - 1) // 2 + 1):
        roots.add(Fraction(-(2 * k + 1), 2 * k - 1))
    return frozenset(roots)
