"""Commutant of the Newton derivation (y, f): basis computation and
energy-polynomial certificates.

Writing a candidate as gamma(x) = sum c_i(x) y^i, gamma(y) = sum d_i(x) y^i
with y-degree at most M, the commutation condition splits by powers of y
into two families of linear equations in the c_i, d_i (levels j = 0..M+1,
variables out of that range read as zero):

    level j, x-component:  c_{j-1}' + (j+1) f c_{j+1} = d_j
    level j, y-component:  d_{j-1}' + (j+1) f d_{j+1} = f' c_j

Capping the x-degree of the unknowns turns this into finite exact linear
algebra.  The default cap is large enough that no solution is lost: the
solution coefficients obey deg d_{m-2k} <= k (deg f + 1), so components of
a y-degree <= M solution never exceed ceil((M+1)/2) (deg f + 1) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .derivations import PlanarDerivation, hamiltonian, newton_derivation
from .errors import HypothesisViolation, InvalidInput, NotAMultiple, NotDivisible
from .linsolve import Row, nullspace
from .poly import BiPoly, UniPoly

# a variable is addressed as (kind, i, e): coefficient of x^e in c_i or d_i
VarCol = Callable[[str, int, int], Optional[int]]


def default_xcap(f: UniPoly, M: int) -> int:
    n = f.degree
    n = 0 if n < 0 else int(n)
    return ((M + 2) // 2) * (n + 1) + 1


def expand_level(form: str, j: int, f: UniPoly, xcap: int, var_col: VarCol) -> list[Row]:
    """x-coefficient rows of one level equation.

    form "C" is the x-component family, form "D" the y-component family.
    var_col maps (kind, i, e) to a column index, or None when the unknown
    is not part of the system (then the term is zero).
    """
    if form == "C":
        dkind, fkind = "c", "c"
        rhs_kind, rhs_poly = "d", UniPoly.const(-1)
    else:
        dkind, fkind = "d", "d"
        rhs_kind, rhs_poly = "c", -f.derivative()
    rows: dict[int, Row] = {}

    def add(s: int, col: Optional[int], val: Fraction):
        if col is None or val == 0:
            return
        row = rows.setdefault(s, {})
        nv = row.get(col, Fraction(0)) + val
        if nv:
            row[col] = nv
        else:
            row.pop(col, None)

    # derivative term: (kind j-1)' contributes e * x^(e-1)
    for e in range(1, xcap + 1):
        add(e - 1, var_col(dkind, j - 1, e), Fraction(e))
    # multiplier term: (j+1) * f * (kind j+1)
    for n, fn in enumerate(f.coeffs):
        if fn:
            for e in range(xcap + 1):
                add(e + n, var_col(fkind, j + 1, e), (j + 1) * fn)
    # right-hand side moved over: -d_j  (or  -f' c_j)
    for n, pn in enumerate(rhs_poly.coeffs):
        if pn:
            for e in range(xcap + 1):
                add(e + n, var_col(rhs_kind, j, e), pn)
    return [rows[s] for s in sorted(rows) if rows[s]]


def column_layout(entries: list[tuple[str, int]], xcap: int):
    """Column indices for unknown polynomials, most significant first.

    entries lists (kind, i) pairs; ordering is y-degree descending, c before
    d at equal y-degree, then x-degree descending inside each polynomial.
    """
    ordered = sorted(entries, key=lambda p: (-p[1], p[0]))
    index: dict[tuple[str, int, int], int] = {}
    col = 0
    for kind, i in ordered:
        for e in range(xcap, -1, -1):
            index[(kind, i, e)] = col
            col += 1
    return ordered, index, col


def vector_to_polys(vec: Row, index: dict[tuple[str, int, int], int]) -> dict[tuple[str, int], UniPoly]:
    by_poly: dict[tuple[str, int], dict[int, Fraction]] = {}
    inverse = {v: k for k, v in index.items()}
    for col, val in vec.items():
        kind, i, e = inverse[col]
        by_poly.setdefault((kind, i), {})[e] = val
    return {key: UniPoly.from_dict(d) for key, d in by_poly.items()}


@dataclass(frozen=True)
class CommutantBasis:
    f: UniPoly
    M: int
    xcap: int
    basis: tuple[PlanarDerivation, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def solve_commutant(f: UniPoly, M: int, xcap: int | None = None) -> CommutantBasis:
    """Basis of {gamma : [newton_derivation(f), gamma] = 0, deg_y gamma <= M}.

    Unknown coefficients are capped at x-degree xcap; with the default cap
    and deg f >= 2 the basis is complete.  Degenerate f (zero or degree <= 1)
    is accepted for negative controls.
    """
    if not isinstance(M, int) or M < 0:
        raise InvalidInput("max y-degree M must be a non-negative integer")
    if not isinstance(f, UniPoly):
        f = UniPoly.const(f)
    if xcap is None:
        xcap = default_xcap(f, M)
    elif xcap < 0:
        raise InvalidInput("xcap must be non-negative")

    entries = [(kind, i) for i in range(M + 1) for kind in ("c", "d")]
    _, index, ncols = column_layout(entries, xcap)

    def var_col(kind: str, i: int, e: int):
        return index.get((kind, i, e))

    rows: list[Row] = []
    for j in range(M + 2):
        rows.extend(expand_level("C", j, f, xcap, var_col))
        rows.extend(expand_level("D", j, f, xcap, var_col))

    basis = []
    for vec in nullspace(rows, ncols):
        polys = vector_to_polys(vec, index)
        act_x = BiPoly([polys.get(("c", i), UniPoly.zero()) for i in range(M + 1)])
        act_y = BiPoly([polys.get(("d", i), UniPoly.zero()) for i in range(M + 1)])
        basis.append(PlanarDerivation(act_x, act_y))
    return CommutantBasis(f=f, M=M, xcap=xcap, basis=tuple(basis))


@dataclass(frozen=True)
class HDecomposition:
    """gamma = (sum_k q_coeffs[k] * H^k) * newton_derivation(f)."""

    q_coeffs: tuple[Fraction, ...]

    def reconstruct(self, f: UniPoly) -> PlanarDerivation:
        H = hamiltonian(f)
        q = BiPoly.zero()
        for k, a in enumerate(self.q_coeffs):
            q = q + a * H ** k
        return newton_derivation(f).scale(q)


def decompose_in_H(f: UniPoly, gamma: PlanarDerivation) -> HDecomposition:
    """Express gamma as q(H) * newton_derivation(f) or raise NotAMultiple.

    Peels the energy polynomial H = y^2 - 2 INT(f) off the quotient
    gamma(x)/y from the top y-degree down; each peeled leading coefficient
    must be a constant, and the remainder must vanish.
    """
    if not isinstance(f, UniPoly):
        f = UniPoly.const(f)
    try:
        q = gamma.act_x.divexact_y()
    except NotDivisible as exc:
        raise NotAMultiple(f"gamma(x) = {gamma.act_x} is not divisible by y") from exc
    if q * f != gamma.act_y:
        raise NotAMultiple("gamma(y) differs from (gamma(x)/y) * f")
    H = hamiltonian(f)
    coeffs: dict[int, Fraction] = {}
    while not q.is_zero:
        yd = q.y_degree
        if yd % 2:
            raise NotAMultiple(f"quotient has odd y-degree {yd}")
        s = yd // 2
        lead = q.ycoeff(yd)
        if lead.degree > 0:
            raise NotAMultiple(f"leading coefficient {lead} of y^{yd} is not constant")
        lam = lead.coeff(0)
        coeffs[s] = lam
        q = q - lam * H ** s
        if not q.is_zero and q.y_degree >= yd:
            raise NotAMultiple("peeling failed to lower the y-degree")
    if not coeffs:
        return HDecomposition(())
    top = max(coeffs)
    return HDecomposition(tuple(coeffs.get(k, Fraction(0)) for k in range(top + 1)))


@dataclass(frozen=True)
class RankOneCertificate:
    f: UniPoly
    M: int
    commutant: CommutantBasis
    decompositions: tuple[HDecomposition | None, ...]
    expected_dimension: int
    passed: bool
    failing_index: int | None
    reason: str | None

    @property
    def dimension(self) -> int:
        return self.commutant.dimension


def certify_rank_one(f: UniPoly, M: int, xcap: int | None = None) -> RankOneCertificate:
    """Certify that every commuting derivation up to y-degree M is an
    energy-polynomial multiple of the base derivation (needs deg f >= 2)."""
    if not isinstance(f, UniPoly):
        f = UniPoly.const(f)
    if f.degree < 2:
        raise HypothesisViolation("certification requires deg f >= 2")
    com = solve_commutant(f, M, xcap)
    expected = (M - 1) // 2 + 1 if M >= 1 else 0
    decs: list[HDecomposition | None] = []
    failing = None
    reason = None
    for idx, gamma in enumerate(com.basis):
        try:
            decs.append(decompose_in_H(f, gamma))
        except NotAMultiple as exc:
            decs.append(None)
            if failing is None:
                failing, reason = idx, str(exc)
    if failing is None and com.dimension != expected:
        reason = f"dimension {com.dimension} != expected {expected}"
    passed = failing is None and com.dimension == expected
    return RankOneCertificate(
        f=f,
        M=M,
        commutant=com,
        decompositions=tuple(decs),
        expected_dimension=expected,
        passed=passed,
        failing_index=failing,
        reason=reason,
    )
