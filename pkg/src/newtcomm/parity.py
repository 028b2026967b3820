"""The four parity-split equation systems behind the commutant computation.

The level equations of commutant.expand_level couple unknowns of one index
parity only, so the full system for y-degree m splits into two independent
halves.  Naming the half with odd-index c's and even-index d's "I" and its
complement "II", and tagging by the parity of m, gives four kinds:

    Io (m odd),  Ie (m even):  x-component equations at even levels,
                               y-component equations at odd levels;
                               unknowns c_odd, d_even.
    IIo (m odd), IIe (m even): x-component equations at odd levels,
                               y-component equations at even levels;
                               unknowns c_even, d_odd.

Each system has m+2 equations, labeled e_{m+1} down to e_0.  The I-half
carries all solutions when deg f >= 2; checkers for the dimension and
forced-to-zero facts live in check_lemma_suite.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from fractions import Fraction

from .commutant import (
    column_layout,
    decompose_in_H,
    default_xcap,
    expand_level,
    vector_to_polys,
)
from .derivations import PlanarDerivation
from .errors import HypothesisViolation, InvalidInput, NotAMultiple
from .linsolve import Row, nullspace, rref
from .poly import BiPoly, UniPoly

KINDS = ("Io", "IIo", "Ie", "IIe")


def _c_parity(kind: str) -> int:
    """Index parity of the c-unknowns: odd for I-systems, even for II."""
    return 1 if kind in ("Io", "Ie") else 0


@dataclass(frozen=True)
class SystemEquation:
    label: str
    level: int
    form: str  # "C" = x-component shape, "D" = y-component shape
    text: str


@dataclass(frozen=True)
class ParitySystem:
    kind: str
    m: int
    f: UniPoly
    equations: tuple[SystemEquation, ...]

    @property
    def c_indices(self) -> tuple[int, ...]:
        par = _c_parity(self.kind)
        return tuple(i for i in range(self.m + 1) if i % 2 == par)

    @property
    def d_indices(self) -> tuple[int, ...]:
        par = 1 - _c_parity(self.kind)
        return tuple(i for i in range(self.m + 1) if i % 2 == par)

    @property
    def unknowns(self) -> tuple[str, ...]:
        names = [f"c_{i}" for i in self.c_indices] + [f"d_{i}" for i in self.d_indices]
        return tuple(sorted(names, key=lambda s: (-int(s[2:]), s[0])))


def _equation_text(form: str, j: int, m: int) -> str:
    lhs = []
    if form == "C":
        if j >= 1:
            lhs.append(f"c_{j-1}'")
        if j + 1 <= m:
            mult = "" if j + 1 == 1 else f"{j + 1}*"
            lhs.append(f"{mult}f*c_{j+1}")
        rhs = f"d_{j}" if j <= m else "0"
    else:
        if j >= 1:
            lhs.append(f"d_{j-1}'")
        if j + 1 <= m:
            mult = "" if j + 1 == 1 else f"{j + 1}*"
            lhs.append(f"{mult}f*d_{j+1}")
        rhs = f"f'*c_{j}" if j <= m else "0"
    return f"{' + '.join(lhs) if lhs else '0'} = {rhs}"


def build_system(kind: str, m: int, f: UniPoly) -> ParitySystem:
    """Equations e_{m+1} .. e_0 of the requested parity system.

    Any m >= 2 is accepted for experimentation; the lemma checkers insist
    on the matching parity of m themselves.
    """
    if kind not in KINDS:
        raise InvalidInput(f"kind must be one of {KINDS}")
    if not isinstance(m, int) or m < 2:
        raise InvalidInput("m must be an integer >= 2")
    if not isinstance(f, UniPoly):
        f = UniPoly.const(f)
    c_even_levels = kind in ("Io", "Ie")  # x-component equations at even levels
    eqs = []
    for j in range(m + 1, -1, -1):
        form = "C" if (j % 2 == 0) == c_even_levels else "D"
        eqs.append(SystemEquation(label=f"e_{j}", level=j, form=form,
                                  text=_equation_text(form, j, m)))
    return ParitySystem(kind=kind, m=m, f=f, equations=tuple(eqs))


@dataclass(frozen=True)
class SolutionSpace:
    dimension: int
    basis: tuple[dict, ...]  # unknown name -> UniPoly, every unknown present
    forced: frozenset  # unknowns identically zero across the solution set


def system_rows(sys: ParitySystem, xcap: int):
    """Coefficient-matching rows over the system's own column layout."""
    entries = [("c", i) for i in sys.c_indices] + [("d", i) for i in sys.d_indices]
    ordered, index, ncols = column_layout(entries, xcap)

    def var_col(kind: str, i: int, e: int):
        return index.get((kind, i, e))

    rows: list[Row] = []
    for eq in sys.equations:
        rows.extend(expand_level(eq.form, eq.level, sys.f, xcap, var_col))
    return rows, index, ncols


def _space_from_vectors(sys: ParitySystem, vectors: list[Row],
                        index: dict) -> SolutionSpace:
    names = [("c", i) for i in sys.c_indices] + [("d", i) for i in sys.d_indices]
    basis = []
    for vec in vectors:
        polys = vector_to_polys(vec, index)
        basis.append({f"{kind}_{i}": polys.get((kind, i), UniPoly.zero())
                      for kind, i in names})
    forced = frozenset(
        f"{kind}_{i}" for kind, i in names
        if all(b[f"{kind}_{i}"].is_zero for b in basis)
    )
    return SolutionSpace(dimension=len(basis), basis=tuple(basis), forced=forced)


def solve_system(sys: ParitySystem, xcap: int | None = None,
                 strategy: str = "linalg") -> SolutionSpace:
    """Polynomial solutions with every unknown of x-degree <= xcap.

    strategy "linalg" (default) equates x-coefficients and solves exactly;
    "backsub" integrates the equations top-down (Io only) and imposes the
    bottom consistency equation on the integration constants.  Both produce
    the same canonical echelon basis.
    """
    if strategy == "backsub":
        return _solve_backsub(sys, xcap)
    if strategy != "linalg":
        raise InvalidInput(f"unknown strategy {strategy!r}")
    if xcap is None:
        xcap = default_xcap(sys.f, sys.m)
    rows, index, ncols = system_rows(sys, xcap)
    return _space_from_vectors(sys, nullspace(rows, ncols), index)


def _solve_backsub(sys: ParitySystem, xcap: int | None) -> SolutionSpace:
    """Solve (Io)_m by integrating e_{m+1}, e_m, ... downward.

    Each unknown is kept as a linear combination of integration constants
    with UniPoly coefficients; the final equation e_0 (f*c_1 = d_0) becomes
    an exact linear system on the constants alone.
    """
    if sys.kind != "Io" or sys.m % 2 == 0:
        raise InvalidInput("back-substitution strategy applies to Io with odd m")
    m, f = sys.m, sys.f
    fprime = f.derivative()

    # combo representation: dict const_index -> UniPoly
    def combo_zero() -> dict:
        return {}

    def combo_add_scaled(acc: dict, c: Fraction, combo: dict) -> None:
        for idx, poly in combo.items():
            cur = acc.get(idx, UniPoly.zero()) + c * poly
            if cur.is_zero:
                acc.pop(idx, None)
            else:
                acc[idx] = cur

    def combo_mul(poly: UniPoly, combo: dict) -> dict:
        return {idx: poly * p for idx, p in combo.items()}

    def combo_integrate(combo: dict) -> dict:
        return {idx: p.integrate_dx() for idx, p in combo.items()}

    unknowns: dict[str, dict] = {}
    next_const = 0

    # e_{m+1}: c_m' = 0
    unknowns[f"c_{m}"] = {next_const: UniPoly.one()}
    next_const += 1

    for j in range(m, 0, -1):
        if j % 2:  # y-component shape: d_{j-1}' = f' c_j - (j+1) f d_{j+1}
            rhs = combo_mul(fprime, unknowns[f"c_{j}"])
            upper = unknowns.get(f"d_{j+1}")
            if upper:
                combo_add_scaled(rhs, Fraction(-(j + 1)), combo_mul(f, upper))
            name = f"d_{j-1}"
        else:  # x-component shape: c_{j-1}' = d_j - (j+1) f c_{j+1}
            rhs = dict(unknowns[f"d_{j}"])
            upper = unknowns.get(f"c_{j+1}")
            if upper:
                combo_add_scaled(rhs, Fraction(-(j + 1)), combo_mul(f, upper))
            name = f"c_{j-1}"
        integrated = combo_integrate(rhs)
        integrated[next_const] = UniPoly.one()
        next_const += 1
        unknowns[name] = integrated

    # e_0: f c_1 - d_0 = 0, a linear condition on the constants
    residual = combo_mul(f, unknowns["c_1"])
    combo_add_scaled(residual, Fraction(-1), unknowns["d_0"])
    max_deg = max((p.degree for p in residual.values() if not p.is_zero), default=-1)
    rows: list[Row] = []
    for s in range(int(max_deg) + 1 if max_deg >= 0 else 0):
        row = {idx: p.coeff(s) for idx, p in residual.items() if p.coeff(s) != 0}
        if row:
            rows.append(row)
    const_solutions = nullspace(rows, next_const)

    # instantiate, then canonicalize over the standard column layout
    if xcap is None:
        xcap = default_xcap(f, m)
    inst_cap = xcap
    for combo in unknowns.values():
        for p in combo.values():
            if p.degree > inst_cap:
                inst_cap = int(p.degree)
    entries = [("c", i) for i in sys.c_indices] + [("d", i) for i in sys.d_indices]
    _, index, ncols = column_layout(entries, inst_cap)
    vectors: list[Row] = []
    for omega in const_solutions:
        vec: Row = {}
        for name, combo in unknowns.items():
            kind, i = name[0], int(name[2:])
            total = UniPoly.zero()
            for cidx, weight in omega.items():
                if cidx in combo:
                    total = total + weight * combo[cidx]
            for e, cf in enumerate(total.coeffs):
                if cf:
                    vec[index[(kind, i, e)]] = cf
        if vec:
            vectors.append(vec)
    canonical, _ = rref(vectors, ncols)
    return _space_from_vectors(sys, canonical, index)


def assemble_derivation(space_entry: dict, m: int) -> PlanarDerivation:
    """Build the derivation whose coefficients a solution assigns."""
    act_x = BiPoly([space_entry.get(f"c_{i}", UniPoly.zero()) for i in range(m + 1)])
    act_y = BiPoly([space_entry.get(f"d_{i}", UniPoly.zero()) for i in range(m + 1)])
    return PlanarDerivation(act_x, act_y)


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    kind: str
    m: int
    passed: bool
    dimension: int
    forced: frozenset
    detail: str


@dataclass(frozen=True)
class LemmaSuiteReport:
    f: UniPoly
    m_max: int
    checks: tuple[LemmaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _check_one(kind: str, m: int, f: UniPoly) -> LemmaCheck:
    sys = build_system(kind, m, f)
    space = solve_system(sys)
    if kind == "Io":
        expected = (m + 1) // 2
        ok = space.dimension == expected
        detail = f"dimension {space.dimension}, expected {expected}"
        if ok:
            for entry in space.basis:
                gamma = assemble_derivation(entry, m)
                try:
                    decompose_in_H(f, gamma)
                except NotAMultiple as exc:
                    ok = False
                    detail += f"; solution not an energy multiple: {exc}"
                    break
            else:
                detail += "; all solutions are energy-polynomial multiples"
    else:
        target = f"d_{m}" if kind in ("Ie", "IIo") else f"c_{m}"
        ok = target in space.forced
        state = "forced to zero" if ok else "NOT forced to zero"
        detail = f"{target} {state}; dimension {space.dimension}"
    return LemmaCheck(name=f"{kind}_{m}", kind=kind, m=m, passed=ok,
                      dimension=space.dimension, forced=space.forced, detail=detail)


def check_lemma_suite(f: UniPoly, m_max: int, *, allow_low_degree: bool = False,
                      threads: int | None = None) -> LemmaSuiteReport:
    """Run every dimension/forced-zero check for m up to m_max.

    For odd m: (Io)_m has dimension (m+1)/2 with every solution an energy
    multiple, and d_m is forced in (IIo)_m (m >= 3).  For even m: d_m is
    forced in (Ie)_m and c_m in (IIe)_m.  These facts need deg f >= 2;
    allow_low_degree runs the suite anyway as a negative control.
    """
    if not isinstance(f, UniPoly):
        f = UniPoly.const(f)
    if f.degree < 2 and not allow_low_degree:
        raise HypothesisViolation("lemma suite requires deg f >= 2")
    if not isinstance(m_max, int) or m_max < 2:
        raise InvalidInput("m_max must be an integer >= 2")
    jobs: list[tuple[str, int]] = []
    for m in range(2, m_max + 1):
        if m % 2:
            jobs.append(("Io", m))
            jobs.append(("IIo", m))
        else:
            jobs.append(("Ie", m))
            jobs.append(("IIe", m))
    jobs.sort(key=lambda km: (KINDS.index(km[0]), km[1]))
    if threads and threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            checks = list(pool.map(lambda km: _check_one(km[0], km[1], f), jobs))
    else:
        checks = [_check_one(kind, m, f) for kind, m in jobs]
    return LemmaSuiteReport(f=f, m_max=m_max, checks=tuple(checks))
