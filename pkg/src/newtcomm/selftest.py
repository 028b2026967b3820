"""The seven executable acceptance checks, shared by the CLI and the test suite.

Each criterion function returns a CriterionResult and never raises on a
mathematical failure — failures are reported, not thrown — so the CLI can
print a complete scoreboard.  Checks are deterministic given the seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import commutant, family, flows, obstruction, parity
from .derivations import PlanarDerivation, divergence, hamiltonian, newton_derivation
from .errors import NotAMultiple
from .poly import BiPoly, UniPoly


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _timed(name: str, passed: bool, detail: str, t0: float) -> CriterionResult:
    return CriterionResult(name=name, passed=passed, detail=detail,
                           seconds=round(time.perf_counter() - t0, 3))


def _parse_f(text_coeffs: dict[int, int]) -> UniPoly:
    return UniPoly.from_dict({e: Fraction(c) for e, c in text_coeffs.items()})


ACCEPTANCE_FORCES: tuple[UniPoly, ...] = (
    _parse_f({2: 6, 0: 5}),          # 6x^2 + 5
    _parse_f({2: 1}),                # x^2
    _parse_f({3: 1, 1: -1}),         # x^3 - x
    _parse_f({5: 1, 2: 2, 0: -1}),   # x^5 + 2x^2 - 1
)


def run_criterion_1(seed: int = 0, threads: int | None = None) -> CriterionResult:
    """Commutant dimension floor((M-1)/2)+1 with every element a K[H]-multiple."""
    t0 = time.perf_counter()
    failures = []
    total = 0
    for f in ACCEPTANCE_FORCES:
        for M in (1, 3, 5, 7):
            total += 1
            basis = commutant.solve_commutant(f, M)
            expected = (M - 1) // 2 + 1
            if basis.dimension != expected:
                failures.append(f"f={f}, M={M}: dimension {basis.dimension} != {expected}")
                continue
            for gamma in basis.basis:
                try:
                    commutant.decompose_in_H(f, gamma)
                except NotAMultiple as exc:
                    failures.append(f"f={f}, M={M}: {exc}")
                    break
    detail = (f"{total - len(failures)}/{total} (f, M) pairs have dimension "
              f"floor((M-1)/2)+1 with all basis elements energy multiples")
    if failures:
        detail += "; first failure: " + failures[0]
    return _timed("1-rank-one-certificate", not failures, detail, t0)


def companion_grid(seed: int, count: int = 200) -> list[tuple[int, ...]]:
    """count distinct nonzero affine coefficient tuples from {-2..2}^6."""
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    while len(seen) < count:
        tup = tuple(rng.randint(-2, 2) for _ in range(6))
        if any(tup):
            seen.add(tup)
    return sorted(seen)


def run_criterion_2(seed: int = 0, threads: int | None = None) -> CriterionResult:
    """f = x sharpness plus exact companions across the affine grid."""
    t0 = time.perf_counter()
    problems = []
    x = UniPoly.x()
    basis = commutant.solve_commutant(x, 1)
    extraneous = 0
    for gamma in basis.basis:
        try:
            commutant.decompose_in_H(x, gamma)
        except NotAMultiple:
            extraneous += 1
    if extraneous == 0:
        problems.append("f=x, M=1: every commutant element decomposed (should not)")

    grid = companion_grid(seed)
    bad = 0
    for a, b, c, e, f, g in grid:
        d = PlanarDerivation(
            Fraction(a) * BiPoly.x() + Fraction(b) * BiPoly.y() + BiPoly.const(c),
            Fraction(e) * BiPoly.x() + Fraction(f) * BiPoly.y() + BiPoly.const(g),
        )
        try:
            res = flows.companion_for_linear(d)
        except Exception as exc:  # any raise is a failure here
            bad += 1
            problems.append(f"grid {a,b,c,e,f,g}: {type(exc).__name__}: {exc}")
            continue
        if not d.bracket(res.delta).is_zero:
            bad += 1
            problems.append(f"grid {a,b,c,e,f,g}: nonzero bracket")
        elif (d.act_x * res.delta.act_y - d.act_y * res.delta.act_x).is_zero:
            bad += 1
            problems.append(f"grid {a,b,c,e,f,g}: companion not transversal")
    detail = (f"f=x commutant has {extraneous} non-multiple element(s); "
              f"{len(grid) - bad}/{len(grid)} grid companions commute exactly "
              f"and are transversal")
    if problems:
        detail += "; first failure: " + problems[0]
    return _timed("2-negative-control", not problems, detail, t0)


def run_criterion_3(seed: int = 0, threads: int | None = None) -> CriterionResult:
    """Parity-system dimensions and forced coefficients for f = x^2, x^3, m <= 8."""
    t0 = time.perf_counter()
    x = UniPoly.x()
    failures = []
    total = 0
    for f in (x ** 2, x ** 3):
        report = parity.check_lemma_suite(f, 8, threads=threads)
        for check in report.checks:
            total += 1
            if not check.passed:
                failures.append(f"f={f}, {check.name}: {check.detail}")
    detail = f"{total - len(failures)}/{total} parity-system checks passed"
    if failures:
        detail += "; first failure: " + failures[0]
    return _timed("3-parity-lemmas", not failures, detail, t0)


def run_criterion_4(seed: int = 0, threads: int | None = None) -> CriterionResult:
    """Obstruction polynomials: degree bound, P(-1) != 0, exact root sets."""
    t0 = time.perf_counter()
    failures = []
    for m in (3, 5, 7, 9, 11):
        ob = obstruction.build_obstruction(m)
        if ob.P.degree > (m + 1) // 2:
            failures.append(f"m={m}: degree {ob.P.degree} exceeds (m+1)/2")
        if ob.P(Fraction(-1)) == 0:
            failures.append(f"m={m}: P(-1) = 0")
        roots = obstruction.rational_roots(ob.P)
        if roots != obstruction.expected_root_set(m):
            failures.append(f"m={m}: root set {sorted(roots)}")
    spot = obstruction.build_obstruction(3).P
    if spot != UniPoly.from_dict({2: Fraction(2), 1: Fraction(4), 0: Fraction(-6)}):
        failures.append(f"P_3 spot value mismatch: {spot}")
    elif obstruction.rational_roots(spot) != {Fraction(1), Fraction(-3)}:
        failures.append("P_3 spot roots mismatch")
    detail = "P_m for m in {3,5,7,9,11}: degree, P(-1) != 0, exact root sets, P_3 spot value"
    if failures:
        detail += "; first failure: " + failures[0]
    return _timed("4-obstruction-roots", not failures, detail, t0)


def run_criterion_5(seed: int = 0, threads: int | None = None) -> CriterionResult:
    """Laurent families commute, annihilate r, satisfy ratios; witness shapes."""
    t0 = time.perf_counter()
    failures = []
    checks = 0
    for k in range(1, 6):
        r = family.first_integral(k)
        for a_top in (Fraction(1), Fraction(-2), Fraction(7, 3)):
            checks += 1
            fam = family.build_family(k, a_top)
            if not fam.alpha.bracket(fam.beta).is_zero:
                failures.append(f"k={k}, a_top={a_top}: nonzero bracket")
            if not fam.alpha.apply(r).is_zero:
                failures.append(f"k={k}, a_top={a_top}: alpha(r) != 0")
            if not fam.ratio_identity_holds():
                failures.append(f"k={k}, a_top={a_top}: ratio identity fails")
    for m in (3, 5, 7, 9, 11):
        for k in range(1, (m - 1) // 2 + 1):
            checks += 1
            w = family.pm_witness(m, k)
            alpha = family.build_family(k).alpha
            if not alpha.bracket(w).is_zero:
                failures.append(f"m={m}, k={k}: witness does not commute")
            if w.act_y.y_degree != m or w.act_y.ycoeff(m).is_zero:
                failures.append(f"m={m}, k={k}: d_m missing")
    detail = f"{checks - len(failures)}/{checks} family/witness checks passed"
    if failures:
        detail += "; first failure: " + failures[0]
    return _timed("5-laurent-family", not failures, detail, t0)


def run_criterion_6(seed: int = 0, threads: int | None = None) -> CriterionResult:
    """Closed-form regression and rectification defect for the example flow."""
    t0 = time.perf_counter()
    failures = []
    d, delta, ev = flows.example_fixture()
    traj = flows.rk4_flow(d, 0.0, 1.0, 1.0, 10_000)
    err = max(max(abs(xv - ev(t)[0]), abs(yv - ev(t)[1])) for t, xv, yv in traj)
    if err > 1e-6:
        failures.append(f"trajectory error {err:.3e} > 1e-6")
    report = flows.rectification_defect(d, delta, 0, 1, 1.0, 10_000,
                                        reference=lambda t: ev(t))
    if report.max_defect > 1e-6:
        failures.append(f"max defect {report.max_defect:.3e} > 1e-6")
    detail = (f"trajectory error {err:.3e}, rectification defect "
              f"{report.max_defect:.3e} (tolerance 1e-6, 10^4 steps)")
    if failures:
        detail += "; first failure: " + failures[0]
    return _timed("6-classical-formula", not failures, detail, t0)


def _random_unipoly(rng: random.Random, max_deg: int) -> UniPoly:
    deg = rng.randint(0, max_deg)
    return UniPoly([Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                    for _ in range(deg + 1)])


def _random_bipoly(rng: random.Random, max_deg: int = 3) -> BiPoly:
    return BiPoly([_random_unipoly(rng, max_deg)
                   for _ in range(rng.randint(1, max_deg + 1))])


def _random_derivation(rng: random.Random) -> PlanarDerivation:
    return PlanarDerivation(_random_bipoly(rng), _random_bipoly(rng))


def run_criterion_7(seed: int = 0, threads: int | None = None) -> CriterionResult:
    """Randomized ring axioms: Leibniz, Jacobi, integrate-then-differentiate."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for i in range(200):
        D = _random_derivation(rng)
        p, q = _random_bipoly(rng), _random_bipoly(rng)
        if D.apply(p * q) != D.apply(p) * q + p * D.apply(q):
            failures.append(f"case {i}: Leibniz fails")
        D2, D3 = _random_derivation(rng), _random_derivation(rng)
        jac = (D.bracket(D2).bracket(D3) + D2.bracket(D3).bracket(D)
               + D3.bracket(D).bracket(D2))
        if not jac.is_zero:
            failures.append(f"case {i}: Jacobi fails")
        u = _random_unipoly(rng, 6)
        if u.integrate_dx().derivative() != u:
            failures.append(f"case {i}: integrate-then-differentiate fails")
    for i in range(50):
        f = _random_unipoly(rng, 6)
        delta_f = newton_derivation(f)
        if not delta_f.apply(hamiltonian(f)).is_zero:
            failures.append(f"energy case {i}: delta_f(H) != 0")
        if not divergence(delta_f).is_zero:
            failures.append(f"energy case {i}: divergence != 0")
    detail = ("200 Leibniz/Jacobi/integration cases and 50 energy-conservation "
              "cases, all exact")
    if failures:
        detail = f"{len(failures)} failures; first: " + failures[0]
    return _timed("7-calculus-kernel", not failures, detail, t0)


CRITERIA = (run_criterion_1, run_criterion_2, run_criterion_3, run_criterion_4,
            run_criterion_5, run_criterion_6, run_criterion_7)


def run_all(seed: int = 0, threads: int | None = None) -> list[CriterionResult]:
    results = [fn(seed=seed, threads=threads) for fn in CRITERIA]
    return sorted(results, key=lambda r: r.name)
