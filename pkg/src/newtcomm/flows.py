"""Commuting companions for degree-one fields, and a numeric rectification check.

Every nonzero derivation d with affine components admits an exactly
commuting, generically transversal companion delta, found by a case split
on the coefficients of d(x) = ax+by+c, d(y) = ex+fy+g.  The companion and
(for the shifted/sheared cases) the change of coordinates that produced it
are returned in the ORIGINAL variables, with the bracket re-verified to be
exactly zero before returning.

The numeric half integrates the flow of d and checks the rectifying map

    F1 = int_{x0}^{x} g2/Delta dr + int_{y0}^{y} -g1(x0,s)/Delta(x0,s) ds
    F2 = int_{x0}^{x} -f2/Delta dr + int_{y0}^{y} f1(x0,s)/Delta(x0,s) ds

(Delta = f1 g2 - f2 g1 for d = (f1, f2), delta = (g1, g2)) against the
identity F(x(t), y(t)) = (t, 0) along the trajectory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .derivations import PlanarDerivation
from .errors import HypothesisViolation, InvalidInput, SingularDelta
from .poly import BiPoly


# ---------------------------------------------------------------- companions

@dataclass(frozen=True)
class LinearizationResult:
    delta: PlanarDerivation
    case_label: str
    change_of_coords: str | None = None


def _affine_coeffs(p: BiPoly) -> tuple[Fraction, Fraction, Fraction]:
    """p = a*x + b*y + c, or HypothesisViolation."""
    if p.y_degree > 1 or p.ycoeff(0).degree > 1 or p.ycoeff(1).degree > 0:
        raise HypothesisViolation("component has total degree > 1")
    return p.ycoeff(0).coeff(1), p.ycoeff(1).coeff(0), p.ycoeff(0).coeff(0)


def _affine(a: Fraction, b: Fraction, c: Fraction) -> BiPoly:
    return a * BiPoly.x() + b * BiPoly.y() + BiPoly.const(c)


def _solve_first_constant(c: Fraction, e: Fraction, f: Fraction,
                          g: Fraction) -> tuple[BiPoly, BiPoly]:
    """Companion for (c, e*x + f*y + g) with constant first component."""
    if f != 0:
        return BiPoly.const(-f), BiPoly.const(e)
    if c != 0:
        return BiPoly.zero(), BiPoly.one()
    return _affine(e, Fraction(0), g), e * BiPoly.y()


def _substituted(p: BiPoly, first: BiPoly, second: BiPoly) -> BiPoly:
    """Rewrite the affine p(x, y) with x := first, y := second."""
    a, b, c = _affine_coeffs(p)
    return a * first + b * second + BiPoly.const(c)


def companion_for_linear(d: PlanarDerivation) -> LinearizationResult:
    """An exactly commuting, transversal companion for an affine derivation."""
    if d.is_zero:
        raise InvalidInput("the zero derivation has no transversal companion")
    a, b, c = _affine_coeffs(d.act_x)
    e, f, g = _affine_coeffs(d.act_y)
    x, y = BiPoly.x(), BiPoly.y()

    change: str | None = None
    if a == b == e == f == 0:
        label = "case0"
        delta = PlanarDerivation(BiPoly.const(-g), BiPoly.const(c))
    elif c == g == 0 and b == e == 0 and a == f:
        label = "case1"
        delta = PlanarDerivation(y, x)
    elif c == g == 0:
        label = "case2"
        delta = PlanarDerivation(x, y)
    elif a * f - b * e != 0:
        label = "case3"
        det = a * f - b * e
        x0 = (-c * f + b * g) / det
        y0 = (-a * g + c * e) / det
        u, v = x - BiPoly.const(x0), y - BiPoly.const(y0)
        if b == e == 0 and a == f:
            delta = PlanarDerivation(v, u)
        else:
            delta = PlanarDerivation(u, v)
        change = f"u = x - ({x0}), v = y - ({y0})"
    elif a == 0 and b == 0:
        label = "case4a"
        dx, dy = _solve_first_constant(c, e, f, g)
        delta = PlanarDerivation(dx, dy)
    else:
        label = "case4b"
        if e == 0 and f == 0:
            # d(y) constant: swap the variables and reuse the constant case
            sx, sy = _solve_first_constant(g, b, a, c)
            delta = PlanarDerivation(_substituted(sy, y, x),
                                     _substituted(sx, y, x))
            change = "swap x<->y"
        elif a != 0:
            # z = e*x - a*y is constant along d; the system in (z, y) has
            # constant first component (e*c - a*g, z + (a+f)*y + g)
            z = _affine(e, -a, Fraction(0))
            sz, sy = _solve_first_constant(e * c - a * g, Fraction(1), a + f, g)
            delta_z = _substituted(sz, z, y)
            delta_y = _substituted(sy, z, y)
            delta = PlanarDerivation((delta_z + a * delta_y) * Fraction(1, e),
                                     delta_y)
            change = f"z = {e}*x - {a}*y"
        else:
            # a = 0, b != 0 forces e = 0; z = f*x - b*y is constant along d
            z = _affine(f, -b, Fraction(0))
            sz, sy = _solve_first_constant(f * c - b * g, Fraction(0), f, g)
            delta_z = _substituted(sz, z, y)
            delta_y = _substituted(sy, z, y)
            delta = PlanarDerivation((delta_z + b * delta_y) * Fraction(1, f),
                                     delta_y)
            change = f"z = {f}*x - {b}*y"

    if not d.bracket(delta).is_zero:
        raise RuntimeError(f"internal: {label} companion does not commute")
    if (d.act_x * delta.act_y - d.act_y * delta.act_x).is_zero:
        raise RuntimeError(f"internal: {label} companion is not transversal")
    return LinearizationResult(delta=delta, case_label=label,
                               change_of_coords=change)


# ------------------------------------------------------------------ numerics

def _float_rows(p: BiPoly) -> list[list[float]]:
    return [[float(c) for c in u.coeffs] for u in p.ycoeffs]


def compile_evaluator(p: BiPoly) -> Callable[[float, float], float]:
    """A float-only evaluator of p, Horner in both variables."""
    rows = _float_rows(p)

    def ev(xv: float, yv: float) -> float:
        total = 0.0
        for row in reversed(rows):
            acc = 0.0
            for cf in reversed(row):
                acc = acc * xv + cf
            total = total * yv + acc
        return total

    return ev


def rk4_flow(d: PlanarDerivation, x0: float, y0: float, t_end: float,
             steps: int) -> list[tuple[float, float, float]]:
    """Classical fixed-step RK4 trajectory [(t, x, y)] of the flow of d."""
    if steps < 1:
        raise InvalidInput("steps must be >= 1")
    fx = compile_evaluator(d.act_x)
    fy = compile_evaluator(d.act_y)
    h = t_end / steps
    t, xv, yv = 0.0, float(x0), float(y0)
    out = [(t, xv, yv)]
    for i in range(steps):
        k1x, k1y = fx(xv, yv), fy(xv, yv)
        k2x = fx(xv + 0.5 * h * k1x, yv + 0.5 * h * k1y)
        k2y = fy(xv + 0.5 * h * k1x, yv + 0.5 * h * k1y)
        k3x = fx(xv + 0.5 * h * k2x, yv + 0.5 * h * k2y)
        k3y = fy(xv + 0.5 * h * k2x, yv + 0.5 * h * k2y)
        k4x, k4y = fx(xv + h * k3x, yv + h * k3y), fy(xv + h * k3x, yv + h * k3y)
        xv += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x)
        yv += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y)
        t = (i + 1) * h
        out.append((t, xv, yv))
    return out


def adaptive_simpson(fn: Callable[[float], float], a: float, b: float,
                     tol: float = 1e-9) -> float:
    """Adaptive Simpson quadrature with Richardson correction."""
    if a == b:
        return 0.0

    def simpson(lo: float, hi: float, flo: float, fmid: float, fhi: float) -> float:
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo: float, hi: float, flo: float, fmid: float, fhi: float,
                whole: float, eps: float, depth: int) -> float:
        mid = 0.5 * (lo + hi)
        fl = fn(0.5 * (lo + mid))
        fr = fn(0.5 * (mid + hi))
        left = simpson(lo, mid, flo, fl, fmid)
        right = simpson(mid, hi, fmid, fr, fhi)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return (recurse(lo, mid, flo, fl, fmid, left, eps / 2.0, depth - 1)
                + recurse(mid, hi, fmid, fr, fhi, right, eps / 2.0, depth - 1))

    fa, fm, fb = fn(a), fn(0.5 * (a + b)), fn(b)
    whole = simpson(a, b, fa, fm, fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 48)


@dataclass(frozen=True)
class FlowCheckReport:
    max_defect: float
    trajectory_error: float | None
    steps: int
    tolerance: float

    @property
    def passed(self) -> bool:
        ok = math.isfinite(self.max_defect) and self.max_defect < self.tolerance
        if self.trajectory_error is not None:
            ok = ok and math.isfinite(self.trajectory_error) \
                and self.trajectory_error < self.tolerance
        return ok


def rectification_defect(
    d: PlanarDerivation,
    delta: PlanarDerivation,
    x0: Fraction | int,
    y0: Fraction | int,
    t_end: float,
    steps: int,
    *,
    quad_tol: float = 1e-9,
    tolerance: float = 1e-6,
    reference: Callable[[float], tuple[float, float]] | None = None,
    checkpoints: int = 33,
) -> FlowCheckReport:
    """max |F(x(t), y(t)) - (t, 0)| along the numeric flow of d.

    The bracket hypothesis is checked exactly, transversality exactly at
    (x0, y0); vanishing of Delta encountered during quadrature raises
    SingularDelta.  trajectory_error is filled when a reference solution
    t -> (x, y) is supplied.
    """
    if not d.bracket(delta).is_zero:
        raise HypothesisViolation("derivations do not commute")
    x0, y0 = Fraction(x0), Fraction(y0)
    delta_poly = d.act_x * delta.act_y - d.act_y * delta.act_x
    if delta_poly.evaluate(x0, y0) == 0:
        raise SingularDelta(f"Delta vanishes at ({x0}, {y0})")

    f1 = compile_evaluator(d.act_x)
    f2 = compile_evaluator(d.act_y)
    g1 = compile_evaluator(delta.act_x)
    g2 = compile_evaluator(delta.act_y)
    dl = compile_evaluator(delta_poly)

    evals = 0

    def guard(v: float) -> float:
        nonlocal evals
        evals += 1
        if abs(v) < 1e-12 or evals > 2_000_000:
            raise SingularDelta("Delta vanishes along the integration path")
        return v

    def scan(fixed: float, lo: float, hi: float, vertical: bool) -> None:
        """Refuse quadrature segments on which Delta changes sign or dips
        to zero; the rectifying integrals are divergent there."""
        samples = [dl(fixed, lo + (hi - lo) * i / 128.0) if vertical
                   else dl(lo + (hi - lo) * i / 128.0, fixed)
                   for i in range(129)]
        scale = max(abs(v) for v in samples)
        if scale == 0.0 or min(samples) < 0.0 < max(samples) \
                or min(abs(v) for v in samples) < 1e-9 * scale:
            raise SingularDelta("Delta vanishes along the integration path")

    traj = rk4_flow(d, float(x0), float(y0), t_end, steps)
    x0f, y0f = float(x0), float(y0)

    traj_err: float | None = None
    if reference is not None:
        traj_err = 0.0
        for t, xv, yv in traj:
            rx, ry = reference(t)
            traj_err = max(traj_err, abs(xv - rx), abs(yv - ry))

    marks = sorted({round(i * steps / max(checkpoints - 1, 1))
                    for i in range(checkpoints)} | {0, steps})
    max_defect = 0.0
    for idx in marks:
        t, xv, yv = traj[idx]
        scan(x0f, y0f, yv, vertical=True)
        scan(yv, x0f, xv, vertical=False)
        F1 = adaptive_simpson(lambda r: g2(r, yv) / guard(dl(r, yv)),
                              x0f, xv, quad_tol) \
            + adaptive_simpson(lambda s: -g1(x0f, s) / guard(dl(x0f, s)),
                               y0f, yv, quad_tol)
        F2 = adaptive_simpson(lambda r: -f2(r, yv) / guard(dl(r, yv)),
                              x0f, xv, quad_tol) \
            + adaptive_simpson(lambda s: f1(x0f, s) / guard(dl(x0f, s)),
                               y0f, yv, quad_tol)
        max_defect = max(max_defect, abs(F1 - t), abs(F2))
    return FlowCheckReport(max_defect=max_defect, trajectory_error=traj_err,
                           steps=steps, tolerance=tolerance)


def example_fixture() -> tuple[PlanarDerivation, PlanarDerivation,
                               Callable[[float, float, float], tuple[float, float]]]:
    """The divergence-free pair d = (1+x^2, -2xy), delta = (0, y) and the
    closed-form flow x(t) = tan(t + atan x0), y(t) = y0 (1+x0^2) cos^2(...)."""
    d = PlanarDerivation(
        BiPoly.one() + BiPoly.x() * BiPoly.x(),
        BiPoly.monomial(1, 1, Fraction(-2)),
    )
    delta = PlanarDerivation(BiPoly.zero(), BiPoly.y())

    def evaluator(t: float, x0: float = 0.0, y0: float = 1.0) -> tuple[float, float]:
        th = t + math.atan(x0)
        return math.tan(th), y0 * (1.0 + x0 * x0) * math.cos(th) ** 2

    return d, delta, evaluator
