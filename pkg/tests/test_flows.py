"""Linearization companions, numeric flows, and the rectification check."""

import math

import pytest

from newtcomm import (
    HypothesisViolation,
    InvalidInput,
    PlanarDerivation,
    SingularDelta,
    UniPoly,
    adaptive_simpson,
    companion_for_linear,
    example_fixture,
    newton_derivation,
    parse_bipoly,
    rectification_defect,
    rk4_flow,
)


def D(dx: str, dy: str) -> PlanarDerivation:
    return PlanarDerivation(parse_bipoly(dx), parse_bipoly(dy))


class TestCompanionForLinear:
    def test_newton_linear(self):
        res = companion_for_linear(D("y", "x"))
        assert res.case_label == "case2"
        assert res.delta == D("x", "y")

    def test_constant_field(self):
        res = companion_for_linear(D("3", "5"))
        assert res.case_label == "case0"
        assert companion_for_linear(D("3", "5")).delta.commutes_with(D("3", "5"))

    def test_no_x_component(self):
        # d = (0, 2x+1): the returned companion commutes and is transversal
        d = D("0", "2*x + 1")
        res = companion_for_linear(d)
        assert res.case_label.startswith("case4a")
        assert res.delta == D("2*x + 1", "2*y")

    def test_every_companion_commutes_and_is_transversal(self):
        import itertools
        import random

        rng = random.Random(7)
        coeff_pool = list(itertools.product(range(-2, 3), repeat=6))
        rng.shuffle(coeff_pool)
        picked = 0
        for a, b, c, e, f, g in coeff_pool:
            if not any((a, b, c, e, f, g)):
                continue
            if picked >= 60:
                break
            picked += 1
            d = PlanarDerivation(
                parse_bipoly("x") * a + parse_bipoly("y") * b + c,
                parse_bipoly("x") * e + parse_bipoly("y") * f + g,
            )
            res = companion_for_linear(d)
            assert d.commutes_with(res.delta)
            det = d.act_x * res.delta.act_y - d.act_y * res.delta.act_x
            assert not det.is_zero

    def test_zero_rejected(self):
        with pytest.raises(InvalidInput):
            companion_for_linear(D("0", "0"))

    def test_nonlinear_rejected(self):
        with pytest.raises(HypothesisViolation):
            companion_for_linear(D("x^2", "y"))
        with pytest.raises(HypothesisViolation):
            companion_for_linear(D("x*y", "1"))


class TestNumerics:
    def test_rk4_reproduces_exponential(self):
        # x' = x from x(0) = 1
        d = D("x", "0")
        path = rk4_flow(d, 1.0, 0.0, 1.0, 200)
        t, x, _ = path[-1]
        assert t == pytest.approx(1.0)
        assert x == pytest.approx(math.e, abs=1e-9)

    def test_rk4_step_refinement(self):
        d = D("x", "0")
        err = []
        for steps in (20, 40):
            _, x, _ = rk4_flow(d, 1.0, 0.0, 1.0, steps)[-1]
            err.append(abs(x - math.e))
        # fourth-order method: doubling steps shrinks the error ~16x
        assert err[1] < err[0] / 8

    def test_rk4_path_shape(self):
        d = D("y", "0")
        path = rk4_flow(d, 0.0, 1.0, 2.0, 4)
        assert len(path) == 5
        assert path[0] == (0.0, 0.0, 1.0)
        assert path[-1][1] == pytest.approx(2.0)

    def test_adaptive_simpson_known_integrals(self):
        assert adaptive_simpson(math.sin, 0.0, math.pi) == pytest.approx(
            2.0, abs=1e-9
        )
        assert adaptive_simpson(lambda s: 1.0 / (1.0 + s * s), 0.0, 1.0) == (
            pytest.approx(math.pi / 4, abs=1e-9)
        )
        assert adaptive_simpson(lambda s: s * s, -1.0, 2.0) == pytest.approx(
            3.0, abs=1e-12
        )


class TestRectification:
    def test_straight_line_pair(self):
        # d = (1, 0), delta = (0, 1): F is the identity up to the base point
        report = rectification_defect(D("1", "0"), D("0", "1"), 0, 0, 1.0, 64)
        assert report.passed
        assert report.max_defect < 1e-9

    def test_tangent_example_regression(self):
        d, delta, evaluator = example_fixture()
        report = rectification_defect(
            d, delta, 0, 1, 1.0, 10_000, reference=lambda t: evaluator(t)
        )
        assert report.passed
        assert report.max_defect < 1e-6
        assert report.trajectory_error is not None
        assert report.trajectory_error < 1e-6

    def test_hyperbolic_pair_before_the_singularity(self):
        # d = (y, x) flowing from (2, 1) stays clear of |y| = |x| until
        # roughly t = 0.45; the check passes on [0, 0.4]
        report = rectification_defect(D("y", "x"), D("x", "y"), 2, 1, 0.4, 4000)
        assert report.passed

    def test_hyperbolic_pair_hits_the_singularity(self):
        # ... and by t = 1 the quadrature path crosses det = y^2 - x^2 = 0
        with pytest.raises(SingularDelta):
            rectification_defect(D("y", "x"), D("x", "y"), 2, 1, 1.0, 4000)

    def test_non_commuting_rejected_exactly(self):
        with pytest.raises(HypothesisViolation):
            rectification_defect(D("1", "0"), D("x", "y"), 0, 0, 1.0, 10)

    def test_parallel_fields_rejected(self):
        d = D("1", "1")
        with pytest.raises(SingularDelta):
            rectification_defect(d, d, 0, 0, 1.0, 10)

    def test_singular_base_point(self):
        # delta = (x, y) vanishes at the origin: Delta(0,0) = 0 exactly
        with pytest.raises(SingularDelta):
            rectification_defect(D("y", "x"), D("x", "y"), 0, 0, 1.0, 10)

    def test_newton_with_energy_multiple_is_rejected(self):
        # gamma = H * d commutes with d but det(d, H d) = 0 identically
        f = UniPoly([0, 0, 1])
        d = newton_derivation(f)
        from newtcomm import hamiltonian

        gamma = d.scale(hamiltonian(f))
        with pytest.raises(SingularDelta):
            rectification_defect(d, gamma, 1, 1, 0.5, 100)
