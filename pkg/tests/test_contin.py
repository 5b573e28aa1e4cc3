"""Quadrature transform against Gaussian closed forms, plus the GL(2) law."""

import numpy as np
import pytest

from hyperfourier.autom import LinearMap2, reflection_map, rotation
from hyperfourier.contin import (
    AnalyticTestFunction,
    GaussTerm,
    QuadratureSpec,
    cqft_eval,
    cqft_eval_composed,
    cqft_eval_modulated,
    cqft_fd,
    probe_frequencies,
    verify_gl_law,
    verify_modulation_law,
    verify_partial_deriv,
    verify_powers_xy,
    verify_shift_law,
)
from hyperfourier.quat import I, J, ONE, Quaternion

COEFF = Quaternion(0.7, -1.1, 0.4, 2.3)


def gauss_hat(u, v, sx, sy):
    # closed form for a centered degree-(0,0) term with unit coefficient
    return 2 * np.pi * sx * sy * np.exp(-0.5 * ((sx * u) ** 2 + (sy * v) ** 2))


class TestClosedForms:
    def test_centered_gaussian(self):
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_x=1.3, sigma_y=0.8)
        for u, v in ((0.0, 0.0), (0.5, -1.0), (1.7, 0.3)):
            got = cqft_eval(f, u, v).as_array()
            want = gauss_hat(u, v, 1.3, 0.8) * COEFF.as_array()
            assert np.max(np.abs(got - want)) < 1e-11

    def test_offset_gaussian_picks_up_two_sided_phases(self):
        x0, y0 = 0.6, -0.9
        f = AnalyticTestFunction.gaussian(coeff=COEFF, center=(x0, y0))
        u, v = 0.8, 1.1
        left = Quaternion(np.cos(u * x0), -np.sin(u * x0), 0.0, 0.0)
        right = Quaternion(np.cos(v * y0), 0.0, -np.sin(v * y0), 0.0)
        want = (left * (gauss_hat(u, v, 1.0, 1.0) * COEFF) * right).as_array()
        assert np.max(np.abs(cqft_eval(f, u, v).as_array() - want)) < 1e-11

    def test_x_weighted_gaussian_puts_i_on_the_left(self):
        # integral of x e^{-x^2/2 s^2} e^{-iux} dx = -i sqrt(2 pi) s^3 u e^{-s^2u^2/2}
        sx, sy = 1.2, 0.9
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_x=sx, sigma_y=sy, deg_x=1)
        u, v = 0.7, -0.4
        h = np.sqrt(2 * np.pi) * sy * np.exp(-0.5 * (sy * v) ** 2)
        scal = -np.sqrt(2 * np.pi) * sx**3 * u * np.exp(-0.5 * (sx * u) ** 2) * h
        want = (scal * (I * COEFF)).as_array()
        assert np.max(np.abs(cqft_eval(f, u, v).as_array() - want)) < 1e-11

    def test_fd_matches_analytic_spectral_derivatives(self):
        sx, sy = 1.3, 0.8
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_x=sx, sigma_y=sy)
        u, v = 0.9, 0.2
        s = gauss_hat(u, v, sx, sy)
        d_u = (-(sx**2) * u) * s * COEFF.as_array()
        got = cqft_fd(f, u, v, 1, 0).as_array()
        assert np.max(np.abs(got - d_u)) / np.max(np.abs(d_u)) < 1e-5
        d_vv = ((sy**2 * v) ** 2 - sy**2) * s * COEFF.as_array()
        got = cqft_fd(f, u, v, 0, 2).as_array()
        assert np.max(np.abs(got - d_vv)) / np.max(np.abs(d_vv)) < 1e-5

    def test_fd_order_out_of_range(self):
        f = AnalyticTestFunction.gaussian()
        with pytest.raises(ValueError):
            cqft_fd(f, 0.0, 0.0, 3, 0)


class TestFunctionAlgebra:
    def test_derivative_x_of_plain_gaussian(self):
        f = AnalyticTestFunction.gaussian(sigma_x=2.0)
        df = f.derivative_x()
        x, y = 0.7, -0.3
        want = -x / 4.0 * f.evaluate(x, y)
        assert np.allclose(df.evaluate(x, y), want)

    def test_multiply_by_x_tracks_center(self):
        f = AnalyticTestFunction.gaussian(center=(1.5, 0.0))
        xf = f.multiply_by_x()
        x, y = 0.4, 0.2
        assert np.allclose(xf.evaluate(x, y), x * f.evaluate(x, y))

    def test_split_pm_reconstructs(self):
        f = AnalyticTestFunction.gaussian(coeff=COEFF)
        plus, minus = f.split_pm()
        x, y = 0.3, -0.8
        assert np.allclose(plus.evaluate(x, y) + minus.evaluate(x, y), f.evaluate(x, y))

    def test_term_validation(self):
        with pytest.raises(ValueError):
            GaussTerm(ONE, sigma_x=0.0)
        with pytest.raises(ValueError):
            GaussTerm(ONE, deg_x=-1)
        with pytest.raises(ValueError):
            AnalyticTestFunction(())

    def test_probe_grid_shape(self):
        f = AnalyticTestFunction.gaussian(sigma_x=2.0)
        probes = probe_frequencies(f)
        assert probes.shape == (25, 2)
        assert np.max(np.abs(probes[:, 0])) == pytest.approx(1.0)  # 2 / sigma_x


class TestQuadratureSpec:
    def test_narrow_window_rejected(self):
        with pytest.raises(ValueError):
            QuadratureSpec(half_width=4.0)

    def test_coarse_sampling_rejected(self):
        with pytest.raises(ValueError):
            QuadratureSpec(samples=64)

    def test_unknown_rule_rejected(self):
        with pytest.raises(ValueError):
            QuadratureSpec(rule="simpson")


class TestComposedMaps:
    def test_axis_scaling(self):
        # g(x) = f(2x, y):  ghat(u, v) = (1/2) fhat(u/2, v)
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_y=1.4)
        m = LinearMap2(np.diag([2.0, 1.0]))
        u, v = 1.1, -0.6
        lhs = cqft_eval_composed(f, m, u, v).as_array()
        want = 0.5 * cqft_eval(f, u / 2, v).as_array()
        assert np.max(np.abs(lhs - want)) < 1e-11

    def test_negative_determinant_uses_absolute_value(self):
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_y=1.4)
        m = LinearMap2(np.diag([-2.0, 1.0]))
        u, v = 1.1, -0.6
        lhs = cqft_eval_composed(f, m, u, v).as_array()
        want = 0.5 * cqft_eval(f, -u / 2, v).as_array()
        assert np.max(np.abs(lhs - want)) < 1e-11
        # keeping the determinant's sign would flip the result entirely
        signed = -want
        assert np.max(np.abs(lhs - signed)) / np.max(np.abs(lhs)) > 1.0

    def test_rotation_routes_split_halves_oppositely(self):
        # anisotropic real field, probe away from both axes: the minus half
        # must be read at R(theta) u and the plus half at R(-theta) u
        f = AnalyticTestFunction.gaussian(sigma_x=1.0, sigma_y=2.0)
        rot = rotation(np.pi / 6)
        plus, minus = f.split_pm()
        u = np.array([0.9, 0.7])
        wp = rot.matrix @ u
        wm = rot.matrix.T @ u
        lhs = cqft_eval_composed(f, rot, *u).as_array()
        good = (cqft_eval(minus, *wp) + cqft_eval(plus, *wm)).as_array()
        swapped = (cqft_eval(minus, *wm) + cqft_eval(plus, *wp)).as_array()
        scale = np.max(np.abs(lhs))
        assert np.max(np.abs(lhs - good)) / scale < 1e-10
        assert np.max(np.abs(lhs - swapped)) / scale > 1e-1


class TestLawReports:
    def gaussians(self):
        yield AnalyticTestFunction.gaussian(coeff=COEFF, sigma_x=1.2, sigma_y=0.8)
        yield AnalyticTestFunction.gaussian(
            coeff=Quaternion(0.0, 1.0, -0.5, 0.3), deg_x=1, center=(0.4, -0.2)
        )

    def test_gl_law_identity(self):
        rep = verify_gl_law(LinearMap2(np.eye(2)), next(self.gaussians()))
        assert rep.det_abs_inv == 1.0
        assert rep.max_rel < 1e-10
        assert rep.routes_max_abs < 1e-10

    @pytest.mark.parametrize("matrix", [
        np.diag([2.0, 1.0]),
        np.array([[0.0, -1.0], [1.0, 0.0]]),
        np.array([[1.0, 0.4], [-0.3, 0.9]]),
    ])
    def test_gl_law_general_maps(self, matrix):
        for f in self.gaussians():
            rep = verify_gl_law(LinearMap2(matrix), f)
            assert rep.max_rel < 1e-6
            assert rep.routes_max_abs < 1e-9

    def test_gl_law_reflection(self):
        rep = verify_gl_law(reflection_map((1.0, 0.0)), next(self.gaussians()))
        assert rep.max_rel < 1e-6

    def test_partial_derivative_law(self):
        for f in self.gaussians():
            for m, n in ((1, 0), (0, 1), (1, 1), (2, 1)):
                assert verify_partial_deriv(f, m, n) < 1e-10

    def test_partial_derivative_swapped_placement_fails(self):
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_x=1.2, sigma_y=0.8)
        assert verify_partial_deriv(f, 1, 0, swapped=True) > 1e-1

    def test_partial_derivative_order_cap(self):
        with pytest.raises(ValueError):
            verify_partial_deriv(AnalyticTestFunction.gaussian(), 4, 0)

    def test_powers_law(self):
        for f in self.gaussians():
            for m, n in ((1, 0), (0, 1), (1, 1), (2, 2)):
                assert verify_powers_xy(f, m, n) < 1e-4

    def test_powers_swapped_placement_fails(self):
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_x=1.2, sigma_y=0.8)
        assert verify_powers_xy(f, 1, 0, swapped=True) > 1e-1

    def test_powers_order_cap(self):
        with pytest.raises(ValueError):
            verify_powers_xy(AnalyticTestFunction.gaussian(), 3, 0)

    def test_shift_law(self):
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_x=1.2, sigma_y=0.8)
        assert verify_shift_law(f, 0.7, -1.3) < 1e-10

    def test_modulation_law(self):
        f = AnalyticTestFunction.gaussian(coeff=COEFF, sigma_x=1.2, sigma_y=0.8)
        assert verify_modulation_law(f, 0.8, 0.5) < 1e-10
        lhs = cqft_eval_modulated(f, 0.8, 0.5, 1.0, -0.4).as_array()
        rhs = cqft_eval(f, 1.0 - 0.8, -0.4 - 0.5).as_array()
        assert np.max(np.abs(lhs - rhs)) < 1e-11
