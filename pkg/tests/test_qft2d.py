"""2D transforms against literal scalar-arithmetic oracles and frozen values."""

import warnings

import numpy as np
import pytest

from hyperfourier.quat import I, J, K, ONE, Quaternion, axis_exp, qmul, qconj
from hyperfourier.radix2 import UnsupportedSizeError
from hyperfourier.qft2d import (
    QSpectrum2D,
    QuaternionField2D,
    _right_sided_sum,
    circular_shift,
    dilate,
    mod_inverse,
    modulate,
    norm_sq,
    qft_forward,
    qft_forward_direct,
    qft_forward_fast,
    qft_inverse,
    qft_inverse_direct,
    qft_inverse_fast,
    qft_via_components,
    qftr_forward,
    qftr_forward_direct,
    qftr_forward_fast,
    qftr_inverse,
    qftr_inverse_direct,
    qftr_inverse_fast,
    quat_inner,
    scalar_inner,
    split_field_pm,
    split_spectrum_pm,
)


def rand_field(seed, m=8, n=8):
    rng = np.random.default_rng(seed)
    return QuaternionField2D(rng.standard_normal((m, n, 4)))


def rel(delta, ref):
    return np.max(np.abs(delta)) / np.max(np.abs(ref))


# slow reference implementations in plain Quaternion arithmetic; these share
# no code with the vectorized paths under test
def loop_qft(field, sign=-1.0):
    m_len, n_len = field.M, field.N
    out = np.zeros((m_len, n_len, 4))
    for a in range(m_len):
        for b in range(n_len):
            acc = Quaternion()
            for x in range(m_len):
                left = axis_exp(I, sign * 2 * np.pi * a * x / m_len)
                for y in range(n_len):
                    right = axis_exp(J, sign * 2 * np.pi * b * y / n_len)
                    acc = acc + left * Quaternion(*field.data[x, y]) * right
            out[a, b] = acc.as_array()
    return out


def loop_qftr(field, sign=-1.0):
    m_len, n_len = field.M, field.N
    out = np.zeros((m_len, n_len, 4))
    for a in range(m_len):
        for b in range(n_len):
            acc = Quaternion()
            for x in range(m_len):
                ei = axis_exp(I, sign * 2 * np.pi * a * x / m_len)
                for y in range(n_len):
                    ej = axis_exp(J, sign * 2 * np.pi * b * y / n_len)
                    acc = acc + Quaternion(*field.data[x, y]) * ei * ej
            out[a, b] = acc.as_array()
    return out


class TestDirectAgainstLoops:
    def test_two_sided(self):
        f = rand_field(0, 4, 4)
        assert rel(qft_forward_direct(f).data - loop_qft(f), loop_qft(f)) < 1e-13

    def test_right_sided(self):
        f = rand_field(1, 4, 4)
        assert rel(qftr_forward_direct(f).data - loop_qftr(f), loop_qftr(f)) < 1e-13

    def test_rectangular(self):
        f = rand_field(2, 4, 8)
        assert rel(qft_forward_direct(f).data - loop_qft(f), loop_qft(f)) < 1e-13


class TestFrozenValues:
    def test_delta_j_distinguishes_the_transforms(self):
        # f = j at lattice point (1, 0), zero elsewhere, 4x4 grid.
        # Two-sided at (m,n)=(1,0): e^{-i pi/2} j = -i j = -k.
        # Right-sided: j e^{-i pi/2} = j (-i) = +k.
        f = QuaternionField2D(np.zeros((4, 4, 4)))
        f.data[1, 0, 2] = 1.0
        two = qft_forward_direct(f).data
        right = qftr_forward_direct(f).data
        assert np.allclose(two[1, 0], [0, 0, 0, -1], atol=1e-14)
        assert np.allclose(right[1, 0], [0, 0, 0, 1], atol=1e-14)
        # (m,n)=(2,0): e^{-i pi} j = -j either way
        assert np.allclose(two[2, 0], [0, 0, -1, 0], atol=1e-13)
        assert np.allclose(right[2, 0], [0, 0, -1, 0], atol=1e-13)

    def test_dc_spectrum_of_constants(self):
        f = QuaternionField2D(np.tile(np.array([1.0, 2.0, -1.0, 0.5]), (4, 4, 1)))
        spec = qft_forward_direct(f).data
        assert np.allclose(spec[0, 0], [16, 32, -16, 8], atol=1e-12)
        spec[0, 0] = 0.0
        assert np.max(np.abs(spec)) < 1e-12

    def test_dc_only_spectrum_inverts_to_constant(self):
        spec = QSpectrum2D(np.zeros((4, 4, 4)))
        spec.data[0, 0] = [16.0, 0.0, 0.0, 16.0]
        back = qft_inverse_direct(spec)
        assert np.allclose(back.data, np.tile([1.0, 0, 0, 1.0], (4, 4, 1)))

    def test_real_even_field_has_cosine_spectrum(self):
        # f(x, y) = cos(2pi x / 8): spectrum 0.5*M*N at (1,0) and (7,0)
        x = np.arange(8)
        f = QuaternionField2D(
            np.stack(
                [np.tile(np.cos(2 * np.pi * x / 8)[:, None], (1, 8))]
                + [np.zeros((8, 8))] * 3,
                axis=-1,
            )
        )
        spec = qft_forward_direct(f).data
        assert spec[1, 0, 0] == pytest.approx(32.0, abs=1e-10)
        assert spec[7, 0, 0] == pytest.approx(32.0, abs=1e-10)


class TestRoundTrips:
    @pytest.mark.parametrize("fwd,inv", [
        (qft_forward_direct, qft_inverse_direct),
        (qft_forward_fast, qft_inverse_fast),
        (qftr_forward_direct, qftr_inverse_direct),
        (qftr_forward_fast, qftr_inverse_fast),
    ])
    def test_inverse_recovers_field(self, fwd, inv):
        f = rand_field(3, 8, 16)
        assert rel(inv(fwd(f)).data - f.data, f.data) < 1e-12

    def test_cross_paths(self):
        # fast forward with direct inverse and vice versa
        f = rand_field(4)
        assert rel(qft_inverse_direct(qft_forward_fast(f)).data - f.data, f.data) < 1e-12
        assert rel(qft_inverse_fast(qft_forward_direct(f)).data - f.data, f.data) < 1e-12

    def test_spacings_preserved(self):
        f = QuaternionField2D(np.zeros((4, 4, 4)), dx=0.25, dy=2.0)
        f.data[0, 0, 0] = 1.0
        spec = qft_forward(f)
        assert (spec.dx, spec.dy) == (0.25, 2.0)
        assert np.allclose(spec.freq_x(), 2 * np.pi * np.fft.fftfreq(4, 0.25))

    def test_wrong_inverse_exponential_order_breaks(self):
        # the right-sided inverse must apply the j factor before the i factor;
        # keeping the forward order gives back a different field
        f = rand_field(5)
        spec = qftr_forward_direct(f)
        wrong = _right_sided_sum(spec.data, 1.0, j_first=False) / (f.M * f.N)
        assert rel(wrong - f.data, f.data) > 1e-2


class TestFastPaths:
    @pytest.mark.parametrize("fast,direct", [
        (qft_forward_fast, qft_forward_direct),
        (qft_inverse_fast, qft_inverse_direct),
        (qftr_forward_fast, qftr_forward_direct),
        (qftr_inverse_fast, qftr_inverse_direct),
    ])
    def test_matches_direct(self, fast, direct):
        f = rand_field(6, 16, 16)
        arg = f if "forward" in fast.__name__ else QSpectrum2D(f.data)
        got = fast(arg).data
        want = direct(arg).data
        assert rel(got - want, want) < 1e-12

    def test_rectangular_grid(self):
        f = rand_field(7, 4, 16)
        want = qft_forward_direct(f).data
        assert rel(qft_forward_fast(f).data - want, want) < 1e-12

    def test_fast_requires_power_of_two(self):
        f = rand_field(8, 6, 6)
        with pytest.raises(UnsupportedSizeError):
            qft_forward_fast(f)
        with pytest.raises(UnsupportedSizeError):
            qftr_forward_fast(f)

    def test_auto_falls_back_with_warning(self):
        f = rand_field(9, 6, 6)
        with pytest.warns(RuntimeWarning):
            spec = qft_forward(f, path="auto")
        want = qft_forward_direct(f).data
        assert np.allclose(spec.data, want, atol=1e-12)
        with warnings.catch_warnings():
            warnings.simplefilter("error")  # no warning on power-of-two sizes
            qft_forward(rand_field(10), path="auto")

    def test_bad_path_name(self):
        with pytest.raises(ValueError):
            qft_forward(rand_field(11), path="quick")

    def test_via_components_matches(self):
        f = rand_field(12)
        want = qft_forward_direct(f).data
        assert rel(qft_via_components(f).data - want, want) < 1e-12

    def test_via_components_real_field(self):
        data = np.zeros((8, 8, 4))
        data[..., 0] = np.random.default_rng(13).standard_normal((8, 8))
        f = QuaternionField2D(data)
        want = qft_forward_direct(f).data
        assert rel(qft_via_components(f).data - want, want) < 1e-13


class TestSplit:
    def test_split_of_constant_one(self):
        f = QuaternionField2D(np.tile([1.0, 0, 0, 0], (4, 4, 1)))
        plus, minus = split_field_pm(f)
        assert np.allclose(plus.data, np.tile([0.5, 0, 0, 0.5], (4, 4, 1)))
        assert np.allclose(minus.data, np.tile([0.5, 0, 0, -0.5], (4, 4, 1)))

    def test_split_of_constant_i(self):
        f = QuaternionField2D(np.tile([0.0, 1.0, 0, 0], (4, 4, 1)))
        plus, minus = split_field_pm(f)
        # i(1+k)/2 = (i-j)/2, i(1-k)/2 = (i+j)/2
        assert np.allclose(plus.data, np.tile([0, 0.5, -0.5, 0], (4, 4, 1)))
        assert np.allclose(minus.data, np.tile([0, 0.5, 0.5, 0], (4, 4, 1)))

    def test_split_commutes_with_transform(self):
        f = rand_field(14)
        plus, minus = split_field_pm(f)
        sp_plus, sp_minus = split_spectrum_pm(qft_forward(f))
        assert rel(qft_forward(plus).data - sp_plus.data, sp_plus.data) < 1e-12
        assert rel(qft_forward(minus).data - sp_minus.data, sp_minus.data) < 1e-12

    def test_plus_ideal_closed_under_transform(self):
        f = rand_field(15)
        plus, _ = split_field_pm(f)
        _, leak = split_spectrum_pm(qft_forward(plus))
        assert np.max(np.abs(leak.data)) < 1e-12 * np.max(np.abs(plus.data))


class TestLatticeLaws:
    def test_shift_law(self):
        f = rand_field(16)
        spec = qft_forward(f).data
        for x0, y0 in ((1, 0), (0, 3), (5, 2)):
            got = qft_forward(circular_shift(f, x0, y0)).data
            theta = 2 * np.pi * x0 * np.arange(8) / 8
            phi = 2 * np.pi * y0 * np.arange(8) / 8
            left = np.stack([np.cos(theta), -np.sin(theta), np.zeros(8), np.zeros(8)], -1)
            right = np.stack([np.cos(phi), np.zeros(8), -np.sin(phi), np.zeros(8)], -1)
            want = qmul(left[:, None], qmul(spec, right[None, :]))
            assert rel(got - want, want) < 1e-12

    def test_modulation_law(self):
        f = rand_field(17)
        spec = qft_forward(f).data
        for m0, n0 in ((1, 0), (3, 5)):
            got = qft_forward(modulate(f, m0, n0)).data
            want = np.roll(spec, (m0, n0), axis=(0, 1))
            assert rel(got - want, want) < 1e-12

    def test_modulate_zero_is_identity(self):
        f = rand_field(18)
        assert np.allclose(modulate(f, 0, 0).data, f.data)

    def test_unit_powers_slide_out(self):
        f = rand_field(19)
        spec = qft_forward(f).data
        i_pow = [ONE, I, -ONE, -I]
        j_pow = [ONE, J, -ONE, -J]
        for m in range(4):
            for n in range(4):
                g = QuaternionField2D(
                    qmul(i_pow[m].as_array(), qmul(f.data, j_pow[n].as_array()))
                )
                got = qft_forward(g).data
                want = qmul(i_pow[m].as_array(), qmul(spec, j_pow[n].as_array()))
                assert rel(got - want, spec) < 1e-12

    def test_k_does_not_slide_out(self):
        f = rand_field(20)
        g = QuaternionField2D(qmul(K.as_array(), f.data))
        got = qft_forward(g).data
        want = qmul(K.as_array(), qft_forward(f).data)
        assert rel(got - want, want) > 1e-2  # k is in neither constant class

    def test_dilation_law(self):
        f = rand_field(21)
        spec = qft_forward(f).data
        for a, b in ((3, 1), (5, 7)):
            got = qft_forward(dilate(f, a, b)).data
            xi = (mod_inverse(a, 8) * np.arange(8)) % 8
            yi = (mod_inverse(b, 8) * np.arange(8)) % 8
            want = spec[np.ix_(xi, yi)]
            assert rel(got - want, want) < 1e-12

    def test_dilate_rejects_non_units(self):
        with pytest.raises(ValueError):
            dilate(rand_field(22), 2, 1)  # gcd(2, 8) != 1


class TestInnerProducts:
    def test_scalar_plancherel(self):
        f, g = rand_field(23), rand_field(24)
        lhs = scalar_inner(f.data, g.data)
        rhs = scalar_inner(qft_forward(f).data, qft_forward(g).data) / 64
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_parseval_both_transforms(self):
        f = rand_field(25)
        assert norm_sq(f.data) == pytest.approx(norm_sq(qft_forward(f).data) / 64, rel=1e-12)
        assert norm_sq(f.data) == pytest.approx(norm_sq(qftr_forward(f).data) / 64, rel=1e-12)
        assert norm_sq(qft_forward(f).data) == pytest.approx(
            norm_sq(qftr_forward(f).data), rel=1e-12
        )

    def test_quaternion_plancherel_right_sided_only(self):
        f, g = rand_field(26), rand_field(27)
        lhs = quat_inner(f.data, g.data)
        right = quat_inner(qftr_forward(f).data, qftr_forward(g).data) / 64
        assert np.allclose(lhs, right, atol=1e-10)
        two = quat_inner(qft_forward(f).data, qft_forward(g).data) / 64
        assert np.max(np.abs(lhs - two)) > 1e-3  # fails for the two-sided kernel

    def test_quaternion_plancherel_concrete_counterexample(self):
        # delta pair with overlapping support: lhs = j exactly, two-sided rhs = 0
        f = QuaternionField2D(np.zeros((8, 8, 4)))
        g = QuaternionField2D(np.zeros((8, 8, 4)))
        f.data[1, 0, 2] = 1.0
        g.data[1, 0, 0] = 1.0
        lhs = quat_inner(f.data, g.data)
        assert np.allclose(lhs, [0, 0, 1, 0])
        rhs = quat_inner(qft_forward(f).data, qft_forward(g).data) / 64
        assert np.max(np.abs(rhs)) < 1e-12
        assert np.max(np.abs(lhs - rhs)) > 1e-1


class TestQftrLaws:
    def test_full_left_linearity(self):
        f, g = rand_field(28), rand_field(29)
        alpha = Quaternion(0.3, -1.2, 0.7, 2.0)  # arbitrary, not span{1,i}
        mixed = QuaternionField2D(qmul(alpha.as_array(), f.data) + g.data)
        got = qftr_forward(mixed).data
        want = qmul(alpha.as_array(), qftr_forward(f).data) + qftr_forward(g).data
        assert rel(got - want, want) < 1e-12

    def test_two_sided_has_no_full_left_linearity(self):
        f = rand_field(30)
        got = qft_forward(QuaternionField2D(qmul(K.as_array(), f.data))).data
        want = qmul(K.as_array(), qft_forward(f).data)
        assert rel(got - want, want) > 1e-2

    def test_equals_two_sided_on_i_commuting_fields(self):
        rng = np.random.default_rng(31)
        data = np.zeros((8, 8, 4))
        data[..., :2] = rng.standard_normal((8, 8, 2))
        f = QuaternionField2D(data)
        assert np.allclose(qftr_forward(f).data, qft_forward(f).data, atol=1e-10)

    def test_differs_from_two_sided_generically(self):
        f = rand_field(32)
        d = qftr_forward(f).data - qft_forward(f).data
        assert rel(d, qft_forward(f).data) > 1e-2
