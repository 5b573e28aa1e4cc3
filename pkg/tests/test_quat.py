import numpy as np
import pytest
from hypothesis import given, strategies as st

from hyperfourier.quat import (
    I,
    J,
    K,
    ONE,
    Quaternion,
    axis_exp,
    axis_exp_array,
    qconj,
    qmul,
    qnorm,
    qnorm_sq,
    qscalar,
    qsplit,
)

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
quats = st.tuples(finite, finite, finite, finite).map(lambda t: Quaternion(*t))


class TestUnitTable:
    def test_defining_relations(self):
        assert I * J == K
        assert J * K == I
        assert K * I == J
        assert J * I == -K
        assert I * I == -ONE
        assert J * J == -ONE
        assert K * K == -ONE

    def test_known_product(self):
        # (1+2i+3j+4k)(5+6i+7j+8k), multiplied out by hand
        p = Quaternion(1, 2, 3, 4)
        q = Quaternion(5, 6, 7, 8)
        assert (p * q).isclose(Quaternion(-60, 12, 30, 24))
        # reversed order differs in the vector part
        assert (q * p).isclose(Quaternion(-60, 20, 14, 32))

    def test_norm_and_conj(self):
        q = Quaternion(1, 2, 3, 4)
        assert qnorm_sq(q.as_array()) == pytest.approx(30.0)
        assert q.conj().isclose(Quaternion(1, -2, -3, -4))
        assert (q * q.conj()).isclose(Quaternion(30, 0, 0, 0))
        assert q.scalar_part() == 1.0

    def test_division_by_scalar(self):
        q = Quaternion(2, 4, 6, 8)
        assert (q / 2).isclose(Quaternion(1, 2, 3, 4))


class TestSplit:
    def test_frozen_split(self):
        # q = 1+2i+3j+4k: plus half ((r+k)/2, (i-j)/2, -(i-j)/2, (r+k)/2)
        plus, minus = Quaternion(1, 2, 3, 4).split()
        assert plus.isclose(Quaternion(2.5, -0.5, 0.5, 2.5))
        assert minus.isclose(Quaternion(-1.5, 2.5, 2.5, 1.5))

    def test_split_of_one(self):
        plus, minus = ONE.split()
        assert plus.isclose(Quaternion(0.5, 0, 0, 0.5))  # (1+k)/2
        assert minus.isclose(Quaternion(0.5, 0, 0, -0.5))  # (1-k)/2

    @given(quats)
    def test_reconstruction(self, q):
        plus, minus = q.split()
        assert (plus + minus).isclose(q, tol=1e-9)

    @given(quats)
    def test_eigen_relation(self, q):
        # i q_pm j = +-q_pm is what makes the split useful
        plus, minus = q.split()
        assert (I * plus * J).isclose(plus, tol=1e-9)
        assert (I * minus * J).isclose(-minus, tol=1e-9)

    @given(quats)
    def test_half_formula(self, q):
        plus, _ = q.split()
        assert (0.5 * (q + I * q * J)).isclose(plus, tol=1e-9)


class TestArrayOps:
    def test_qmul_matches_object_product(self):
        rng = np.random.default_rng(42)
        a = rng.standard_normal((20, 4))
        b = rng.standard_normal((20, 4))
        got = qmul(a, b)
        for row in range(20):
            want = Quaternion(*a[row]) * Quaternion(*b[row])
            assert np.allclose(got[row], want.as_array(), atol=1e-12)

    def test_broadcasting(self):
        a = np.zeros((3, 5, 4))
        a[..., 1] = 1.0  # field of i
        out = qmul(a, J.as_array())
        assert np.allclose(out[..., 3], 1.0)  # i*j = k
        assert np.allclose(out[..., :3], 0.0)

    @given(quats, quats)
    def test_norm_multiplicative(self, p, q):
        assert (p * q).norm() == pytest.approx(p.norm() * q.norm(), abs=1e-6, rel=1e-9)

    @given(quats, quats)
    def test_conj_antihomomorphism(self, p, q):
        assert (p * q).conj().isclose(q.conj() * p.conj(), tol=1e-6)

    def test_qscalar_qnorm(self):
        arr = np.array([[3.0, 0.0, 4.0, 0.0]])
        assert qscalar(arr)[0] == 3.0
        assert qnorm(arr)[0] == pytest.approx(5.0)
        assert np.allclose(qconj(arr), [[3.0, 0.0, -4.0, 0.0]])

    def test_qsplit_array_matches_object(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((10, 4))
        plus, minus = qsplit(a)
        for row in range(10):
            op, om = Quaternion(*a[row]).split()
            assert np.allclose(plus[row], op.as_array())
            assert np.allclose(minus[row], om.as_array())


class TestAxisExp:
    def test_exp_i_quarter_turn(self):
        assert axis_exp(I, np.pi / 2).isclose(I, tol=1e-12)
        assert axis_exp(J, np.pi).isclose(-ONE, tol=1e-12)

    def test_angle_addition(self):
        a, b = 0.3, 1.1
        lhs = axis_exp(K, a) * axis_exp(K, b)
        assert lhs.isclose(axis_exp(K, a + b), tol=1e-12)

    def test_rejects_non_unit_axis(self):
        with pytest.raises(ValueError):
            axis_exp(Quaternion(0, 2, 0, 0), 0.5)
        with pytest.raises(ValueError):
            axis_exp(Quaternion(1, 1, 0, 0), 0.5)  # nonzero scalar part

    def test_array_variant(self):
        angles = np.linspace(-3, 3, 7)
        arr = axis_exp_array(I, angles)
        assert arr.shape == (7, 4)
        for idx, t in enumerate(angles):
            assert np.allclose(arr[idx], axis_exp(I, t).as_array())
