import numpy as np
import pytest

from hyperfourier.autom import (
    LinearMap2,
    LinearMap4,
    adjoint,
    b_matrices,
    conj_by_axis_reflection,
    polar_decompose,
    reflect,
    reflection_map,
    rotation,
    rotation_from_reflections,
)


class TestLinearMaps:
    def test_call_applies_to_points(self):
        a = LinearMap2([[1.0, 2.0], [3.0, 4.0]])
        assert np.allclose(a((1.0, 0.0)), [1.0, 3.0])
        pts = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
        assert np.allclose(a(pts), [[1, 3], [2, 4], [3, 7]])

    def test_det_inverse_compose(self):
        a = LinearMap2([[1.0, 2.0], [3.0, 4.0]])
        assert a.det == pytest.approx(-2.0)
        assert a.compose(a.inverse()).isclose(LinearMap2.identity(), tol=1e-12)

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            b_matrices(LinearMap2([[1.0, 2.0], [2.0, 4.0]]))

    def test_matrix_read_only(self):
        a = LinearMap2.identity()
        with pytest.raises(ValueError):
            a.matrix[0, 0] = 5.0


class TestPolarDecomposition:
    @pytest.mark.parametrize("seed", range(8))
    def test_2x2_random(self, seed):
        rng = np.random.default_rng(seed)
        m = rng.standard_normal((2, 2))
        while abs(np.linalg.det(m)) < 0.2:
            m = rng.standard_normal((2, 2))
        r, s = polar_decompose(LinearMap2(m))
        assert np.allclose(r.matrix @ s.matrix, m, atol=1e-10)
        assert np.allclose(r.matrix.T @ r.matrix, np.eye(2), atol=1e-10)
        assert np.allclose(s.matrix, s.matrix.T, atol=1e-10)
        assert np.all(np.linalg.eigvalsh(s.matrix) > 0)

    def test_2x2_reflection_factor(self):
        # negative determinant: orthogonal factor must carry the reflection
        r, s = polar_decompose(LinearMap2([[0.0, 2.0], [1.0, 0.0]]))
        assert np.linalg.det(r.matrix) == pytest.approx(-1.0)
        assert np.allclose(r.matrix @ s.matrix, [[0, 2], [1, 0]], atol=1e-12)

    @pytest.mark.parametrize("seed", range(4))
    def test_4x4_random(self, seed):
        rng = np.random.default_rng(seed + 50)
        m = rng.standard_normal((4, 4)) + 2.0 * np.eye(4)
        r, s = polar_decompose(LinearMap4(m))
        assert np.allclose(r.matrix @ s.matrix, m, atol=1e-9)
        assert np.allclose(r.matrix.T @ r.matrix, np.eye(4), atol=1e-9)
        assert np.all(np.linalg.eigvalsh((s.matrix + s.matrix.T) / 2) > 0)

    def test_already_orthogonal(self):
        r, s = polar_decompose(rotation(0.7))
        assert r.isclose(rotation(0.7), tol=1e-12)
        assert np.allclose(s.matrix, np.eye(2), atol=1e-12)


class TestReflections:
    def test_reflection_map_flips_normal(self):
        u = reflection_map((0.0, 1.0))
        assert np.allclose(u((3.0, 4.0)), [3.0, -4.0])
        assert u.det == pytest.approx(-1.0)

    def test_reflection_involution(self):
        u = reflection_map((1.0, 2.0))
        assert u.compose(u).isclose(LinearMap2.identity(), tol=1e-12)

    def test_algebraic_route_matches_matrix_route(self):
        # -n x n / |n|^2 in the plane algebra vs the Householder matrix
        rng = np.random.default_rng(2)
        for _ in range(20):
            n = rng.standard_normal(2)
            pts = rng.standard_normal((6, 2))
            assert np.allclose(reflect(n, pts), reflection_map(n)(pts), atol=1e-12)

    def test_two_reflections_make_a_rotation(self):
        # reflect in a then in b: rotation by twice the angle between them
        a = np.array([1.0, 0.0])
        theta = 0.35
        b = np.array([np.cos(theta), np.sin(theta)])
        got = rotation_from_reflections(a, b)
        assert got.isclose(rotation(2 * theta), tol=1e-12)

    def test_rotation_matrix(self):
        r = rotation(np.pi / 2)
        assert np.allclose(r((1.0, 0.0)), [0.0, 1.0], atol=1e-15)


class TestGLHelpers:
    def test_adjoint_is_transpose(self):
        a = LinearMap2([[1.0, 2.0], [3.0, 4.0]])
        assert np.allclose(adjoint(a).matrix, [[1, 3], [2, 4]])

    def test_conj_by_axis_reflection(self):
        a = LinearMap2([[1.0, 2.0], [3.0, 4.0]])
        got = conj_by_axis_reflection(a, 0)  # U A U with U = diag(1, -1)
        assert np.allclose(got.matrix, [[1, -2], [-3, 4]])

    def test_b_matrices_frozen(self):
        # A = [[1,2],[3,4]], det -2: B+ = inv(A)^T, B- = [[d,c],[b,a]]/det
        a = LinearMap2([[1.0, 2.0], [3.0, 4.0]])
        b_plus, b_minus = b_matrices(a)
        assert np.allclose(b_plus.matrix, [[-2.0, 1.5], [1.0, -0.5]])
        assert np.allclose(b_minus.matrix, [[-2.0, -1.5], [-1.0, -0.5]])

    def test_b_matrices_bridge(self):
        # B- = U_{e1} B+ U_{e1} always
        rng = np.random.default_rng(9)
        for _ in range(20):
            m = rng.standard_normal((2, 2))
            if abs(np.linalg.det(m)) < 0.1:
                continue
            b_plus, b_minus = b_matrices(LinearMap2(m))
            assert conj_by_axis_reflection(b_plus, 0).isclose(b_minus, tol=1e-10)

    def test_rotation_b_matrices(self):
        # for A = R(theta): B+ = R(theta), B- = R(-theta)
        theta = np.pi / 6
        b_plus, b_minus = b_matrices(rotation(theta))
        assert b_plus.isclose(rotation(theta), tol=1e-12)
        assert b_minus.isclose(rotation(-theta), tol=1e-12)


def test_conj_by_axis_reflection_4d():
    a = LinearMap4(np.arange(16, dtype=float).reshape(4, 4) + 3.0 * np.eye(4))
    got = conj_by_axis_reflection(a, 0)
    u = np.diag([1.0, -1.0, -1.0, -1.0])
    assert np.allclose(got.matrix, u @ a.matrix @ u)
