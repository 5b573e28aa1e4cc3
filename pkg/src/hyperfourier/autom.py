"""Linear automorphisms of the plane and of 4D spacetime coordinates.

Wraps 2x2 and 4x4 real invertible matrices with the operations the
transform laws need: polar factorization A = R*S (R orthogonal, S symmetric
positive definite), the adjoint (transpose) map, conjugation by an axis
reflection, and the pair of frequency-domain matrices

    B_plus  = (A**-1)^T            B_minus = (1/det A) [[d, c], [b, a]]

for A = [[a, b], [c, d]].  These satisfy B_minus = U_e1 B_plus U_e1 where
U_e1 reflects the first coordinate.

Plane reflections U_n x = -n**-1 x n are evaluated through the Cl(2,0)
geometric product; rotations are composed from two reflections,
R_ab x = U_b(U_a(x)), rotating by twice the angle from a to b.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import cl20, Multivector

__all__ = [
    "LinearMap2",
    "LinearMap4",
    "polar_decompose",
    "adjoint",
    "conj_by_axis_reflection",
    "b_matrices",
    "reflect",
    "reflection_map",
    "rotation",
    "rotation_from_reflections",
]


class _LinearMapBase:
    __slots__ = ("matrix",)
    dim = 0

    def __init__(self, matrix):
        m = np.array(matrix, dtype=np.float64)
        if m.shape != (self.dim, self.dim):
            raise ValueError(f"expected a {self.dim}x{self.dim} matrix, got {m.shape}")
        if abs(np.linalg.det(m)) < 1e-300:
            raise ValueError("matrix is singular")
        m.setflags(write=False)
        self.matrix = m

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    def inverse(self):
        return type(self)(np.linalg.inv(self.matrix))

    def transpose(self):
        return type(self)(self.matrix.T)

    def compose(self, other):
        """self after other: (self.compose(other))(x) = self(other(x))."""
        return type(self)(self.matrix @ other.matrix)

    def __call__(self, x) -> np.ndarray:
        """Apply to one vector of length dim, or to an array (..., dim)."""
        x = np.asarray(x, dtype=np.float64)
        return x @ self.matrix.T

    def isclose(self, other, tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.matrix - other.matrix)) <= tol)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.matrix.tolist()})"


class LinearMap2(_LinearMapBase):
    dim = 2

    @staticmethod
    def identity() -> "LinearMap2":
        return LinearMap2(np.eye(2))


class LinearMap4(_LinearMapBase):
    dim = 4

    @staticmethod
    def identity() -> "LinearMap4":
        return LinearMap4(np.eye(4))


def _sqrt_spd_2x2(m: np.ndarray) -> np.ndarray:
    # closed-form square root of a symmetric positive definite 2x2 matrix
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    s = np.sqrt(det)
    t = np.sqrt(m[0, 0] + m[1, 1] + 2.0 * s)
    return (m + s * np.eye(2)) / t


def _polar2(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    if det > 0.0:
        # A + cof(A) is a scaled rotation whenever det > 0
        cof = np.array([[a[1, 1], -a[1, 0]], [-a[0, 1], a[0, 0]]])
        b = a + cof
        scale = np.hypot(b[0, 0], b[1, 0])
        r = b / scale
    else:
        s = _sqrt_spd_2x2(a.T @ a)
        r = a @ np.linalg.inv(s)
    s = r.T @ a
    s = 0.5 * (s + s.T)
    return r, s


def _polar_newton(a: np.ndarray, tol: float = 1e-13) -> tuple[np.ndarray, np.ndarray]:
    x = a.copy()
    for _ in range(100):
        inv_t = np.linalg.inv(x).T
        nxt = 0.5 * (x + inv_t)
        if np.max(np.abs(nxt - x)) <= tol * max(1.0, np.max(np.abs(nxt))):
            x = nxt
            break
        x = nxt
    r = x
    s = r.T @ a
    s = 0.5 * (s + s.T)
    return r, s


def polar_decompose(a):
    """Factor A = R*S with R orthogonal and S symmetric positive definite.

    R keeps the determinant sign of A (a reflection stays visible in R).
    2x2 maps use the closed form, 4x4 maps a Newton iteration.
    """
    if isinstance(a, LinearMap2):
        r, s = _polar2(a.matrix)
        return LinearMap2(r), LinearMap2(s)
    if isinstance(a, LinearMap4):
        r, s = _polar_newton(a.matrix)
        return LinearMap4(r), LinearMap4(s)
    raise TypeError("polar_decompose expects LinearMap2 or LinearMap4")


def adjoint(a):
    """Adjoint with respect to the coordinate dot product: the transpose map."""
    return a.transpose()


def conj_by_axis_reflection(a, axis: int):
    """U A U where U reflects the given coordinate axis (0-based)."""
    n = a.dim
    if not 0 <= axis < n:
        raise ValueError(f"axis {axis} out of range for dim {n}")
    u = np.eye(n)
    u[axis, axis] = -1.0
    return type(a)(u @ a.matrix @ u)


def b_matrices(a: LinearMap2) -> tuple[LinearMap2, LinearMap2]:
    """Frequency-domain matrices (B_plus, B_minus) for a plane map A."""
    m = a.matrix
    b_plus = np.linalg.inv(m).T
    b_minus = np.array([[m[1, 1], m[1, 0]], [m[0, 1], m[0, 0]]]) / a.det
    return LinearMap2(b_plus), LinearMap2(b_minus)


def reflect(normal, x) -> np.ndarray:
    """Reflect plane vector(s) x at the line through the origin normal to n.

    Computed as -n**-1 x n in Cl(2,0); n need not be unit length.
    """
    n = np.asarray(normal, dtype=np.float64)
    if n.shape != (2,):
        raise ValueError("normal must be a 2-vector")
    nn = float(n @ n)
    if nn == 0.0:
        raise ValueError("normal must be nonzero")
    sig = cl20()
    n_mv = Multivector(sig, np.array([0.0, n[0], n[1], 0.0]))
    n_inv = Multivector(sig, n_mv.coeffs / nn)

    x = np.asarray(x, dtype=np.float64)
    single = x.shape == (2,)
    pts = np.atleast_2d(x)
    out = np.empty_like(pts)
    for idx, p in enumerate(pts):
        p_mv = Multivector(sig, np.array([0.0, p[0], p[1], 0.0]))
        r = -1.0 * (n_inv * p_mv * n_mv)
        out[idx] = r.coeffs[1:3]
    return out[0] if single else out


def reflection_map(normal) -> LinearMap2:
    """Matrix form of :func:`reflect`: I - 2 nhat nhat^T (determinant -1)."""
    n = np.asarray(normal, dtype=np.float64)
    if n.shape != (2,):
        raise ValueError("normal must be a 2-vector")
    nn = float(n @ n)
    if nn == 0.0:
        raise ValueError("normal must be nonzero")
    return LinearMap2(np.eye(2) - 2.0 * np.outer(n, n) / nn)


def rotation(theta: float) -> LinearMap2:
    c, s = np.cos(theta), np.sin(theta)
    return LinearMap2([[c, -s], [s, c]])


def rotation_from_reflections(a, b) -> LinearMap2:
    """Rotation R_ab x = U_b(U_a(x)); rotates by twice the angle from a to b."""
    return reflection_map(b).compose(reflection_map(a))
