"""Quaternion arithmetic on scalars and numpy component arrays.

A quaternion q = r + i*q_i + j*q_j + k*q_k is held either as the
:class:`Quaternion` dataclass (one value) or as a float64 array whose last
axis has length 4, components ordered (r, i, j, k).  Unit rules:

    i*j = -j*i = k,   j*k = -k*j = i,   k*i = -i*k = j,
    i*i = j*j = k*k = -1.

Every value can also be read in the i..j normal form
q = q_r + i q_i + q_j j + i q_k j, whose four real coefficients coincide
with the standard components (i*q_k*j = q_k*k); the form matters only for
operator placement, not storage.

The +/- split used by the transform fast paths is

    q_pm = (q +- i q j) / 2,

closed under multiplication by i on the left and j on the right:
i * q_pm * j = +-q_pm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Quaternion",
    "ONE",
    "I",
    "J",
    "K",
    "UNIT_R",
    "UNIT_I",
    "UNIT_J",
    "UNIT_K",
    "qmul",
    "qconj",
    "qnorm",
    "qnorm_sq",
    "qscalar",
    "qsplit",
    "axis_exp",
    "axis_exp_array",
]


def qmul(a, b):
    """Hamilton product of component arrays, broadcasting over leading axes."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    ar, ai, aj, ak = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    br, bi, bj, bk = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            ar * br - ai * bi - aj * bj - ak * bk,
            ar * bi + ai * br + aj * bk - ak * bj,
            ar * bj - ai * bk + aj * br + ak * bi,
            ar * bk + ai * bj - aj * bi + ak * br,
        ],
        axis=-1,
    )


def qconj(a):
    """Conjugation: negate the i, j, k components."""
    a = np.asarray(a, dtype=np.float64)
    out = a.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def qnorm_sq(a):
    a = np.asarray(a, dtype=np.float64)
    return np.sum(a * a, axis=-1)


def qnorm(a):
    return np.sqrt(qnorm_sq(a))


def qscalar(a):
    return np.asarray(a, dtype=np.float64)[..., 0]


def qsplit(a):
    """Return (q_plus, q_minus) with q_pm = (q +- i q j) / 2, in closed form.

    q_plus  = {(q_r + q_k) + i (q_i - q_j)} (1 + k) / 2
    q_minus = {(q_r - q_k) + i (q_i + q_j)} (1 - k) / 2
    """
    a = np.asarray(a, dtype=np.float64)
    alpha = 0.5 * (a[..., 0] + a[..., 3])
    beta = 0.5 * (a[..., 1] - a[..., 2])
    gamma = 0.5 * (a[..., 0] - a[..., 3])
    delta = 0.5 * (a[..., 1] + a[..., 2])
    plus = np.stack([alpha, beta, -beta, alpha], axis=-1)
    minus = np.stack([gamma, delta, delta, -gamma], axis=-1)
    return plus, minus


UNIT_R = np.array([1.0, 0.0, 0.0, 0.0])
UNIT_I = np.array([0.0, 1.0, 0.0, 0.0])
UNIT_J = np.array([0.0, 0.0, 1.0, 0.0])
UNIT_K = np.array([0.0, 0.0, 0.0, 1.0])
for _u in (UNIT_R, UNIT_I, UNIT_J, UNIT_K):
    _u.setflags(write=False)


@dataclass(frozen=True)
class Quaternion:
    """A single quaternion with real components r, i, j, k."""

    r: float = 0.0
    i: float = 0.0
    j: float = 0.0
    k: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.r, self.i, self.j, self.k])

    @staticmethod
    def from_array(a) -> "Quaternion":
        a = np.asarray(a, dtype=np.float64)
        if a.shape != (4,):
            raise ValueError(f"expected 4 components, got shape {a.shape}")
        return Quaternion(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(
            self.r + other.r, self.i + other.i, self.j + other.j, self.k + other.k
        )

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(
            self.r - other.r, self.i - other.i, self.j - other.j, self.k - other.k
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.r, -self.i, -self.j, -self.k)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion.from_array(qmul(self.as_array(), other.as_array()))
        return Quaternion(
            self.r * other, self.i * other, self.j * other, self.k * other
        )

    def __rmul__(self, other):
        # other is a real scalar; quaternion*quaternion goes through __mul__
        return Quaternion(
            self.r * other, self.i * other, self.j * other, self.k * other
        )

    def __truediv__(self, other) -> "Quaternion":
        return self * (1.0 / other)

    def conj(self) -> "Quaternion":
        return Quaternion(self.r, -self.i, -self.j, -self.k)

    def norm(self) -> float:
        return float(np.sqrt(self.r**2 + self.i**2 + self.j**2 + self.k**2))

    def scalar_part(self) -> float:
        return self.r

    def split(self) -> tuple["Quaternion", "Quaternion"]:
        plus, minus = qsplit(self.as_array())
        return Quaternion.from_array(plus), Quaternion.from_array(minus)

    def isclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return (self - other).norm() <= tol


ONE = Quaternion(1.0)
I = Quaternion(i=1.0)
J = Quaternion(j=1.0)
K = Quaternion(k=1.0)

_AXIS_TOL = 1e-12


def _check_axis(axis: np.ndarray) -> None:
    if abs(axis[0]) > _AXIS_TOL:
        raise ValueError(f"axis must be a pure quaternion, scalar part {axis[0]!r}")
    n = float(np.sqrt(np.sum(axis * axis)))
    if abs(n - 1.0) > _AXIS_TOL:
        raise ValueError(f"axis must have unit norm, got {n!r}")


def axis_exp(axis: Quaternion, angle: float) -> Quaternion:
    """exp(axis*angle) = cos(angle) + axis*sin(angle) for a unit pure axis."""
    a = axis.as_array()
    _check_axis(a)
    c = float(np.cos(angle))
    s = float(np.sin(angle))
    return Quaternion(c, s * a[1], s * a[2], s * a[3])


def axis_exp_array(axis: Quaternion, angles) -> np.ndarray:
    """Vectorized axis_exp: angles of shape S give components of shape S+(4,)."""
    a = axis.as_array()
    _check_axis(a)
    angles = np.asarray(angles, dtype=np.float64)
    out = np.empty(angles.shape + (4,))
    out[..., 0] = np.cos(angles)
    s = np.sin(angles)
    out[..., 1] = s * a[1]
    out[..., 2] = s * a[2]
    out[..., 3] = s * a[3]
    return out
