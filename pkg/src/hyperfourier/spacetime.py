"""Fourier transforms on Cl(3,1)-valued fields over a 4D sample lattice.

A field sample data[t, x, y, z] is a 16-vector of blade coefficients in the
clifford module's bitmask order (e0 = bit 3).  The forward transform applies
exp(-e0*2pi*s*t/T) on the left and exp(-i3*2pi*(m*x/X + n*y/Y + p*z/Z)) on
the right; the inverse flips both signs and divides by T*X*Y*Z.

The subalgebra V_t = span{1, e0, i3, i4} is closed under both kernels and
isomorphic to the quaternions (i -> e0, j -> i3, k -> i4), so a V_t-valued
field transforms exactly like a quaternion field with one time axis and a
combined three-axis space phase.  That gives the fast path for V_t data:
the +- split reduces each half to a complex FFT, with the space frequency
axes reversed for the plus half.

A general Cl(3,1) field decomposes uniquely as

    f = g0 + g1*e1 + g2*e2 + g3*e3

with V_t-valued g_a.  Since i3 commutes with e1, e2, e3 and the transform
is right linear, the full transform is the four V_t transforms with the
basis factors multiplied back on the right.  A literal per-bin double sum
over the whole lattice (left/right multiplication matrices on all 16
coefficients, no factorization) is kept as the direct oracle.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from ._threads import thread_count
from .clifford import _VT_IMAGE, Multivector, VT_MASKS, cl31
from .qft2d import (
    _angle_tables,
    _assemble_from_planes,
    _freq_reverse,
    _run_rows,
    _split_planes,
)
from .radix2 import UnsupportedSizeError, fft_axes, is_power_of_two

__all__ = [
    "SpacetimeField4D",
    "STSpectrum4D",
    "vt_components",
    "vt_recompose",
    "vtft_forward",
    "vtft_forward_direct",
    "vtft_forward_fast",
    "vtft_inverse",
    "vtft_inverse_direct",
    "vtft_inverse_fast",
    "sft_forward",
    "sft_forward_direct",
    "sft_forward_fast",
    "sft_inverse",
    "sft_inverse_direct",
    "sft_inverse_fast",
    "sft_right_form",
    "split_spacetime_pm",
    "decompose_vt",
    "recompose_vt",
    "right_multiply",
    "wave_packet_energy_split",
    "total_energy",
    "verify_sft_gl",
    "LatticeLawReport",
]

_N_BLADES = 16


def _check_st(data, spacings) -> np.ndarray:
    data = np.asarray(data, dtype=np.float64)
    if data.ndim != 5 or data.shape[-1] != _N_BLADES:
        raise ValueError(
            f"expected data of shape (T, X, Y, Z, {_N_BLADES}), got {data.shape}"
        )
    if min(data.shape[:4]) < 1:
        raise ValueError("all grid sizes must be positive")
    if not np.all(np.isfinite(data)):
        raise ValueError("data contains non-finite values")
    if min(spacings) <= 0.0:
        raise ValueError("spacings must be positive")
    return data


@dataclass(frozen=True)
class SpacetimeField4D:
    """Sampled Cl(3,1) field: data[t, x, y, z] holds 16 blade coefficients."""

    data: np.ndarray
    dt: float = 1.0
    dx: float = 1.0
    dy: float = 1.0
    dz: float = 1.0

    def __post_init__(self):
        data = _check_st(self.data, (self.dt, self.dx, self.dy, self.dz))
        object.__setattr__(self, "data", data)

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return self.data.shape[:4]

    @property
    def n_samples(self) -> int:
        t, x, y, z = self.dims
        return t * x * y * z

    def sample(self, t: int, x: int, y: int, z: int) -> Multivector:
        return Multivector(cl31(), self.data[t, x, y, z].copy())

    @classmethod
    def filled(cls, dims, value: Multivector, **spacings) -> "SpacetimeField4D":
        """Constant field with every sample equal to `value`."""
        if value.sig is not cl31():
            raise ValueError("value must be a Cl(3,1) multivector")
        data = np.broadcast_to(value.coeffs, tuple(dims) + (_N_BLADES,)).copy()
        return cls(data, **spacings)


@dataclass(frozen=True)
class STSpectrum4D:
    """Spectrum on the index lattice of the originating field."""

    data: np.ndarray
    dt: float = 1.0
    dx: float = 1.0
    dy: float = 1.0
    dz: float = 1.0

    def __post_init__(self):
        data = _check_st(self.data, (self.dt, self.dx, self.dy, self.dz))
        object.__setattr__(self, "data", data)

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return self.data.shape[:4]

    @property
    def n_samples(self) -> int:
        t, x, y, z = self.dims
        return t * x * y * z

    def sample(self, s: int, m: int, n: int, p: int) -> Multivector:
        return Multivector(cl31(), self.data[s, m, n, p].copy())

    def freq_t(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.dims[0], d=self.dt)

    def freq_x(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.dims[1], d=self.dx)

    def freq_y(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.dims[2], d=self.dy)

    def freq_z(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.dims[3], d=self.dz)


# --- V_t support and component layout ---------------------------------------

_VT_SUPPORT = np.zeros(_N_BLADES, dtype=bool)
_VT_SUPPORT[list(VT_MASKS)] = True


def _require_vt(data: np.ndarray, what: str) -> None:
    outside = data[..., ~_VT_SUPPORT]
    bad = np.any(outside != 0.0, axis=-1)
    if bad.any():
        idx = tuple(int(i) for i in np.argwhere(bad)[0])
        sig = cl31()
        masks = np.nonzero(~_VT_SUPPORT)[0]
        names = [
            sig.blade_name(int(m)) for m in masks if data[idx + (int(m),)] != 0.0
        ]
        raise ValueError(
            f"{what} requires V_t values (span of 1, e0, i3, i4); "
            f"sample at (t,x,y,z)={idx} has support on: {', '.join(names)}"
        )


def vt_components(data: np.ndarray) -> np.ndarray:
    """(..., 16) blade coefficients -> (..., 4) components on (1, e0, i3, i4)."""
    out = np.empty(data.shape[:-1] + (4,))
    for ci, (mask, sign) in enumerate(_VT_IMAGE):
        out[..., ci] = sign * data[..., mask]
    return out


def vt_recompose(q: np.ndarray) -> np.ndarray:
    """Inverse of vt_components; all non-V_t blades are zero."""
    out = np.zeros(q.shape[:-1] + (_N_BLADES,))
    for ci, (mask, sign) in enumerate(_VT_IMAGE):
        out[..., mask] = sign * q[..., ci]
    return out


@lru_cache(maxsize=None)
def _kernel_matrices() -> tuple[np.ndarray, np.ndarray]:
    """(left multiplication by e0, right multiplication by i3) on coefficients."""
    sig = cl31()
    e0 = sig.blade(VT_MASKS[2]).coeffs  # VT_MASKS = (1, i3, e0, i4) masks
    i3 = sig.blade(VT_MASKS[1]).coeffs
    left = sig.left_mul_matrix(e0)
    right = sig.right_mul_matrix(i3)
    left.setflags(write=False)
    right.setflags(write=False)
    return left, right


# --- direct paths ------------------------------------------------------------


def _space_angle_tables(dims, sign: float):
    """cos/sin of sign*2pi*(m*x/X + n*y/Y + p*z/Z) on the flat space index."""
    _, x_len, y_len, z_len = dims
    s_len = x_len * y_len * z_len
    px = 2.0 * np.pi * np.outer(np.arange(x_len), np.arange(x_len)) / x_len
    py = 2.0 * np.pi * np.outer(np.arange(y_len), np.arange(y_len)) / y_len
    pz = 2.0 * np.pi * np.outer(np.arange(z_len), np.arange(z_len)) / z_len
    ang = (
        px[:, None, None, :, None, None]
        + py[None, :, None, None, :, None]
        + pz[None, None, :, None, None, :]
    ).reshape(s_len, s_len) * sign
    return np.cos(ang), np.sin(ang)


def _st_double_sum(data: np.ndarray, sign: float) -> np.ndarray:
    """sum_{t,xyz} exp(sign*e0*theta_st) data[t,xyz] exp(sign*i3*phi) per bin."""
    dims = data.shape[:4]
    t_len = dims[0]
    s_len = dims[1] * dims[2] * dims[3]
    f = data.reshape(t_len, s_len, _N_BLADES)
    cos_t, sin_t = _angle_tables(t_len, t_len, sign)
    cos_s, sin_s = _space_angle_tables(dims, sign)
    left_e0, right_i3 = _kernel_matrices()
    f_l = f @ left_e0.T  # e0 * f per sample
    out = np.empty((t_len, s_len, _N_BLADES))

    def one_row(a: int) -> None:
        cl = cos_t[a][:, None, None]
        sl = sin_t[a][:, None, None]
        g = cl * f + sl * f_l  # exp(sign*e0*theta_a) f, whole grid
        g_r = g @ right_i3.T  # g * i3
        out[a] = np.einsum("tsc,bs->bc", g, cos_s) + np.einsum(
            "tsc,bs->bc", g_r, sin_s
        )

    _run_rows(one_row, t_len)
    return out.reshape(data.shape)


def vtft_forward_direct(field: SpacetimeField4D) -> STSpectrum4D:
    """Volume-time transform by the literal double sum; oracle for the fast path."""
    _require_vt(field.data, "vtft_forward")
    return STSpectrum4D(
        _st_double_sum(field.data, -1.0), field.dt, field.dx, field.dy, field.dz
    )


def vtft_inverse_direct(spec: STSpectrum4D) -> SpacetimeField4D:
    _require_vt(spec.data, "vtft_inverse")
    out = _st_double_sum(spec.data, 1.0) / spec.n_samples
    return SpacetimeField4D(out, spec.dt, spec.dx, spec.dy, spec.dz)


def sft_forward_direct(field: SpacetimeField4D) -> STSpectrum4D:
    """Full-algebra transform by the literal double sum."""
    return STSpectrum4D(
        _st_double_sum(field.data, -1.0), field.dt, field.dx, field.dy, field.dz
    )


def sft_inverse_direct(spec: STSpectrum4D) -> SpacetimeField4D:
    out = _st_double_sum(spec.data, 1.0) / spec.n_samples
    return SpacetimeField4D(out, spec.dt, spec.dx, spec.dy, spec.dz)


# --- fast paths ---------------------------------------------------------------

_SPACE_AXES = (1, 2, 3)


def _require_pow2_4d(dims, direct_name: str) -> None:
    if not all(is_power_of_two(n) for n in dims):
        size = "x".join(str(n) for n in dims)
        raise UnsupportedSizeError(
            f"fast path needs power-of-two sizes, got {size}; "
            f"use {direct_name} instead"
        )


def _space_reverse(a: np.ndarray) -> np.ndarray:
    for axis in _SPACE_AXES:
        a = _freq_reverse(a, axis)
    return a


def _vt_fast(q: np.ndarray, inverse: bool) -> np.ndarray:
    """Split fast transform on (T, X, Y, Z, 4) V_t components, unnormalized."""
    c_plus, c_minus = _split_planes(q)
    axes = (0,) + _SPACE_AXES
    if inverse:
        d_plus = fft_axes(_space_reverse(c_plus), axes, inverse=True)
        d_minus = fft_axes(c_minus, axes, inverse=True)
    else:
        d_plus = _space_reverse(fft_axes(c_plus, axes))
        d_minus = fft_axes(c_minus, axes)
    return _assemble_from_planes(d_plus, d_minus)


def vtft_forward_fast(field: SpacetimeField4D) -> STSpectrum4D:
    """Volume-time transform via the +- split and two complex 4D FFTs."""
    _require_vt(field.data, "vtft_forward")
    _require_pow2_4d(field.dims, "vtft_forward_direct")
    out = vt_recompose(_vt_fast(vt_components(field.data), inverse=False))
    return STSpectrum4D(out, field.dt, field.dx, field.dy, field.dz)


def vtft_inverse_fast(spec: STSpectrum4D) -> SpacetimeField4D:
    _require_vt(spec.data, "vtft_inverse")
    _require_pow2_4d(spec.dims, "vtft_inverse_direct")
    q = _vt_fast(vt_components(spec.data), inverse=True) / spec.n_samples
    return SpacetimeField4D(
        vt_recompose(q), spec.dt, spec.dx, spec.dy, spec.dz
    )


@lru_cache(maxsize=None)
def _decomp_tables() -> tuple[np.ndarray, np.ndarray]:
    """Blade bookkeeping for f = g0 + g1*e1 + g2*e2 + g3*e3 with V_t parts.

    Entry [a, ci] locates the coefficient of (V_t generator ci) * (factor a)
    inside the 16-vector: factor masks are (0, e1, e2, e3), generators are
    (1, e0, i3, i4).  The 16 products hit all 16 blades exactly once.
    """
    sig = cl31()
    factor_masks = (0, 0b001, 0b010, 0b100)
    masks = np.empty((4, 4), dtype=np.intp)
    signs = np.empty((4, 4))
    for a, fm in enumerate(factor_masks):
        for ci, (vm, vs) in enumerate(_VT_IMAGE):
            masks[a, ci] = vm ^ fm
            signs[a, ci] = vs * sig.sign_table[vm, fm]
    assert sorted(masks.ravel().tolist()) == list(range(_N_BLADES))
    masks.setflags(write=False)
    signs.setflags(write=False)
    return masks, signs


def _decompose_q(data: np.ndarray) -> np.ndarray:
    """(..., 16) -> (..., 4, 4): per factor a, the V_t components of g_a."""
    masks, signs = _decomp_tables()
    return data[..., masks] * signs


def _recompose_q(q: np.ndarray) -> np.ndarray:
    """Inverse of _decompose_q."""
    masks, signs = _decomp_tables()
    out = np.empty(q.shape[:-2] + (_N_BLADES,))
    out[..., masks.ravel()] = (q * signs).reshape(q.shape[:-2] + (16,))
    return out


def decompose_vt(field: SpacetimeField4D) -> tuple[SpacetimeField4D, ...]:
    """Four V_t-valued fields g_a with field = g0 + g1*e1 + g2*e2 + g3*e3."""
    q = _decompose_q(field.data)
    return tuple(
        replace(field, data=vt_recompose(q[..., a, :])) for a in range(4)
    )


def recompose_vt(parts) -> SpacetimeField4D:
    """Reassemble a field from the four decompose_vt parts."""
    g0, g1, g2, g3 = parts
    q = np.stack([vt_components(p.data) for p in (g0, g1, g2, g3)], axis=-2)
    return replace(g0, data=_recompose_q(q))


def _map_parts(fn, parts: list) -> list:
    n = min(thread_count(), len(parts))
    if n <= 1:
        return [fn(p) for p in parts]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, parts))


def _sft_fast_data(data: np.ndarray, inverse: bool) -> np.ndarray:
    q = _decompose_q(data)
    parts = [q[..., a, :] for a in range(4)]
    done = _map_parts(lambda p: _vt_fast(p, inverse), parts)
    return _recompose_q(np.stack(done, axis=-2))


def sft_forward_fast(field: SpacetimeField4D) -> STSpectrum4D:
    """Full-algebra transform: four V_t fast transforms, factors restored."""
    _require_pow2_4d(field.dims, "sft_forward_direct")
    out = _sft_fast_data(field.data, inverse=False)
    return STSpectrum4D(out, field.dt, field.dx, field.dy, field.dz)


def sft_inverse_fast(spec: STSpectrum4D) -> SpacetimeField4D:
    _require_pow2_4d(spec.dims, "sft_inverse_direct")
    out = _sft_fast_data(spec.data, inverse=True) / spec.n_samples
    return SpacetimeField4D(out, spec.dt, spec.dx, spec.dy, spec.dz)


# --- path dispatch ------------------------------------------------------------


def _dispatch4(obj, path: str, fast, direct, fast_name: str):
    if path == "fast":
        return fast(obj)
    if path == "direct":
        return direct(obj)
    if path != "auto":
        raise ValueError(f"unknown path {path!r}; expected auto, direct or fast")
    if all(is_power_of_two(n) for n in obj.dims):
        return fast(obj)
    size = "x".join(str(n) for n in obj.dims)
    warnings.warn(
        f"sizes {size} are not powers of two; "
        f"{fast_name} falling back to the direct summation path",
        RuntimeWarning,
        stacklevel=3,
    )
    return direct(obj)


def vtft_forward(field: SpacetimeField4D, path: str = "auto") -> STSpectrum4D:
    return _dispatch4(
        field, path, vtft_forward_fast, vtft_forward_direct, "vtft_forward"
    )


def vtft_inverse(spec: STSpectrum4D, path: str = "auto") -> SpacetimeField4D:
    return _dispatch4(
        spec, path, vtft_inverse_fast, vtft_inverse_direct, "vtft_inverse"
    )


def sft_forward(field: SpacetimeField4D, path: str = "auto") -> STSpectrum4D:
    return _dispatch4(
        field, path, sft_forward_fast, sft_forward_direct, "sft_forward"
    )


def sft_inverse(spec: STSpectrum4D, path: str = "auto") -> SpacetimeField4D:
    return _dispatch4(
        spec, path, sft_inverse_fast, sft_inverse_direct, "sft_inverse"
    )


# --- split, energy, right linearity -------------------------------------------


def split_spacetime_pm(field):
    """f_pm = (f pm e0 f i3)/2; works on fields and on spectra alike."""
    left_e0, right_i3 = _kernel_matrices()
    twist = field.data @ (left_e0 @ right_i3).T  # e0 f i3 per sample
    plus = 0.5 * (field.data + twist)
    minus = 0.5 * (field.data - twist)
    return replace(field, data=plus), replace(field, data=minus)


def right_multiply(field, m: Multivector):
    """Sample-wise f(x) * m for a constant multivector m."""
    if m.sig is not cl31():
        raise ValueError("m must be a Cl(3,1) multivector")
    out = field.data @ cl31().right_mul_matrix(m.coeffs).T
    return replace(field, data=out)


def total_energy(field) -> float:
    """Sum over samples of the squared blade-coefficient magnitude."""
    return float(np.sum(field.data**2))


def wave_packet_energy_split(field: SpacetimeField4D) -> tuple[float, float]:
    """Energies of the two split halves; they add up to total_energy exactly.

    The sample magnitude is the Euclidean norm of the 16 blade coefficients,
    which on V_t values equals the quaternion norm carried through the
    isomorphism.  The map f -> e0 f i3 permutes blades with signs, so the
    split halves are orthogonal and the energies are a partition.
    """
    plus, minus = split_spacetime_pm(field)
    return total_energy(plus), total_energy(minus)


def sft_right_form(field: SpacetimeField4D) -> STSpectrum4D:
    """Forward transform with both kernels merged to the right of each half.

    The plus half absorbs the left kernel with a sign flip:
    sum f_plus exp(-i3*(phi - theta)) + f_minus exp(-i3*(theta + phi)).
    Independent of the kernel-on-each-side evaluator; used to pin down the
    merged single-exponential form.
    """
    dims = field.dims
    t_len = dims[0]
    s_len = dims[1] * dims[2] * dims[3]
    plus, minus = split_spacetime_pm(field)
    _, right_i3 = _kernel_matrices()
    theta = 2.0 * np.pi * np.outer(np.arange(t_len), np.arange(t_len)) / t_len
    px = 2.0 * np.pi * np.outer(np.arange(dims[1]), np.arange(dims[1])) / dims[1]
    py = 2.0 * np.pi * np.outer(np.arange(dims[2]), np.arange(dims[2])) / dims[2]
    pz = 2.0 * np.pi * np.outer(np.arange(dims[3]), np.arange(dims[3])) / dims[3]
    phi = (
        px[:, None, None, :, None, None]
        + py[None, :, None, None, :, None]
        + pz[None, None, :, None, None, :]
    ).reshape(s_len, s_len)
    halves = (
        (plus.data.reshape(t_len, s_len, _N_BLADES), -1.0),
        (minus.data.reshape(t_len, s_len, _N_BLADES), 1.0),
    )
    out = np.zeros((t_len, s_len, _N_BLADES))

    def one_row(a: int) -> None:
        acc = np.zeros((s_len, _N_BLADES))
        for half, tsign in halves:
            ang = phi[:, None, :] + tsign * theta[a][None, :, None]
            half_r = half @ right_i3.T
            acc += np.einsum("tsc,bts->bc", half, np.cos(ang))
            acc -= np.einsum("tsc,bts->bc", half_r, np.sin(ang))
        out[a] = acc

    _run_rows(one_row, t_len)
    return STSpectrum4D(
        out.reshape(field.data.shape), field.dt, field.dx, field.dy, field.dz
    )


# --- lattice transformation law ------------------------------------------------


@dataclass(frozen=True)
class LatticeLawReport:
    """Deviation of the composed-field spectrum from the split mapping law."""

    max_abs: float
    max_rel: float
    det_abs: float


def _signed_permutation(matrix: np.ndarray, dims) -> np.ndarray:
    m = np.rint(matrix).astype(np.intp)
    if np.max(np.abs(matrix - m)) > 1e-12 or not np.all(np.isin(m, (-1, 0, 1))):
        raise ValueError("lattice law needs a signed permutation matrix")
    if np.any(np.sum(np.abs(m), axis=0) != 1) or np.any(np.sum(np.abs(m), axis=1) != 1):
        raise ValueError("lattice law needs a signed permutation matrix")
    for row in range(4):
        col = int(np.nonzero(m[row])[0][0])
        if dims[row] != dims[col]:
            raise ValueError(
                f"map sends axis {col} (size {dims[col]}) to axis {row} "
                f"(size {dims[row]}); sizes must match"
            )
    return m


def _lattice_gather(data: np.ndarray, m_int: np.ndarray) -> np.ndarray:
    """g[idx] = data[(m_int @ idx) mod dims]; m_int is a signed permutation."""
    dims = data.shape[:4]
    grids = np.indices(dims)
    mapped = np.tensordot(m_int, grids, axes=(1, 0))
    for axis in range(4):
        mapped[axis] %= dims[axis]
    return data[mapped[0], mapped[1], mapped[2], mapped[3]]


_U_E0 = np.diag([-1.0, 1.0, 1.0, 1.0])  # index order (t, x, y, z)


def verify_sft_gl(a_map, field: SpacetimeField4D) -> LatticeLawReport:
    """Check the composed-field law for a lattice automorphism A.

    With g(x) = f(Ax) on index vectors (t, x, y, z), the spectrum of g must
    equal |det A^-1| * { Fhat_minus((A^-1)^T u) + Fhat_plus(U (A^-1)^T U u) }
    where U reflects the time component and Fhat_pm are the split halves of
    the spectrum of f.  For signed permutations (A^-1)^T = A and the index
    arithmetic is exact mod the grid sizes.
    """
    dims = field.dims
    mat = np.asarray(a_map.matrix, dtype=np.float64)
    m_int = _signed_permutation(mat, dims)

    composed = SpacetimeField4D(
        _lattice_gather(field.data, m_int), field.dt, field.dx, field.dy, field.dz
    )
    lhs = sft_forward(composed).data

    spec = sft_forward(field)
    sp_plus, sp_minus = split_spacetime_pm(spec)
    w_minus = _signed_permutation(np.linalg.inv(mat).T, dims)
    w_plus = _signed_permutation(_U_E0 @ np.linalg.inv(mat).T @ _U_E0, dims)
    det_abs = abs(1.0 / float(np.linalg.det(mat)))
    rhs = det_abs * (
        _lattice_gather(sp_minus.data, w_minus)
        + _lattice_gather(sp_plus.data, w_plus)
    )

    max_abs = float(np.max(np.abs(lhs - rhs)))
    scale = float(np.max(np.abs(lhs)))
    return LatticeLawReport(max_abs, max_abs / max(scale, 1e-300), det_abs)
