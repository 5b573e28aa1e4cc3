"""Two-sided and right-sided quaternion Fourier transforms on 2D grids.

For a field f[x, y] of quaternions, x = 0..M-1, y = 0..N-1, the two-sided
transform places one exponential on each side of the signal,

    F[m, n] = sum_{x,y} exp(-i*2pi*m*x/M) f[x, y] exp(-j*2pi*n*y/N),

while the right-sided variant keeps both factors on the right, i first:

    F[m, n] = sum_{x,y} f[x, y] exp(-i*2pi*m*x/M) exp(-j*2pi*n*y/N).

Inverses flip the exponential signs, keep the same factor placement (the
right-sided inverse applies the j factor first, then the i factor), and
divide by M*N.  DC sits at index 0; angular frequencies map as
u = 2pi*m/(M*dx).  Exchanging the roles of the i and j axes gives further
variants with the same theory; only these two are exposed.

Direct paths evaluate the defining double sum per output bin, cost
O((M*N)**2), any sizes.  Fast paths need power-of-two sizes and run two
complex radix-2 FFTs over the +- split planes (two-sided) or over the
Cayley-Dickson planes a = f_r + f_i*i, b = f_j + f_k*i (right-sided),
where the "+" half / the b plane pick up frequency-axis reversals from
i*(1+k) = -(1+k)*j and j*exp(-i*t) = exp(+i*t)*j.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._threads import thread_count
from .quat import qmul, qconj, qscalar, qsplit, UNIT_I, UNIT_J
from .radix2 import UnsupportedSizeError, fft_axes, is_power_of_two

__all__ = [
    "QuaternionField2D",
    "QSpectrum2D",
    "qft_forward",
    "qft_forward_direct",
    "qft_forward_fast",
    "qft_inverse",
    "qft_inverse_direct",
    "qft_inverse_fast",
    "qftr_forward",
    "qftr_forward_direct",
    "qftr_forward_fast",
    "qftr_inverse",
    "qftr_inverse_direct",
    "qftr_inverse_fast",
    "qft_via_components",
    "split_field_pm",
    "split_spectrum_pm",
    "mod_inverse",
    "circular_shift",
    "modulate",
    "dilate",
    "scalar_inner",
    "quat_inner",
    "norm_sq",
]


def _check_grid(data: np.ndarray, comps: int) -> np.ndarray:
    data = np.asarray(data, dtype=np.float64)
    if data.ndim != 3 or data.shape[2] != comps:
        raise ValueError(f"expected shape (M, N, {comps}), got {data.shape}")
    if data.shape[0] < 1 or data.shape[1] < 1:
        raise ValueError("grid sizes must be positive")
    return data


@dataclass
class QuaternionField2D:
    """Sampled quaternion field: data[x, y] has components (r, i, j, k)."""

    data: np.ndarray
    dx: float = 1.0
    dy: float = 1.0

    def __post_init__(self):
        self.data = _check_grid(self.data, 4)
        if self.dx <= 0 or self.dy <= 0:
            raise ValueError("sample spacings must be positive")

    @property
    def M(self) -> int:
        return self.data.shape[0]

    @property
    def N(self) -> int:
        return self.data.shape[1]

    def copy(self) -> "QuaternionField2D":
        return QuaternionField2D(self.data.copy(), self.dx, self.dy)


@dataclass
class QSpectrum2D:
    """Quaternion spectrum on the index lattice of the originating field."""

    data: np.ndarray
    dx: float = 1.0
    dy: float = 1.0

    def __post_init__(self):
        self.data = _check_grid(self.data, 4)
        if self.dx <= 0 or self.dy <= 0:
            raise ValueError("sample spacings must be positive")

    @property
    def M(self) -> int:
        return self.data.shape[0]

    @property
    def N(self) -> int:
        return self.data.shape[1]

    def freq_x(self) -> np.ndarray:
        """Angular frequencies u_m = 2pi*m/(M*dx), wrapped to +-Nyquist."""
        return 2.0 * np.pi * np.fft.fftfreq(self.M, d=self.dx)

    def freq_y(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.N, d=self.dy)


# --- direct paths ----------------------------------------------------------


def _angle_tables(n_out: int, n_in: int, sign: float):
    ang = sign * 2.0 * np.pi * np.outer(np.arange(n_out), np.arange(n_in)) / n_in
    return np.cos(ang), np.sin(ang)


def _run_rows(worker, n_rows: int) -> None:
    workers = min(thread_count(), n_rows)
    if workers <= 1:
        for a in range(n_rows):
            worker(a)
        return
    chunks = [range(w, n_rows, workers) for w in range(workers)]

    def run(chunk):
        for a in chunk:
            worker(a)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(run, chunks))


def _two_sided_sum(data: np.ndarray, sign: float) -> np.ndarray:
    """sum_{x,y} exp(sign*i*2pi*a*x/M) data[x,y] exp(sign*j*2pi*b*y/N)."""
    m_len, n_len = data.shape[:2]
    cos_l, sin_l = _angle_tables(m_len, m_len, sign)
    cos_r, sin_r = _angle_tables(n_len, n_len, sign)
    f = data
    f_i = qmul(UNIT_I, f)  # i * f
    f_j = qmul(f, UNIT_J)  # f * j
    f_ij = qmul(UNIT_I, f_j)
    out = np.empty((m_len, n_len, 4))

    def one_row(a: int) -> None:
        cl = cos_l[a][:, None, None]
        sl = sin_l[a][:, None, None]
        g = cl * f + sl * f_i  # exp(sign*i*theta_a) f, whole grid
        h = cl * f_j + sl * f_ij
        out[a] = np.einsum("xyc,by->bc", g, cos_r) + np.einsum(
            "xyc,by->bc", h, sin_r
        )

    _run_rows(one_row, m_len)
    return out


def qft_forward_direct(field: QuaternionField2D) -> QSpectrum2D:
    """Two-sided transform by the literal double sum; oracle for fast paths."""
    return QSpectrum2D(_two_sided_sum(field.data, -1.0), field.dx, field.dy)


def qft_inverse_direct(spec: QSpectrum2D) -> QuaternionField2D:
    out = _two_sided_sum(spec.data, 1.0) / (spec.M * spec.N)
    return QuaternionField2D(out, spec.dx, spec.dy)


def _right_sided_sum(data: np.ndarray, sign: float, j_first: bool) -> np.ndarray:
    """Right-sided double sum with both exponentials as right factors.

    j_first=False: sum data * e^(sign*i*theta) * e^(sign*j*phi)
    j_first=True:  sum data * e^(sign*j*phi) * e^(sign*i*theta)
    """
    m_len, n_len = data.shape[:2]
    cos_l, sin_l = _angle_tables(m_len, m_len, sign)
    cos_r, sin_r = _angle_tables(n_len, n_len, sign)
    out = np.empty((m_len, n_len, 4))

    if not j_first:
        f = data
        f_qi = qmul(f, UNIT_I)

        def one_row(a: int) -> None:
            cl = cos_l[a][:, None, None]
            sl = sin_l[a][:, None, None]
            g = cl * f + sl * f_qi  # f * e^(sign*i*theta_a)
            g_j = qmul(g, UNIT_J)
            out[a] = np.einsum("xyc,by->bc", g, cos_r) + np.einsum(
                "xyc,by->bc", g_j, sin_r
            )

        _run_rows(one_row, m_len)
        return out

    f = data
    f_qj = qmul(f, UNIT_J)

    def one_col(b: int) -> None:
        cr = cos_r[b][None, :, None]
        sr = sin_r[b][None, :, None]
        p = cr * f + sr * f_qj  # f * e^(sign*j*phi_b)
        p_i = qmul(p, UNIT_I)
        out[:, b] = np.einsum("xyc,ax->ac", p, cos_l) + np.einsum(
            "xyc,ax->ac", p_i, sin_l
        )

    _run_rows(one_col, n_len)
    return out


def qftr_forward_direct(field: QuaternionField2D) -> QSpectrum2D:
    """Right-sided transform by the literal double sum."""
    return QSpectrum2D(
        _right_sided_sum(field.data, -1.0, j_first=False), field.dx, field.dy
    )


def qftr_inverse_direct(spec: QSpectrum2D) -> QuaternionField2D:
    # inverse applies the exponentials in reversed order: j factor first
    out = _right_sided_sum(spec.data, 1.0, j_first=True) / (spec.M * spec.N)
    return QuaternionField2D(out, spec.dx, spec.dy)


# --- fast paths ------------------------------------------------------------


def _require_pow2(m_len: int, n_len: int, direct_name: str) -> None:
    if not (is_power_of_two(m_len) and is_power_of_two(n_len)):
        raise UnsupportedSizeError(
            f"fast path needs power-of-two sizes, got {m_len}x{n_len}; "
            f"use {direct_name} instead"
        )


def _freq_reverse(a: np.ndarray, axis: int) -> np.ndarray:
    """Index map n -> (-n) mod N along one axis."""
    return np.roll(np.flip(a, axis=axis), 1, axis=axis)


def _split_planes(data: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Complex planes of the +- split: f_pm = (c_pm as i-complex)*(1 pm k)/2."""
    c_plus = (data[..., 0] + data[..., 3]) + 1j * (data[..., 1] - data[..., 2])
    c_minus = (data[..., 0] - data[..., 3]) + 1j * (data[..., 1] + data[..., 2])
    return c_plus, c_minus


def _assemble_from_planes(d_plus: np.ndarray, d_minus: np.ndarray) -> np.ndarray:
    """Inverse of _split_planes: w*(1+k)/2 + w'*(1-k)/2 back to components."""
    out = np.empty(d_plus.shape + (4,))
    out[..., 0] = 0.5 * (d_plus.real + d_minus.real)
    out[..., 1] = 0.5 * (d_plus.imag + d_minus.imag)
    out[..., 2] = 0.5 * (d_minus.imag - d_plus.imag)
    out[..., 3] = 0.5 * (d_plus.real - d_minus.real)
    return out


def qft_forward_fast(field: QuaternionField2D) -> QSpectrum2D:
    """Two-sided transform via the +- split and two complex FFTs."""
    _require_pow2(field.M, field.N, "qft_forward_direct")
    c_plus, c_minus = _split_planes(field.data)
    d_plus = _freq_reverse(fft_axes(c_plus, (0, 1)), axis=1)
    d_minus = fft_axes(c_minus, (0, 1))
    return QSpectrum2D(_assemble_from_planes(d_plus, d_minus), field.dx, field.dy)


def qft_inverse_fast(spec: QSpectrum2D) -> QuaternionField2D:
    _require_pow2(spec.M, spec.N, "qft_inverse_direct")
    c_plus, c_minus = _split_planes(spec.data)
    e_plus = fft_axes(_freq_reverse(c_plus, axis=1), (0, 1), inverse=True)
    e_minus = fft_axes(c_minus, (0, 1), inverse=True)
    out = _assemble_from_planes(e_plus, e_minus) / (spec.M * spec.N)
    return QuaternionField2D(out, spec.dx, spec.dy)


def _cd_planes(data: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = data[..., 0] + 1j * data[..., 1]
    b = data[..., 2] + 1j * data[..., 3]
    return a, b


def _cd_assemble(z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    out = np.empty(z1.shape + (4,))
    out[..., 0] = z1.real
    out[..., 1] = z1.imag
    out[..., 2] = z2.real
    out[..., 3] = z2.imag
    return out


def qftr_forward_fast(field: QuaternionField2D) -> QSpectrum2D:
    """Right-sided transform via Cayley-Dickson planes and two complex FFTs."""
    _require_pow2(field.M, field.N, "qftr_forward_direct")
    a, b = _cd_planes(field.data)
    a_hat = fft_axes(a, (0, 1))
    b_hat = fft_axes(b, (0, 1))
    a_rev = _freq_reverse(a_hat, 1)  # A[m, -n]
    b_m = _freq_reverse(b_hat, 0)  # B[-m, n]
    b_mn = _freq_reverse(b_m, 1)  # B[-m, -n]
    z1 = 0.5 * (a_hat + a_rev) - 0.5j * (b_mn - b_m)
    z2 = 0.5 * (b_m + b_mn) + 0.5j * (a_rev - a_hat)
    return QSpectrum2D(_cd_assemble(z1, z2), field.dx, field.dy)


def qftr_inverse_fast(spec: QSpectrum2D) -> QuaternionField2D:
    _require_pow2(spec.M, spec.N, "qftr_inverse_direct")
    z1, z2 = _cd_planes(spec.data)
    i1 = fft_axes(z1, (0, 1), inverse=True)
    i2 = fft_axes(z2, (0, 1), inverse=True)
    i1_y = _freq_reverse(i1, 1)  # I(Z1)[x, -y]
    i2_y = _freq_reverse(i2, 1)
    i1_x = _freq_reverse(i1, 0)  # I(Z1)[-x, y]
    i1_xy = _freq_reverse(i1_x, 1)
    i2_x = _freq_reverse(i2, 0)
    i2_xy = _freq_reverse(i2_x, 1)
    y1 = 0.5 * (i1 + i1_y) + 0.5j * (i2 - i2_y)
    y2 = 0.5 * (i2_x + i2_xy) - 0.5j * (i1_x - i1_xy)
    out = _cd_assemble(y1, y2) / (spec.M * spec.N)
    return QuaternionField2D(out, spec.dx, spec.dy)


# --- path dispatch ----------------------------------------------------------


def _dispatch(obj, path: str, fast, direct, fast_name: str):
    if path == "fast":
        return fast(obj)
    if path == "direct":
        return direct(obj)
    if path != "auto":
        raise ValueError(f"unknown path {path!r}; expected auto, direct or fast")
    if is_power_of_two(obj.M) and is_power_of_two(obj.N):
        return fast(obj)
    warnings.warn(
        f"sizes {obj.M}x{obj.N} are not powers of two; "
        f"{fast_name} falling back to the direct summation path",
        RuntimeWarning,
        stacklevel=3,
    )
    return direct(obj)


def qft_forward(field: QuaternionField2D, path: str = "auto") -> QSpectrum2D:
    return _dispatch(field, path, qft_forward_fast, qft_forward_direct, "qft_forward")


def qft_inverse(spec: QSpectrum2D, path: str = "auto") -> QuaternionField2D:
    return _dispatch(spec, path, qft_inverse_fast, qft_inverse_direct, "qft_inverse")


def qftr_forward(field: QuaternionField2D, path: str = "auto") -> QSpectrum2D:
    return _dispatch(
        field, path, qftr_forward_fast, qftr_forward_direct, "qftr_forward"
    )


def qftr_inverse(spec: QSpectrum2D, path: str = "auto") -> QuaternionField2D:
    return _dispatch(
        spec, path, qftr_inverse_fast, qftr_inverse_direct, "qftr_inverse"
    )


# --- component route, splits, lattice operations ----------------------------


def qft_via_components(field: QuaternionField2D) -> QSpectrum2D:
    """Two-sided transform assembled from the four real component spectra.

    Each real component field r has quaternion spectrum
    CC - i*SC - j*CS + k*SS (C/S = cosine/sine sums over x/y); the total is
    rebuilt with the component placement F_r + i F_i + F_j j + i F_k j.
    """
    _require_pow2(field.M, field.N, "qft_forward_direct")
    spectra = []
    for c in range(4):
        r_hat = fft_axes(field.data[..., c].astype(np.complex128), (0, 1))
        r_rev = _freq_reverse(r_hat, 1)
        cc = 0.5 * (r_hat.real + r_rev.real)
        ss = 0.5 * (r_rev.real - r_hat.real)
        sc = -0.5 * (r_hat.imag + r_rev.imag)
        cs = 0.5 * (r_rev.imag - r_hat.imag)
        spectra.append(np.stack([cc, -sc, -cs, ss], axis=-1))
    f_r, f_i, f_j, f_k = spectra
    total = (
        f_r
        + qmul(UNIT_I, f_i)
        + qmul(f_j, UNIT_J)
        + qmul(UNIT_I, qmul(f_k, UNIT_J))
    )
    return QSpectrum2D(total, field.dx, field.dy)


def split_field_pm(field: QuaternionField2D) -> tuple[QuaternionField2D, QuaternionField2D]:
    """Pointwise +- split; the halves satisfy i*f_pm*j = +-f_pm."""
    plus, minus = qsplit(field.data)
    return (
        QuaternionField2D(plus, field.dx, field.dy),
        QuaternionField2D(minus, field.dx, field.dy),
    )


def split_spectrum_pm(spec: QSpectrum2D) -> tuple[QSpectrum2D, QSpectrum2D]:
    plus, minus = qsplit(spec.data)
    return (
        QSpectrum2D(plus, spec.dx, spec.dy),
        QSpectrum2D(minus, spec.dx, spec.dy),
    )


def circular_shift(field: QuaternionField2D, x0: int, y0: int) -> QuaternionField2D:
    """g(x, y) = f(x - x0, y - y0) with periodic wraparound."""
    return QuaternionField2D(
        np.roll(field.data, (x0, y0), axis=(0, 1)), field.dx, field.dy
    )


def modulate(field: QuaternionField2D, m0: int, n0: int) -> QuaternionField2D:
    """g = exp(i*2pi*m0*x/M) f exp(j*2pi*n0*y/N); shifts the spectrum."""
    m_len, n_len = field.M, field.N
    theta = 2.0 * np.pi * m0 * np.arange(m_len) / m_len
    phi = 2.0 * np.pi * n0 * np.arange(n_len) / n_len
    left = np.stack(
        [np.cos(theta), np.sin(theta), np.zeros(m_len), np.zeros(m_len)], axis=-1
    )
    right = np.stack(
        [np.cos(phi), np.zeros(n_len), np.sin(phi), np.zeros(n_len)], axis=-1
    )
    out = qmul(left[:, None, :], qmul(field.data, right[None, :, :]))
    return QuaternionField2D(out, field.dx, field.dy)


def dilate(field: QuaternionField2D, a: int, b: int) -> QuaternionField2D:
    """g(x, y) = f(a*x mod M, b*y mod N); a, b must be units mod M, N.

    On the periodic lattice this is a measure-preserving permutation, so
    the spectrum maps by the inverse units with no 1/|ab| factor.
    """
    m_len, n_len = field.M, field.N
    a_m = a % m_len
    b_n = b % n_len
    if np.gcd(a_m, m_len) != 1 or np.gcd(b_n, n_len) != 1:
        raise ValueError(
            f"dilation factors must be coprime to the grid sizes, "
            f"got a={a} (M={m_len}), b={b} (N={n_len})"
        )
    xi = (a_m * np.arange(m_len)) % m_len
    yi = (b_n * np.arange(n_len)) % n_len
    return QuaternionField2D(field.data[np.ix_(xi, yi)], field.dx, field.dy)


def mod_inverse(a: int, n: int) -> int:
    """Multiplicative inverse of a modulo n (a coprime to n)."""
    return pow(a % n, -1, n)


# --- inner products ----------------------------------------------------------


def scalar_inner(f: np.ndarray, g: np.ndarray) -> float:
    """Scalar inner product sum over samples of <f(x) conj(g(x))>_0."""
    return float(np.sum(qscalar(qmul(f, qconj(g)))))


def quat_inner(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Quaternion-valued inner product: sum of f(x) conj(g(x))."""
    return np.sum(qmul(f, qconj(g)), axis=tuple(range(f.ndim - 1)))


def norm_sq(f: np.ndarray) -> float:
    """Total squared magnitude: sum over samples of |f(x)|^2."""
    return float(np.sum(np.asarray(f) ** 2))
