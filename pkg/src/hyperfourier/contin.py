"""Continuous-domain transform checks by numerical quadrature.

The lattice transforms verify most algebraic laws exactly, but the rules
involving derivatives, coordinate powers, and general invertible coordinate
maps only hold for the integral transform

    F(u, v) = integral exp(-i*x*u) f(x, y) exp(-j*y*v) dx dy.

This module evaluates that integral with tensor-product trapezoid rules on
a family of test functions that is closed under everything the theorems
need: sums of quaternion-coefficient terms

    coeff * (x - x0)**deg_x * (y - y0)**deg_y * gauss(x; sigma_x) * gauss(y; sigma_y).

Differentiation, multiplication by x or y, and the +- split all stay inside
the family, so both sides of each law can be evaluated with the same
quadrature machinery.  Gaussian tails put the truncation error near machine
precision for the default window of 8 sigma.

Derivatives of the spectrum are approximated by central finite differences.
The difference stencil is applied to the kernel inside the quadrature sum
(the same linear combination, summed per node), which avoids the
catastrophic cancellation of differencing two nearly equal integrals.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .autom import LinearMap2, b_matrices
from .quat import I, J, ONE, Quaternion, UNIT_I, UNIT_J, qmul, qsplit

__all__ = [
    "GaussTerm",
    "AnalyticTestFunction",
    "QuadratureSpec",
    "DEFAULT_QUADRATURE",
    "cqft_eval",
    "cqft_fd",
    "cqft_eval_composed",
    "cqft_eval_modulated",
    "probe_frequencies",
    "GLLawReport",
    "verify_gl_law",
    "verify_partial_deriv",
    "verify_powers_xy",
    "verify_shift_law",
    "verify_modulation_law",
]


@dataclass(frozen=True)
class GaussTerm:
    """One term: coeff * (x-x0)^deg_x (y-y0)^deg_y * separable Gaussian."""

    coeff: Quaternion
    sigma_x: float = 1.0
    sigma_y: float = 1.0
    deg_x: int = 0
    deg_y: int = 0
    x0: float = 0.0
    y0: float = 0.0

    def __post_init__(self):
        if self.sigma_x <= 0.0 or self.sigma_y <= 0.0:
            raise ValueError("sigma must be positive")
        if self.deg_x < 0 or self.deg_y < 0:
            raise ValueError("monomial degrees must be nonnegative")

    def envelope(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        dx = x - self.x0
        dy = y - self.y0
        out = np.exp(-0.5 * (dx / self.sigma_x) ** 2 - 0.5 * (dy / self.sigma_y) ** 2)
        if self.deg_x:
            out = out * dx**self.deg_x
        if self.deg_y:
            out = out * dy**self.deg_y
        return out


class AnalyticTestFunction:
    """Finite sum of GaussTerm; closed under d/dx, d/dy, x*, y*, +- split."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        terms = tuple(terms)
        if not terms:
            raise ValueError("need at least one term")
        self.terms = terms

    @classmethod
    def gaussian(
        cls,
        coeff: Quaternion = ONE,
        sigma_x: float = 1.0,
        sigma_y: float = 1.0,
        deg_x: int = 0,
        deg_y: int = 0,
        center: tuple[float, float] = (0.0, 0.0),
    ) -> "AnalyticTestFunction":
        term = GaussTerm(coeff, sigma_x, sigma_y, deg_x, deg_y, *center)
        return cls((term,))

    def evaluate(self, x, y) -> np.ndarray:
        """Quaternion values on broadcast grids, component axis last."""
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        shape = np.broadcast_shapes(x.shape, y.shape)
        out = np.zeros(shape + (4,))
        for t in self.terms:
            out += t.envelope(x, y)[..., None] * t.coeff.as_array()
        return out

    def derivative_x(self) -> "AnalyticTestFunction":
        terms = []
        for t in self.terms:
            if t.deg_x:
                terms.append(replace(t, coeff=t.coeff * float(t.deg_x), deg_x=t.deg_x - 1))
            terms.append(
                replace(t, coeff=t.coeff * (-1.0 / t.sigma_x**2), deg_x=t.deg_x + 1)
            )
        return AnalyticTestFunction(terms)

    def derivative_y(self) -> "AnalyticTestFunction":
        terms = []
        for t in self.terms:
            if t.deg_y:
                terms.append(replace(t, coeff=t.coeff * float(t.deg_y), deg_y=t.deg_y - 1))
            terms.append(
                replace(t, coeff=t.coeff * (-1.0 / t.sigma_y**2), deg_y=t.deg_y + 1)
            )
        return AnalyticTestFunction(terms)

    def multiply_by_x(self) -> "AnalyticTestFunction":
        terms = []
        for t in self.terms:
            terms.append(replace(t, deg_x=t.deg_x + 1))
            if t.x0 != 0.0:
                terms.append(replace(t, coeff=t.coeff * t.x0))
        return AnalyticTestFunction(terms)

    def multiply_by_y(self) -> "AnalyticTestFunction":
        terms = []
        for t in self.terms:
            terms.append(replace(t, deg_y=t.deg_y + 1))
            if t.y0 != 0.0:
                terms.append(replace(t, coeff=t.coeff * t.y0))
        return AnalyticTestFunction(terms)

    def split_pm(self) -> tuple["AnalyticTestFunction", "AnalyticTestFunction"]:
        """(f_plus, f_minus): the coefficient split, since envelopes are real."""
        plus, minus = [], []
        for t in self.terms:
            cp, cm = qsplit(t.coeff.as_array())
            plus.append(replace(t, coeff=Quaternion.from_array(cp)))
            minus.append(replace(t, coeff=Quaternion.from_array(cm)))
        return AnalyticTestFunction(plus), AnalyticTestFunction(minus)

    def sigma_x_max(self) -> float:
        return max(t.sigma_x for t in self.terms)

    def sigma_y_max(self) -> float:
        return max(t.sigma_y for t in self.terms)

    def center_radius(self) -> float:
        return max(np.hypot(t.x0, t.y0) for t in self.terms)


@dataclass(frozen=True)
class QuadratureSpec:
    """Trapezoid tensor rule: window of half_width sigmas, samples intervals."""

    half_width: float = 8.0
    samples: int = 256
    rule: str = "trapezoid"

    def __post_init__(self):
        if self.half_width < 6.0:
            raise ValueError("half_width below 6 sigma truncates the Gaussian tails")
        if self.samples < 128:
            raise ValueError("fewer than 128 samples per axis is too coarse")
        if self.rule != "trapezoid":
            raise ValueError(f"unsupported rule {self.rule!r}")


DEFAULT_QUADRATURE = QuadratureSpec()


def _axis_rule(half: float, samples: int) -> tuple[np.ndarray, np.ndarray]:
    xs = np.linspace(-half, half, samples + 1)
    w = np.full(xs.size, xs[1] - xs[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return xs, w


class _QuadGrid:
    """Sampled integrand with the left/right unit multiples precomputed.

    eval() contracts the grids against one complex kernel vector per axis:
    with kx = a + i*b and ky = c + j*d (component arrays), the integral of
    kx * f * ky expands into the four real tensor contractions below.
    """

    __slots__ = ("xs", "ys", "wx", "wy", "q", "qi", "qj", "qij")

    def __init__(self, values: np.ndarray, xs, ys, wx, wy):
        self.xs, self.ys, self.wx, self.wy = xs, ys, wx, wy
        self.q = values
        self.qi = qmul(UNIT_I, values)
        self.qj = qmul(values, UNIT_J)
        self.qij = qmul(UNIT_I, self.qj)

    def eval(self, kx: np.ndarray, ky: np.ndarray) -> Quaternion:
        rx = self.wx * kx.real
        ix = self.wx * kx.imag
        ry = self.wy * ky.real
        iy = self.wy * ky.imag
        out = (
            np.einsum("x,y,xyc->c", rx, ry, self.q)
            + np.einsum("x,y,xyc->c", rx, iy, self.qj)
            + np.einsum("x,y,xyc->c", ix, ry, self.qi)
            + np.einsum("x,y,xyc->c", ix, iy, self.qij)
        )
        return Quaternion.from_array(out)


def _base_grid(f: AnalyticTestFunction, spec: QuadratureSpec) -> _QuadGrid:
    cr = f.center_radius()
    hx = spec.half_width * f.sigma_x_max() + cr
    hy = spec.half_width * f.sigma_y_max() + cr
    xs, wx = _axis_rule(hx, spec.samples)
    ys, wy = _axis_rule(hy, spec.samples)
    values = f.evaluate(xs[:, None], ys[None, :])
    return _QuadGrid(values, xs, ys, wx, wy)


def _composed_grid(
    f: AnalyticTestFunction, a_map: LinearMap2, spec: QuadratureSpec
) -> _QuadGrid:
    # integrate f(A x): pull the support radius back through A**-1
    radius = spec.half_width * max(f.sigma_x_max(), f.sigma_y_max())
    radius += f.center_radius()
    grow = float(np.linalg.norm(np.linalg.inv(a_map.matrix), 2))
    half = max(1.0, grow) * radius
    xs, wx = _axis_rule(half, spec.samples)
    ys, wy = _axis_rule(half, spec.samples)
    m = a_map.matrix
    mx = m[0, 0] * xs[:, None] + m[0, 1] * ys[None, :]
    my = m[1, 0] * xs[:, None] + m[1, 1] * ys[None, :]
    values = f.evaluate(mx, my)
    return _QuadGrid(values, xs, ys, wx, wy)


def _plain_kernels(grid: _QuadGrid, u: float, v: float):
    return np.exp(-1j * grid.xs * u), np.exp(-1j * grid.ys * v)


def cqft_eval(
    f: AnalyticTestFunction, u: float, v: float, spec: QuadratureSpec = DEFAULT_QUADRATURE
) -> Quaternion:
    """Transform value F(u, v) by tensor trapezoid quadrature."""
    grid = _base_grid(f, spec)
    return grid.eval(*_plain_kernels(grid, u, v))


def _stencil_factor(xs: np.ndarray, order: int, h: float) -> np.ndarray:
    """Central-difference stencil applied to exp(-i*x*u) under the integral.

    Differencing the kernel in u pulls out a per-node factor independent of
    u: order 1 gives (e^{-ixh} - e^{ixh})/(2h), order 2 gives
    (e^{-ixh} - 2 + e^{ixh})/h^2.
    """
    if order == 0:
        return np.ones_like(xs, dtype=np.complex128)
    if order == 1:
        return -1j * np.sin(xs * h) / h
    if order == 2:
        return (2.0 * np.cos(xs * h) - 2.0) / (h * h)
    raise ValueError("finite-difference order must be 0, 1 or 2")


def cqft_fd(
    f: AnalyticTestFunction,
    u: float,
    v: float,
    du_order: int,
    dv_order: int,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    step: float = 1e-3,
) -> Quaternion:
    """Central finite difference d^(du+dv) F / du^du dv^dv at (u, v)."""
    grid = _base_grid(f, spec)
    kx, ky = _plain_kernels(grid, u, v)
    kx = kx * _stencil_factor(grid.xs, du_order, step)
    ky = ky * _stencil_factor(grid.ys, dv_order, step)
    return grid.eval(kx, ky)


def cqft_eval_composed(
    f: AnalyticTestFunction,
    a_map: LinearMap2,
    u: float,
    v: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> Quaternion:
    """Transform of the composed function x -> f(A x), evaluated at (u, v)."""
    grid = _composed_grid(f, a_map, spec)
    return grid.eval(*_plain_kernels(grid, u, v))


def cqft_eval_modulated(
    f: AnalyticTestFunction,
    u0: float,
    v0: float,
    u: float,
    v: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> Quaternion:
    """Transform of exp(i*u0*x) f exp(j*v0*y), integrated literally."""
    grid = _base_grid(f, spec)
    kx, ky = _plain_kernels(grid, u, v)
    kx = kx * np.exp(1j * grid.xs * u0)
    ky = ky * np.exp(1j * grid.ys * v0)
    return grid.eval(kx, ky)


def probe_frequencies(
    f: AnalyticTestFunction, offsets=(-2.0, -1.0, 0.0, 1.0, 2.0)
) -> np.ndarray:
    """Default frequency probe grid, offsets scaled by the inverse widths."""
    us = np.asarray(offsets) / f.sigma_x_max()
    vs = np.asarray(offsets) / f.sigma_y_max()
    return np.array([(u, v) for u in us for v in vs])


_I_POW = (ONE, I, -ONE, -I)
_J_POW = (ONE, J, -ONE, -J)


def _max_abs(q: Quaternion) -> float:
    return float(np.max(np.abs(q.as_array())))


# --- theorem checks ----------------------------------------------------------


@dataclass(frozen=True)
class GLLawReport:
    """Quadrature check of the composed-map law at the probe frequencies.

    max_abs/max_rel compare the transform of f(Ax) against
    |det A^-1| * (F_minus(B_plus u) + F_plus(B_minus u)); routes_max_abs
    compares that expression against the recombined matrix form built from
    the full spectrum at B_plus u and B_minus u, which shares every
    quadrature value and so must agree to roundoff.
    """

    max_abs: float
    max_rel: float
    routes_max_abs: float
    det_abs_inv: float


def verify_gl_law(
    a_map: LinearMap2,
    f: AnalyticTestFunction,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> GLLawReport:
    f_plus, f_minus = f.split_pm()
    grid_plus = _base_grid(f_plus, spec)
    grid_minus = _base_grid(f_minus, spec)
    grid_lhs = _composed_grid(f, a_map, spec)
    b_plus, b_minus = b_matrices(a_map)
    det_abs_inv = abs(1.0 / a_map.det)

    law_abs = 0.0
    routes_abs = 0.0
    scale = 0.0
    for u, v in probe_frequencies(f):
        wp = b_plus((u, v))
        wm = b_minus((u, v))
        fp_at_bp = grid_plus.eval(*_plain_kernels(grid_plus, *wp))
        fm_at_bp = grid_minus.eval(*_plain_kernels(grid_minus, *wp))
        fp_at_bm = grid_plus.eval(*_plain_kernels(grid_plus, *wm))
        fm_at_bm = grid_minus.eval(*_plain_kernels(grid_minus, *wm))

        geometric = det_abs_inv * (fm_at_bp + fp_at_bm)
        full_bp = fp_at_bp + fm_at_bp
        full_bm = fp_at_bm + fm_at_bm
        matrix = (0.5 * det_abs_inv) * (
            full_bp + full_bm - I * (full_bp - full_bm) * J
        )
        lhs = grid_lhs.eval(*_plain_kernels(grid_lhs, u, v))

        law_abs = max(law_abs, _max_abs(lhs - geometric))
        routes_abs = max(routes_abs, _max_abs(geometric - matrix))
        scale = max(scale, _max_abs(lhs))
    return GLLawReport(law_abs, law_abs / max(scale, 1e-300), routes_abs, det_abs_inv)


def verify_partial_deriv(
    f: AnalyticTestFunction,
    m: int,
    n: int,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    swapped: bool = False,
) -> float:
    """Max relative deviation of QFT(d^m/dx^m d^n/dy^n f) from (iu)^m F (jv)^n.

    swapped=True evaluates the wrong placement (iu)^m -> right, (jv)^n -> left
    as a negative control; it must fail for generic f.
    """
    if not (0 <= m <= 3 and 0 <= n <= 3):
        raise ValueError("derivative orders supported up to 3")
    lhs_f = f
    for _ in range(m):
        lhs_f = lhs_f.derivative_x()
    for _ in range(n):
        lhs_f = lhs_f.derivative_y()
    grid_lhs = _base_grid(lhs_f, spec)
    grid_f = _base_grid(f, spec)

    dev = 0.0
    scale = 0.0
    for u, v in probe_frequencies(f):
        lhs = grid_lhs.eval(*_plain_kernels(grid_lhs, u, v))
        fhat = grid_f.eval(*_plain_kernels(grid_f, u, v))
        factor = u**m * v**n
        if swapped:
            rhs = factor * (_J_POW[n % 4] * fhat * _I_POW[m % 4])
        else:
            rhs = factor * (_I_POW[m % 4] * fhat * _J_POW[n % 4])
        dev = max(dev, _max_abs(lhs - rhs))
        scale = max(scale, _max_abs(lhs))
    return dev / max(scale, 1e-300)


def verify_powers_xy(
    f: AnalyticTestFunction,
    m: int,
    n: int,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    step: float = 1e-3,
    swapped: bool = False,
) -> float:
    """Max relative deviation of QFT(x^m y^n f) from i^m d^(m+n)F/du^m dv^n j^n."""
    if not (0 <= m <= 2 and 0 <= n <= 2):
        raise ValueError("power orders supported up to 2")
    lhs_f = f
    for _ in range(m):
        lhs_f = lhs_f.multiply_by_x()
    for _ in range(n):
        lhs_f = lhs_f.multiply_by_y()
    grid_lhs = _base_grid(lhs_f, spec)
    grid_f = _base_grid(f, spec)

    dev = 0.0
    scale = 0.0
    for u, v in probe_frequencies(f):
        lhs = grid_lhs.eval(*_plain_kernels(grid_lhs, u, v))
        kx, ky = _plain_kernels(grid_f, u, v)
        kx = kx * _stencil_factor(grid_f.xs, m, step)
        ky = ky * _stencil_factor(grid_f.ys, n, step)
        deriv = grid_f.eval(kx, ky)
        if swapped:
            rhs = _J_POW[n % 4] * deriv * _I_POW[m % 4]
        else:
            rhs = _I_POW[m % 4] * deriv * _J_POW[n % 4]
        dev = max(dev, _max_abs(lhs - rhs))
        scale = max(scale, _max_abs(lhs))
    return dev / max(scale, 1e-300)


def verify_shift_law(
    f: AnalyticTestFunction,
    x0: float,
    y0: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """QFT(f(x - x0, y - y0)) vs exp(-i*x0*u) F exp(-j*y0*v), max relative."""
    shifted = AnalyticTestFunction(
        [replace(t, x0=t.x0 + x0, y0=t.y0 + y0) for t in f.terms]
    )
    grid_s = _base_grid(shifted, spec)
    grid_f = _base_grid(f, spec)
    dev = 0.0
    scale = 0.0
    for u, v in probe_frequencies(f):
        lhs = grid_s.eval(*_plain_kernels(grid_s, u, v))
        fhat = grid_f.eval(*_plain_kernels(grid_f, u, v))
        left = Quaternion(np.cos(x0 * u), -np.sin(x0 * u), 0.0, 0.0)
        right = Quaternion(np.cos(y0 * v), 0.0, -np.sin(y0 * v), 0.0)
        rhs = left * fhat * right
        dev = max(dev, _max_abs(lhs - rhs))
        scale = max(scale, _max_abs(lhs))
    return dev / max(scale, 1e-300)


def verify_modulation_law(
    f: AnalyticTestFunction,
    u0: float,
    v0: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """QFT(exp(i*u0*x) f exp(j*v0*y))(u, v) vs F(u - u0, v - v0)."""
    grid_f = _base_grid(f, spec)
    dev = 0.0
    scale = 0.0
    for u, v in probe_frequencies(f):
        lhs = grid_f.eval(
            np.exp(-1j * grid_f.xs * u) * np.exp(1j * grid_f.xs * u0),
            np.exp(-1j * grid_f.ys * v) * np.exp(1j * grid_f.ys * v0),
        )
        rhs = grid_f.eval(*_plain_kernels(grid_f, u - u0, v - v0))
        dev = max(dev, _max_abs(lhs - rhs))
        scale = max(scale, _max_abs(lhs))
    return dev / max(scale, 1e-300)
