"""Seeded verification suites for the transform laws.

Each suite runs a fixed list of checks with a deterministic RNG and reports
one row per check: the measured deviation, the bound it must satisfy, and
the comparison direction.  Most checks require value <= bound; negative
controls require value > bound, demonstrating that a law genuinely fails
where it should (wrong operand order, wrong constant class, dropped
absolute value and so on).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import contin
from .autom import LinearMap2, LinearMap4, rotation
from .clifford import (
    VT_MASKS,
    cl02,
    cl20,
    cl30,
    cl31,
    cl31_units,
    dual,
    iso_cl02_to_h,
    iso_cl30_even_to_h,
    iso_h_to_cl02,
    iso_h_to_cl30_even,
    iso_h_to_vt,
    iso_vt_to_h,
)
from .quat import I, J, K, ONE, Quaternion, qconj, qmul, qnorm, qsplit
from .qft2d import (
    QuaternionField2D,
    circular_shift,
    dilate,
    mod_inverse,
    modulate,
    norm_sq,
    qft_forward,
    qft_inverse,
    qft_via_components,
    qftr_forward,
    qftr_inverse,
    quat_inner,
    scalar_inner,
)
from .spacetime import (
    SpacetimeField4D,
    decompose_vt,
    recompose_vt,
    right_multiply,
    sft_forward,
    sft_inverse,
    sft_right_form,
    split_spacetime_pm,
    total_energy,
    verify_sft_gl,
    vt_recompose,
    vtft_forward,
    vtft_inverse,
    wave_packet_energy_split,
)

__all__ = ["CheckResult", "RunReport", "run_suite", "SUITE_NAMES"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    bound: float
    comparison: str  # "<=" for laws, ">" for negative controls
    passed: bool
    seconds: float


@dataclass(frozen=True)
class RunReport:
    suite: str
    seed: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [
            f"suite {self.suite} (seed {self.seed})",
            f"{'check'.ljust(width)}      deviation      bound  cmp      time  status",
        ]
        for c in self.checks:
            lines.append(
                f"{c.name.ljust(width)}  {c.value:13.3e}  {c.bound:9.0e}  "
                f"{c.comparison:>3}  {c.seconds:7.3f}s  "
                f"{'pass' if c.passed else 'FAIL'}"
            )
        n_fail = sum(not c.passed for c in self.checks)
        lines.append(
            f"{len(self.checks)} checks, "
            + ("all passed" if n_fail == 0 else f"{n_fail} FAILED")
        )
        return "\n".join(lines)


class _Recorder:
    def __init__(self):
        self.checks: list[CheckResult] = []

    def _run(self, name, bound, fn, comparison):
        start = time.perf_counter()
        value = float(fn())
        elapsed = time.perf_counter() - start
        passed = value <= bound if comparison == "<=" else value > bound
        self.checks.append(
            CheckResult(name, value, float(bound), comparison, passed, elapsed)
        )

    def within(self, name, bound, fn):
        self._run(name, bound, fn, "<=")

    def exceeds(self, name, bound, fn):
        self._run(name, bound, fn, ">")


def _rel(delta, ref) -> float:
    return float(np.max(np.abs(delta)) / max(np.max(np.abs(ref)), 1e-300))


def _rand_field(rng, m_len, n_len) -> QuaternionField2D:
    return QuaternionField2D(rng.standard_normal((m_len, n_len, 4)))


def _rand_quat(rng) -> Quaternion:
    return Quaternion(*rng.standard_normal(4))


# --- quaternion algebra --------------------------------------------------------


def _suite_quat(rec: _Recorder, rng) -> None:
    a = rng.standard_normal((300, 4))
    b = rng.standard_normal((300, 4))
    c = rng.standard_normal((300, 4))

    rec.within(
        "product associativity",
        1e-12,
        lambda: np.max(np.abs(qmul(qmul(a, b), c) - qmul(a, qmul(b, c)))),
    )
    rec.within(
        "norm multiplicativity",
        1e-12,
        lambda: np.max(np.abs(qnorm(qmul(a, b)) - qnorm(a) * qnorm(b))),
    )
    rec.within(
        "conjugation reverses products",
        1e-12,
        lambda: np.max(np.abs(qconj(qmul(a, b)) - qmul(qconj(b), qconj(a)))),
    )

    plus, minus = qsplit(a)
    rec.within(
        "split halves reconstruct", 1e-14, lambda: np.max(np.abs(plus + minus - a))
    )

    def eigen_dev():
        iu = I.as_array()
        ju = J.as_array()
        d1 = qmul(iu, qmul(plus, ju)) - plus
        d2 = qmul(iu, qmul(minus, ju)) + minus
        return max(np.max(np.abs(d1)), np.max(np.abs(d2)))

    rec.within("split eigen relation i q j = +-q", 1e-14, eigen_dev)

    def unit_table_dev():
        pairs = {
            (I, J): K, (J, K): I, (K, I): J,
            (J, I): -K, (K, J): -I, (I, K): -J,
            (I, I): -ONE, (J, J): -ONE, (K, K): -ONE,
        }
        return max(
            np.max(np.abs((p * q - r).as_array())) for (p, q), r in pairs.items()
        )

    rec.within("basis multiplication table", 0.0, unit_table_dev)

    def exp_addition_dev():
        angles = rng.uniform(-6, 6, size=(100, 2))
        dev = 0.0
        for axis in (I, J, K):
            from .quat import axis_exp

            for t1, t2 in angles:
                lhs = axis_exp(axis, t1) * axis_exp(axis, t2)
                rhs = axis_exp(axis, t1 + t2)
                dev = max(dev, np.max(np.abs((lhs - rhs).as_array())))
        return dev

    rec.within("axis exponential addition", 1e-12, exp_addition_dev)


# --- Clifford algebra ----------------------------------------------------------


def _suite_clifford(rec: _Recorder, rng) -> None:
    for sig in (cl20(), cl02(), cl30(), cl31()):
        dim = len(sig.mask_table)
        a = rng.standard_normal((1000, dim))
        b = rng.standard_normal((1000, dim))
        c = rng.standard_normal((1000, dim))
        label = f"Cl({sig.p},{sig.q})"
        rec.within(
            f"{label} product associativity",
            1e-11,
            lambda a=a, b=b, c=c, s=sig: np.max(
                np.abs(s.array_mul(s.array_mul(a, b), c) - s.array_mul(a, s.array_mul(b, c)))
            ),
        )
        rec.within(
            f"{label} reversion anti-automorphism",
            1e-11,
            lambda a=a, b=b, s=sig: np.max(
                np.abs(
                    s.array_reverse(s.array_mul(a, b))
                    - s.array_mul(s.array_reverse(b), s.array_reverse(a))
                )
            ),
        )

    units = cl31_units()

    def volume_squares_dev():
        dev = 0.0
        minus_one = cl31().scalar(-1.0)
        for name in ("e0", "i3", "i4"):
            sq = units[name] * units[name]
            dev = max(dev, np.max(np.abs((sq - minus_one).coeffs)))
        return dev

    rec.within("e0, i3, i4 square to -1", 1e-11, volume_squares_dev)

    def i3_commutation_dev():
        sig = cl31()
        i3 = units["i3"]
        dev = 0.0
        for k in range(3):
            v = sig.basis_vector(k)
            dev = max(dev, np.max(np.abs((i3 * v - v * i3).coeffs)))
        coeffs = np.zeros(16)
        coeffs[:8] = rng.standard_normal(8)  # spatial subalgebra support
        spatial = sig.from_coeffs(coeffs)
        dev = max(dev, np.max(np.abs((i3 * spatial - spatial * i3).coeffs)))
        return dev

    rec.within("i3 commutes with the spatial subalgebra", 1e-11, i3_commutation_dev)

    rec.within(
        "dual of e0 is i3",
        1e-11,
        lambda: np.max(np.abs((dual(units["e0"]) - units["i3"]).coeffs)),
    )

    iso_cases = [
        ("Cl(0,2) embedding", iso_h_to_cl02, iso_cl02_to_h),
        ("Cl(3,0) even embedding", iso_h_to_cl30_even, iso_cl30_even_to_h),
        ("volume-time embedding", iso_h_to_vt, iso_vt_to_h),
    ]
    for label, fwd, back in iso_cases:

        def iso_dev(fwd=fwd, back=back):
            dev = 0.0
            for _ in range(1000):
                p = _rand_quat(rng)
                q = _rand_quat(rng)
                hom = fwd(p) * fwd(q) - fwd(p * q)
                dev = max(dev, np.max(np.abs(hom.coeffs)))
                rt = back(fwd(p)) - p
                dev = max(dev, np.max(np.abs(rt.as_array())))
            return dev

        rec.within(f"{label} is a homomorphism", 1e-11, iso_dev)


# --- two-sided transform -------------------------------------------------------


def _phase_left(m_len: int, x0: int) -> np.ndarray:
    theta = 2.0 * np.pi * x0 * np.arange(m_len) / m_len
    out = np.zeros((m_len, 4))
    out[:, 0] = np.cos(theta)
    out[:, 1] = -np.sin(theta)
    return out


def _phase_right(n_len: int, y0: int) -> np.ndarray:
    phi = 2.0 * np.pi * y0 * np.arange(n_len) / n_len
    out = np.zeros((n_len, 4))
    out[:, 0] = np.cos(phi)
    out[:, 2] = -np.sin(phi)
    return out


_I_POW = (ONE, I, -ONE, -I)
_J_POW = (ONE, J, -ONE, -J)


def _suite_qft(rec: _Recorder, rng) -> None:
    f64 = _rand_field(rng, 16, 16)
    rec.within(
        "round trip (fast)",
        1e-10,
        lambda: _rel(qft_inverse(qft_forward(f64, "fast"), "fast").data - f64.data, f64.data),
    )
    rec.within(
        "round trip (direct)",
        1e-10,
        lambda: _rel(
            qft_inverse(qft_forward(f64, "direct"), "direct").data - f64.data, f64.data
        ),
    )
    rec.within(
        "fast path matches direct sum",
        1e-9,
        lambda: _rel(
            qft_forward(f64, "fast").data - qft_forward(f64, "direct").data,
            qft_forward(f64, "direct").data,
        ),
    )
    rec.within(
        "component-spectra route matches",
        1e-9,
        lambda: _rel(
            qft_via_components(f64).data - qft_forward(f64, "direct").data,
            qft_forward(f64, "direct").data,
        ),
    )

    def scalar_plancherel_dev():
        dev = 0.0
        for _ in range(100):
            f = _rand_field(rng, 8, 8)
            g = _rand_field(rng, 8, 8)
            lhs = scalar_inner(f.data, g.data)
            rhs = scalar_inner(qft_forward(f).data, qft_forward(g).data) / 64.0
            dev = max(dev, abs(lhs - rhs) / (np.sqrt(norm_sq(f.data) * norm_sq(g.data))))
        return dev

    rec.within("scalar inner product preserved", 1e-9, scalar_plancherel_dev)

    def parseval_dev():
        dev = 0.0
        for _ in range(100):
            f = _rand_field(rng, 8, 8)
            dev = max(
                dev,
                abs(norm_sq(f.data) - norm_sq(qft_forward(f).data) / 64.0)
                / norm_sq(f.data),
            )
        return dev

    rec.within("squared norm preserved", 1e-10, parseval_dev)

    def quat_plancherel_margin():
        # concrete pair: the quaternion-valued form cannot survive the
        # two-sided kernel; scalar parts agree but the full product does not
        f = QuaternionField2D(np.zeros((8, 8, 4)))
        g = QuaternionField2D(np.zeros((8, 8, 4)))
        f.data[1, 0, 2] = 1.0  # j at x=(1,0)
        g.data[1, 0, 0] = 1.0  # 1 at x=(1,0)
        lhs = quat_inner(f.data, g.data)
        rhs = quat_inner(qft_forward(f).data, qft_forward(g).data) / 64.0
        return np.max(np.abs(lhs - rhs))

    rec.exceeds(
        "quaternion inner product breaks (control)", 1e-3, quat_plancherel_margin
    )

    def shift_law_dev():
        dev = 0.0
        for _ in range(50):
            f = _rand_field(rng, 8, 8)
            x0, y0 = int(rng.integers(0, 8)), int(rng.integers(0, 8))
            lhs = qft_forward(circular_shift(f, x0, y0)).data
            spec = qft_forward(f).data
            rhs = qmul(
                _phase_left(8, x0)[:, None, :],
                qmul(spec, _phase_right(8, y0)[None, :, :]),
            )
            dev = max(dev, _rel(lhs - rhs, rhs))
        return dev

    rec.within("shift law", 1e-10, shift_law_dev)

    def modulation_law_dev():
        dev = 0.0
        for _ in range(50):
            f = _rand_field(rng, 8, 8)
            m0, n0 = int(rng.integers(0, 8)), int(rng.integers(0, 8))
            lhs = qft_forward(modulate(f, m0, n0)).data
            rhs = np.roll(qft_forward(f).data, (m0, n0), axis=(0, 1))
            dev = max(dev, _rel(lhs - rhs, rhs))
        return dev

    rec.within("modulation law", 1e-10, modulation_law_dev)

    def unit_power_dev():
        f = _rand_field(rng, 8, 8)
        spec = qft_forward(f).data
        dev = 0.0
        for m in range(4):
            for n in range(4):
                g = QuaternionField2D(
                    qmul(_I_POW[m].as_array(), qmul(f.data, _J_POW[n].as_array()))
                )
                lhs = qft_forward(g).data
                rhs = qmul(_I_POW[m].as_array(), qmul(spec, _J_POW[n].as_array()))
                dev = max(dev, _rel(lhs - rhs, spec))
        return dev

    rec.within("powers of i and j slide out", 1e-12, unit_power_dev)

    def linearity_dev():
        dev = 0.0
        for _ in range(50):
            f = _rand_field(rng, 8, 8)
            g = _rand_field(rng, 8, 8)
            alpha = Quaternion(rng.standard_normal(), rng.standard_normal(), 0.0, 0.0)
            beta = Quaternion(rng.standard_normal(), 0.0, rng.standard_normal(), 0.0)
            mixed = QuaternionField2D(
                qmul(alpha.as_array(), f.data) + qmul(g.data, beta.as_array())
            )
            lhs = qft_forward(mixed).data
            rhs = qmul(alpha.as_array(), qft_forward(f).data) + qmul(
                qft_forward(g).data, beta.as_array()
            )
            dev = max(dev, _rel(lhs - rhs, rhs))
        return dev

    rec.within("left/right linearity (stated constant classes)", 1e-10, linearity_dev)

    def dilation_law_dev():
        dev = 0.0
        units_mod8 = (1, 3, 5, 7)
        for _ in range(50):
            f = _rand_field(rng, 8, 8)
            a = int(rng.choice(units_mod8))
            b = int(rng.choice(units_mod8))
            lhs = qft_forward(dilate(f, a, b)).data
            spec = qft_forward(f).data
            ai, bi = mod_inverse(a, 8), mod_inverse(b, 8)
            xi = (ai * np.arange(8)) % 8
            yi = (bi * np.arange(8)) % 8
            rhs = spec[np.ix_(xi, yi)]
            dev = max(dev, _rel(lhs - rhs, rhs))
        return dev

    rec.within("lattice dilation law", 1e-10, dilation_law_dev)


# --- right-sided transform -----------------------------------------------------


def _i_commuting_field(rng, m_len, n_len) -> QuaternionField2D:
    data = np.zeros((m_len, n_len, 4))
    data[..., :2] = rng.standard_normal((m_len, n_len, 2))
    return QuaternionField2D(data)


def _suite_qftr(rec: _Recorder, rng) -> None:
    f64 = _rand_field(rng, 16, 16)
    rec.within(
        "round trip (fast)",
        1e-10,
        lambda: _rel(
            qftr_inverse(qftr_forward(f64, "fast"), "fast").data - f64.data, f64.data
        ),
    )
    rec.within(
        "round trip (direct)",
        1e-10,
        lambda: _rel(
            qftr_inverse(qftr_forward(f64, "direct"), "direct").data - f64.data,
            f64.data,
        ),
    )
    rec.within(
        "fast path matches direct sum",
        1e-9,
        lambda: _rel(
            qftr_forward(f64, "fast").data - qftr_forward(f64, "direct").data,
            qftr_forward(f64, "direct").data,
        ),
    )

    def quat_plancherel_dev():
        dev = 0.0
        for _ in range(100):
            f = _rand_field(rng, 8, 8)
            g = _rand_field(rng, 8, 8)
            lhs = quat_inner(f.data, g.data)
            rhs = quat_inner(qftr_forward(f).data, qftr_forward(g).data) / 64.0
            dev = max(
                dev,
                np.max(np.abs(lhs - rhs)) / np.sqrt(norm_sq(f.data) * norm_sq(g.data)),
            )
        return dev

    rec.within("quaternion inner product preserved", 1e-9, quat_plancherel_dev)

    def parseval_dev():
        dev = 0.0
        for _ in range(100):
            f = _rand_field(rng, 8, 8)
            dev = max(
                dev,
                abs(norm_sq(f.data) - norm_sq(qftr_forward(f).data) / 64.0)
                / norm_sq(f.data),
            )
        return dev

    rec.within("squared norm preserved", 1e-10, parseval_dev)

    def norms_agree_dev():
        dev = 0.0
        for _ in range(20):
            f = _rand_field(rng, 8, 8)
            n_two = norm_sq(qft_forward(f).data)
            n_right = norm_sq(qftr_forward(f).data)
            dev = max(dev, abs(n_two - n_right) / n_two)
        return dev

    rec.within("both spectra share total norm", 1e-10, norms_agree_dev)

    def full_left_linearity_dev():
        dev = 0.0
        for _ in range(50):
            f = _rand_field(rng, 8, 8)
            alpha = _rand_quat(rng)  # arbitrary quaternion constant
            lhs = qftr_forward(QuaternionField2D(qmul(alpha.as_array(), f.data))).data
            rhs = qmul(alpha.as_array(), qftr_forward(f).data)
            dev = max(dev, _rel(lhs - rhs, rhs))
        return dev

    rec.within("full left linearity", 1e-10, full_left_linearity_dev)

    def agrees_with_two_sided(make_field):
        f = make_field()
        lhs = qftr_forward(f).data
        rhs = qft_forward(f).data
        return _rel(lhs - rhs, rhs)

    rec.within(
        "matches two-sided transform when i f = f i",
        1e-10,
        lambda: agrees_with_two_sided(lambda: _i_commuting_field(rng, 8, 8)),
    )
    rec.exceeds(
        "two-sided match breaks for generic fields (control)",
        1e-3,
        lambda: agrees_with_two_sided(lambda: _rand_field(rng, 8, 8)),
    )

    def x_shift_dev(make_field):
        f = make_field()
        x0 = 3
        lhs = qftr_forward(circular_shift(f, x0, 0)).data
        rhs = qmul(_phase_left(8, x0)[:, None, :], qftr_forward(f).data)
        return _rel(lhs - rhs, rhs)

    rec.within(
        "x-shift law when i f = f i",
        1e-10,
        lambda: x_shift_dev(lambda: _i_commuting_field(rng, 8, 8)),
    )
    rec.exceeds(
        "x-shift law breaks for generic fields (control)",
        1e-3,
        lambda: x_shift_dev(lambda: _rand_field(rng, 8, 8)),
    )


# --- continuum GL(2) law -------------------------------------------------------


def _suite_gl2(rec: _Recorder, rng) -> None:
    radial = contin.AnalyticTestFunction.gaussian(
        coeff=Quaternion(0.8, 0.3, -0.5, 0.2)
    )
    aniso = contin.AnalyticTestFunction.gaussian(
        coeff=Quaternion(1.0, -0.4, 0.25, 0.6), sigma_x=1.0, sigma_y=0.6
    )
    maps = [
        ("identity", LinearMap2.identity(), radial),
        ("stretch diag(2,1)", LinearMap2(np.diag([2.0, 1.0])), radial),
        ("axis reflection", LinearMap2(np.diag([1.0, -1.0])), radial),
        ("rotation pi/6", rotation(np.pi / 6), radial),
        ("rotation pi/6, anisotropic", rotation(np.pi / 6), aniso),
    ]
    reports = {}

    for label, a_map, func in maps:
        def law_dev(a_map=a_map, func=func, label=label):
            report = contin.verify_gl_law(a_map, func)
            reports[label] = report
            return report.max_rel

        rec.within(f"composed-map law: {label}", 1e-3, law_dev)

    rec.within(
        "split and matrix routes agree",
        1e-10,
        lambda: max(r.routes_max_abs for r in reports.values()),
    )

    quat_gauss = contin.AnalyticTestFunction.gaussian(
        coeff=Quaternion(0.7, -0.3, 0.45, 0.2), sigma_x=1.1, sigma_y=0.8
    )
    real_gauss = contin.AnalyticTestFunction.gaussian(coeff=ONE)
    j_gauss = contin.AnalyticTestFunction.gaussian(coeff=J)

    rec.within(
        "derivative law, orders to 2",
        1e-3,
        lambda: max(
            contin.verify_partial_deriv(quat_gauss, m, n)
            for m, n in ((1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 2))
        ),
    )
    rec.exceeds(
        "derivative law, swapped sides (control)",
        1e-1,
        lambda: contin.verify_partial_deriv(real_gauss, 1, 1, swapped=True),
    )
    rec.within(
        "coordinate powers law, orders to 2",
        1e-3,
        lambda: max(
            contin.verify_powers_xy(quat_gauss, m, n)
            for m, n in ((1, 0), (0, 1), (1, 1), (2, 2))
        ),
    )
    rec.exceeds(
        "coordinate powers, swapped sides (control)",
        1e-1,
        lambda: contin.verify_powers_xy(j_gauss, 1, 0, swapped=True),
    )
    rec.within(
        "continuum shift law",
        1e-6,
        lambda: contin.verify_shift_law(quat_gauss, 0.8, -1.3),
    )
    rec.within(
        "continuum modulation law",
        1e-6,
        lambda: contin.verify_modulation_law(quat_gauss, 0.7, -1.1),
    )


# --- spacetime transforms ------------------------------------------------------


def _rand_st_field(rng, dims=(4, 4, 4, 4)) -> SpacetimeField4D:
    return SpacetimeField4D(rng.standard_normal(dims + (16,)))


def _rand_vt_field(rng, dims=(4, 4, 4, 4)) -> SpacetimeField4D:
    return SpacetimeField4D(vt_recompose(rng.standard_normal(dims + (4,))))


def _suite_spacetime(rec: _Recorder, rng) -> None:
    vt = _rand_vt_field(rng)
    st = _rand_st_field(rng)

    for label, fwd, inv, field in (
        ("volume-time", vtft_forward, vtft_inverse, vt),
        ("spacetime", sft_forward, sft_inverse, st),
    ):
        rec.within(
            f"{label} round trip (fast)",
            1e-10,
            lambda fwd=fwd, inv=inv, f=field: _rel(
                inv(fwd(f, "fast"), "fast").data - f.data, f.data
            ),
        )
        rec.within(
            f"{label} round trip (direct)",
            1e-10,
            lambda fwd=fwd, inv=inv, f=field: _rel(
                inv(fwd(f, "direct"), "direct").data - f.data, f.data
            ),
        )
        rec.within(
            f"{label} fast path matches direct sum",
            1e-9,
            lambda fwd=fwd, f=field: _rel(
                fwd(f, "fast").data - fwd(f, "direct").data, fwd(f, "direct").data
            ),
        )

    def right_linearity_dev():
        sig = cl31()
        dev = 0.0
        spec = sft_forward(st)
        for _ in range(20):
            coeffs = np.zeros(16)
            coeffs[:8] = rng.standard_normal(8)  # constants from the spatial subalgebra
            alpha = sig.from_coeffs(coeffs)
            lhs = sft_forward(right_multiply(st, alpha)).data
            rhs = right_multiply(spec, alpha).data
            dev = max(dev, np.max(np.abs(lhs - rhs)) / np.max(np.abs(rhs)))
        return dev

    rec.within("right linearity over spatial constants", 1e-11, right_linearity_dev)

    def decomposition_dev():
        parts = decompose_vt(st)
        outside = np.ones(16, dtype=bool)
        outside[list(VT_MASKS)] = False
        support = max(float(np.max(np.abs(p.data[..., outside]))) for p in parts)
        rebuilt = recompose_vt(parts)
        return max(support, float(np.max(np.abs(rebuilt.data - st.data))))

    rec.within("four-part decomposition reconstructs", 1e-14, decomposition_dev)

    rec.within(
        "right-form evaluation matches",
        1e-10,
        lambda: _rel(sft_right_form(st).data - sft_forward(st, "direct").data,
                     sft_forward(st, "direct").data),
    )

    def split_dev():
        plus, minus = split_spacetime_pm(st)
        return _rel(plus.data + minus.data - st.data, st.data)

    rec.within("split halves sum to the field", 1e-14, split_dev)

    def split_commutes_dev():
        plus, minus = split_spacetime_pm(st)
        sp_plus, sp_minus = split_spacetime_pm(sft_forward(st))
        d1 = sft_forward(plus).data - sp_plus.data
        d2 = sft_forward(minus).data - sp_minus.data
        ref = sft_forward(st).data
        return max(_rel(d1, ref), _rel(d2, ref))

    rec.within("split commutes with the transform", 1e-10, split_commutes_dev)

    def split_eigen_dev():
        sig = cl31()
        units = cl31_units()
        left_e0 = sig.left_mul_matrix(units["e0"].coeffs)
        plus, minus = split_spacetime_pm(st)
        d1 = right_multiply(plus, units["i3"]).data + plus.data @ left_e0.T
        d2 = right_multiply(minus, units["i3"]).data - minus.data @ left_e0.T
        return max(float(np.max(np.abs(d1))), float(np.max(np.abs(d2))))

    rec.within("split eigen relation under e0 and i3", 1e-12, split_eigen_dev)

    rec.within(
        "norm preserved",
        1e-11,
        lambda: abs(total_energy(st) - total_energy(sft_forward(st)) / st.n_samples)
        / total_energy(st),
    )

    def energy_split_dev():
        e_plus, e_minus = wave_packet_energy_split(st)
        total_dev = abs(e_plus + e_minus - total_energy(st)) / total_energy(st)
        sp_plus, sp_minus = wave_packet_energy_split(sft_forward(st))
        n = st.n_samples
        half_dev = max(
            abs(sp_plus / n - e_plus), abs(sp_minus / n - e_minus)
        ) / total_energy(st)
        return max(total_dev, half_dev)

    rec.within("energy splits and each half is preserved", 1e-10, energy_split_dev)

    def lattice_law_dev():
        maps = [
            np.diag([-1.0, 1.0, 1.0, 1.0]),  # time reflection
            np.diag([1.0, -1.0, 1.0, 1.0]),  # x reflection
            np.array(
                [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=float
            ),  # y-z swap
            np.array(
                [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], dtype=float
            ),  # t-x swap
            np.array(
                [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=float
            ),  # signed double swap
        ]
        return max(
            verify_sft_gl(LinearMap4(m), st).max_rel for m in maps
        )

    rec.within("lattice composed-map law", 1e-9, lattice_law_dev)


_SUITES = {
    "quat": _suite_quat,
    "clifford": _suite_clifford,
    "qft": _suite_qft,
    "qftr": _suite_qftr,
    "gl2": _suite_gl2,
    "spacetime": _suite_spacetime,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(suite: str, seed: int = 0) -> RunReport:
    """Run one named suite (or 'all') with a deterministic seed."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    rec = _Recorder()
    names = _SUITES if suite == "all" else {suite: _SUITES[suite]}
    for name, fn in names.items():
        marker = len(rec.checks)
        fn(rec, np.random.default_rng(seed))
        if suite == "all":
            rec.checks[marker:] = [
                CheckResult(
                    f"{name}: {c.name}", c.value, c.bound, c.comparison, c.passed,
                    c.seconds,
                )
                for c in rec.checks[marker:]
            ]
    return RunReport(suite, seed, tuple(rec.checks))
