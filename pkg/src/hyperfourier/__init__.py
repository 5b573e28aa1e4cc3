"""Hypercomplex Fourier transforms on quaternion and spacetime-algebra grids.

The 2D transforms act on quaternion-valued fields with the x-kernel applied
from the left and the y-kernel from the right (two-sided), or with both
kernels on the right (right-sided).  The 4D transforms act on Cl(3,1)-valued
fields with a time kernel on the left and a combined space kernel on the
right.  Every transform ships a direct double-sum evaluator and a fast path
built on an internal radix-2 FFT, plus verification suites for the algebraic
laws the transforms satisfy.
"""

from .autom import (
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
from .clifford import (
    VT_MASKS,
    Multivector,
    Signature,
    VtElement,
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
    mv_axis_exp,
)
from .contin import (
    DEFAULT_QUADRATURE,
    AnalyticTestFunction,
    GaussTerm,
    GLLawReport,
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
from .gridio import (
    GridFileError,
    read_csv_2d,
    read_csv_4d,
    read_image,
    read_qf2d,
    read_st4d,
    write_csv_2d,
    write_csv_4d,
    write_magnitude_csv,
    write_qf2d,
    write_st4d,
)
from .qft2d import (
    QSpectrum2D,
    QuaternionField2D,
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
from .quat import (
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
from .radix2 import UnsupportedSizeError, fft_axes, fft_axis, is_power_of_two
from .spacetime import (
    LatticeLawReport,
    SpacetimeField4D,
    STSpectrum4D,
    decompose_vt,
    recompose_vt,
    right_multiply,
    sft_forward,
    sft_forward_direct,
    sft_forward_fast,
    sft_inverse,
    sft_inverse_direct,
    sft_inverse_fast,
    sft_right_form,
    split_spacetime_pm,
    total_energy,
    verify_sft_gl,
    vt_components,
    vt_recompose,
    vtft_forward,
    vtft_forward_direct,
    vtft_forward_fast,
    vtft_inverse,
    vtft_inverse_direct,
    vtft_inverse_fast,
    wave_packet_energy_split,
)
from .verify import CheckResult, RunReport, SUITE_NAMES, run_suite

__version__ = "0.1.0"
