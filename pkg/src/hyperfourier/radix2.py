"""Iterative radix-2 complex FFT used by the fast transform paths.

Forward kernel is exp(-2*pi*1j*m*x/n), inverse is the conjugate kernel with
no 1/n factor; callers apply their own normalization.  Lengths must be
powers of two; anything else raises :class:`UnsupportedSizeError` so the
caller can fall back to a direct summation path.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = ["UnsupportedSizeError", "is_power_of_two", "fft_axis", "fft_axes"]


class UnsupportedSizeError(ValueError):
    """Raised when a fast transform path gets a non power-of-two length."""


def is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@lru_cache(maxsize=32)
def _bit_reverse_indices(n: int) -> np.ndarray:
    idx = np.zeros(n, dtype=np.intp)
    bits = n.bit_length() - 1
    for x in range(n):
        rev = 0
        v = x
        for _ in range(bits):
            rev = (rev << 1) | (v & 1)
            v >>= 1
        idx[x] = rev
    idx.setflags(write=False)
    return idx


def fft_axis(a, axis: int = -1, inverse: bool = False) -> np.ndarray:
    """Unnormalized radix-2 FFT along one axis of a complex array."""
    x = np.asarray(a, dtype=np.complex128)
    n = x.shape[axis]
    if not is_power_of_two(n):
        raise UnsupportedSizeError(
            f"length {n} is not a power of two; use a direct summation path"
        )
    x = np.moveaxis(x, axis, -1)
    x = x[..., _bit_reverse_indices(n)].copy()
    sign = 1.0 if inverse else -1.0
    m = 2
    while m <= n:
        half = m // 2
        tw = np.exp(sign * 2j * np.pi * np.arange(half) / m)
        v = x.reshape(x.shape[:-1] + (n // m, m))
        even = v[..., :half]
        odd = v[..., half:] * tw
        s = even + odd
        d = even - odd
        v[..., :half] = s
        v[..., half:] = d
        m *= 2
    return np.moveaxis(x, -1, axis)


def fft_axes(a, axes, inverse: bool = False) -> np.ndarray:
    """Apply :func:`fft_axis` along each of the given axes in turn."""
    x = np.asarray(a, dtype=np.complex128)
    for ax in axes:
        x = fft_axis(x, axis=ax, inverse=inverse)
    return x
