"""Clifford algebras Cl(p,q) with p+q <= 4, dense blade-bitmask storage.

A multivector over n basis vectors is a float64 vector of 2**n blade
coefficients.  Blade index is a bitmask: bit b set means basis vector b is
a factor, and the canonical blade is the product of its vectors in
ascending index order.  Products use the usual transposition-counting sign
plus metric signs for repeated vectors; the result mask is always a XOR b.

The spacetime algebra Cl(3,1) is built with basis order (e1, e2, e3, e0):
e0 carries the highest bit and squares to -1, so the Euclidean Cl(3,0)
blades occupy masks 0..7.  The oriented volume elements are i3 = e1e2e3
and i4 = e0e1e2e3 = -(canonical blade e1e2e3e0); both square to -1.

Three embeddings of the quaternions are provided:

    Cl(0,2):        i -> e1,    j -> e2,    k -> e1e2
    Cl+(3,0) even:  i -> e3e2,  j -> e1e3,  k -> e2e1
    V_t in Cl(3,1): i -> e0,    j -> i3,    k -> i4

Each is a homomorphism of the quaternion product; the inverse maps reject
multivectors with support outside the image span.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .quat import Quaternion

__all__ = [
    "Signature",
    "Multivector",
    "VtElement",
    "cl02",
    "cl20",
    "cl30",
    "cl31",
    "cl31_units",
    "dual",
    "mv_axis_exp",
    "iso_h_to_cl02",
    "iso_cl02_to_h",
    "iso_h_to_cl30_even",
    "iso_cl30_even_to_h",
    "iso_h_to_vt",
    "iso_vt_to_h",
    "VT_MASKS",
]


def _reorder_sign(a: int, b: int) -> float:
    # number of transpositions to merge blade b into blade a, both ascending
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1.0 if swaps & 1 else 1.0


class Signature:
    """Metric signature and precomputed product tables for one Cl(p,q)."""

    __slots__ = (
        "metric",
        "names",
        "dim",
        "n_blades",
        "sign_table",
        "mask_table",
        "product_tensor",
        "grades",
        "reverse_signs",
    )

    def __init__(self, metric, names):
        metric = tuple(float(m) for m in metric)
        names = tuple(names)
        if len(metric) != len(names):
            raise ValueError("metric and names must have the same length")
        if not 1 <= len(metric) <= 4:
            raise ValueError("supported dimensions are 1..4")
        if any(m not in (-1.0, 1.0) for m in metric):
            raise ValueError("metric entries must be +1 or -1")
        self.metric = metric
        self.names = names
        self.dim = len(metric)
        nb = 1 << self.dim
        self.n_blades = nb

        sign = np.zeros((nb, nb))
        mask = np.zeros((nb, nb), dtype=np.intp)
        for a in range(nb):
            for b in range(nb):
                s = _reorder_sign(a, b)
                common = a & b
                for bit in range(self.dim):
                    if common & (1 << bit):
                        s *= metric[bit]
                sign[a, b] = s
                mask[a, b] = a ^ b
        self.sign_table = sign
        self.mask_table = mask

        tensor = np.zeros((nb, nb, nb))
        for a in range(nb):
            for b in range(nb):
                tensor[a, b, a ^ b] = sign[a, b]
        self.product_tensor = tensor

        self.grades = np.array([bin(m).count("1") for m in range(nb)], dtype=np.intp)
        g = self.grades
        self.reverse_signs = np.where((g * (g - 1) // 2) % 2 == 0, 1.0, -1.0)
        for arr in (self.sign_table, self.mask_table, self.product_tensor,
                    self.grades, self.reverse_signs):
            arr.setflags(write=False)

    @property
    def p(self) -> int:
        return sum(1 for m in self.metric if m > 0)

    @property
    def q(self) -> int:
        return sum(1 for m in self.metric if m < 0)

    def blade_name(self, mask: int) -> str:
        if mask == 0:
            return "1"
        return "".join(self.names[b] for b in range(self.dim) if mask & (1 << b))

    def blade(self, mask: int, coeff: float = 1.0) -> "Multivector":
        c = np.zeros(self.n_blades)
        c[mask] = coeff
        return Multivector(self, c)

    def scalar(self, value: float) -> "Multivector":
        return self.blade(0, float(value))

    def basis_vector(self, index: int) -> "Multivector":
        return self.blade(1 << index)

    def from_coeffs(self, coeffs) -> "Multivector":
        return Multivector(self, np.array(coeffs, dtype=np.float64))

    def array_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Geometric product of coefficient arrays with blade axis last."""
        return np.einsum("...a,...b,abc->...c", a, b, self.product_tensor)

    def array_reverse(self, a: np.ndarray) -> np.ndarray:
        return a * self.reverse_signs

    def left_mul_matrix(self, coeffs: np.ndarray) -> np.ndarray:
        """Matrix L with (m * v) = L @ v for fixed m."""
        return np.einsum("a,abc->cb", np.asarray(coeffs), self.product_tensor)

    def right_mul_matrix(self, coeffs: np.ndarray) -> np.ndarray:
        """Matrix R with (v * m) = R @ v for fixed m."""
        return np.einsum("b,abc->ca", np.asarray(coeffs), self.product_tensor)

    def __repr__(self) -> str:
        return f"Signature(p={self.p}, q={self.q}, names={self.names})"


@dataclass(frozen=True)
class Multivector:
    """Dense multivector: a signature and 2**dim blade coefficients."""

    sig: Signature
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.float64)
        if c.shape != (self.sig.n_blades,):
            raise ValueError(
                f"expected {self.sig.n_blades} coefficients, got shape {c.shape}"
            )
        object.__setattr__(self, "coeffs", c)

    def _check_sig(self, other: "Multivector") -> None:
        if other.sig is not self.sig:
            raise ValueError("signature mismatch")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_sig(other)
        return Multivector(self.sig, self.coeffs + other.coeffs)

    def __sub__(self, other: "Multivector") -> "Multivector":
        self._check_sig(other)
        return Multivector(self.sig, self.coeffs - other.coeffs)

    def __neg__(self) -> "Multivector":
        return Multivector(self.sig, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._check_sig(other)
            return Multivector(
                self.sig, self.sig.array_mul(self.coeffs, other.coeffs)
            )
        return Multivector(self.sig, self.coeffs * float(other))

    def __rmul__(self, other) -> "Multivector":
        return Multivector(self.sig, self.coeffs * float(other))

    def reverse(self) -> "Multivector":
        return Multivector(self.sig, self.coeffs * self.sig.reverse_signs)

    def grade_part(self, grade: int) -> "Multivector":
        out = np.where(self.sig.grades == grade, self.coeffs, 0.0)
        return Multivector(self.sig, out)

    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def norm(self) -> float:
        """Euclidean norm of the blade coefficients."""
        return float(np.sqrt(np.sum(self.coeffs**2)))

    def isclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        self._check_sig(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol)

    def __repr__(self) -> str:
        parts = []
        for mask, c in enumerate(self.coeffs):
            if c != 0.0:
                parts.append(f"{c:g}*{self.sig.blade_name(mask)}")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def cl02() -> Signature:
    """Cl(0,2): both basis vectors square to -1; isomorphic to H."""
    return Signature((-1.0, -1.0), ("e1", "e2"))


@lru_cache(maxsize=None)
def cl20() -> Signature:
    """Cl(2,0): the Euclidean plane algebra (used for plane reflections)."""
    return Signature((1.0, 1.0), ("e1", "e2"))


@lru_cache(maxsize=None)
def cl30() -> Signature:
    """Cl(3,0): Euclidean 3-space; its even part is isomorphic to H."""
    return Signature((1.0, 1.0, 1.0), ("e1", "e2", "e3"))


@lru_cache(maxsize=None)
def cl31() -> Signature:
    """Cl(3,1) with basis order (e1, e2, e3, e0), e0 squaring to -1."""
    sig = Signature((1.0, 1.0, 1.0, -1.0), ("e1", "e2", "e3", "e0"))
    # pin the volume-element identities once at construction
    e0 = sig.blade(_E0_MASK)
    i3 = sig.blade(_I3_MASK)
    i4 = sig.blade(_I4_MASK, -1.0)  # i4 = e0e1e2e3 = -(e1e2e3e0)
    minus_one = sig.scalar(-1.0)
    assert (e0 * e0).isclose(minus_one, 0.0)
    assert (i3 * i3).isclose(minus_one, 0.0)
    assert (i4 * i4).isclose(minus_one, 0.0)
    assert (e0 * i3).isclose(i4, 0.0)
    for idx in range(3):
        ev = sig.basis_vector(idx)
        assert (i3 * ev).isclose(ev * i3, 0.0)
    return sig


_E0_MASK = 0b1000
_I3_MASK = 0b0111
_I4_MASK = 0b1111
VT_MASKS = (0, _I3_MASK, _E0_MASK, _I4_MASK)


def cl31_units() -> dict[str, Multivector]:
    """Named unit elements of Cl(3,1): e1, e2, e3, e0, i3, i4."""
    sig = cl31()
    return {
        "e1": sig.basis_vector(0),
        "e2": sig.basis_vector(1),
        "e3": sig.basis_vector(2),
        "e0": sig.blade(_E0_MASK),
        "i3": sig.blade(_I3_MASK),
        "i4": sig.blade(_I4_MASK, -1.0),
    }


def dual(a: Multivector) -> Multivector:
    """Spacetime dual a * i4**-1 in Cl(3,1); maps e0 to i3."""
    if a.sig is not cl31():
        raise ValueError("dual is defined on Cl(3,1) multivectors")
    i4_inv = a.sig.blade(_I4_MASK)  # -i4, since i4 squares to -1
    return a * i4_inv


_AXIS_TOL = 1e-12


def mv_axis_exp(axis: Multivector, angle: float) -> Multivector:
    """exp(axis*angle) = cos(angle) + axis*sin(angle); needs axis*axis = -1."""
    sq = axis * axis
    dev = sq.coeffs.copy()
    dev[0] += 1.0
    if np.max(np.abs(dev)) > _AXIS_TOL:
        raise ValueError("axis must square to -1")
    out = axis.coeffs * np.sin(angle)
    out = out.copy()
    out[0] += np.cos(angle)
    return Multivector(axis.sig, out)


# --- quaternion embeddings ------------------------------------------------

# (mask, sign) images of (1, i, j, k) in each algebra
_CL02_IMAGE = ((0, 1.0), (0b01, 1.0), (0b10, 1.0), (0b11, 1.0))
_CL30_IMAGE = ((0, 1.0), (0b110, -1.0), (0b101, 1.0), (0b011, -1.0))
_VT_IMAGE = ((0, 1.0), (_E0_MASK, 1.0), (_I3_MASK, 1.0), (_I4_MASK, -1.0))


def _embed(q: Quaternion, sig: Signature, image) -> Multivector:
    c = np.zeros(sig.n_blades)
    comps = (q.r, q.i, q.j, q.k)
    for comp, (mask, sign) in zip(comps, image):
        c[mask] += sign * comp
    return Multivector(sig, c)


def _extract(m: Multivector, sig: Signature, image, label: str) -> Quaternion:
    if m.sig is not sig:
        raise ValueError(f"expected a multivector over {label}")
    masks = [mask for mask, _ in image]
    support = np.ones(sig.n_blades, dtype=bool)
    support[masks] = False
    bad = np.nonzero(support & (m.coeffs != 0.0))[0]
    if bad.size:
        names = ", ".join(sig.blade_name(int(b)) for b in bad)
        raise ValueError(f"support outside the quaternion image span: {names}")
    comps = [sign * m.coeffs[mask] for mask, sign in image]
    return Quaternion(*map(float, comps))


def iso_h_to_cl02(q: Quaternion) -> Multivector:
    return _embed(q, cl02(), _CL02_IMAGE)


def iso_cl02_to_h(m: Multivector) -> Quaternion:
    return _extract(m, cl02(), _CL02_IMAGE, "Cl(0,2)")


def iso_h_to_cl30_even(q: Quaternion) -> Multivector:
    return _embed(q, cl30(), _CL30_IMAGE)


def iso_cl30_even_to_h(m: Multivector) -> Quaternion:
    return _extract(m, cl30(), _CL30_IMAGE, "the even part of Cl(3,0)")


def iso_h_to_vt(q: Quaternion) -> Multivector:
    return _embed(q, cl31(), _VT_IMAGE)


def iso_vt_to_h(m: Multivector) -> Quaternion:
    return _extract(m, cl31(), _VT_IMAGE, "V_t in Cl(3,1)")


@dataclass(frozen=True)
class VtElement:
    """Element of V_t = span{1, e0, i3, i4} inside Cl(3,1)."""

    one: float = 0.0
    e0: float = 0.0
    i3: float = 0.0
    i4: float = 0.0

    def to_multivector(self) -> Multivector:
        return iso_h_to_vt(self.to_quaternion())

    @staticmethod
    def from_multivector(m: Multivector) -> "VtElement":
        q = iso_vt_to_h(m)
        return VtElement(q.r, q.i, q.j, q.k)

    def to_quaternion(self) -> Quaternion:
        return Quaternion(self.one, self.e0, self.i3, self.i4)

    @staticmethod
    def from_quaternion(q: Quaternion) -> "VtElement":
        return VtElement(q.r, q.i, q.j, q.k)

    def __mul__(self, other: "VtElement") -> "VtElement":
        return VtElement.from_quaternion(self.to_quaternion() * other.to_quaternion())
