"""Geometry of finite-dimensional lp spaces over R or C.

Norms, dual exponents, support functionals at a point, smooth-point tests
and the canonical semi-inner-product.  Everything here is a pure function
of its inputs; vectors are plain 1-d numpy arrays.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "FieldTag",
    "SpaceSpec",
    "SupportFunctional",
    "SupportSet",
    "ZeroVectorError",
    "DimensionMismatchError",
    "lp_norm",
    "dual_exponent",
    "dual_norm",
    "unit_sign",
    "normalize",
    "support_functionals",
    "is_smooth_point",
    "sip",
    "dual_certificate_check",
]

TOL_DUAL = 1e-9     # default tolerance for support-functional certificates
TIE_REL = 1e-9      # relative tolerance for max-modulus ties / zero coordinates
_MAX_FREE = 20      # refuse to enumerate more than 2^20 sign patterns


class ZeroVectorError(ValueError):
    """Raised when an operation needs a non-zero vector."""


class DimensionMismatchError(ValueError):
    """Raised when an array's shape or dtype disagrees with its space."""


class FieldTag(enum.Enum):
    """Scalar field of a space: the reals or the complex numbers."""

    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self) -> type:
        return np.complex128 if self is FieldTag.COMPLEX else np.float64


@dataclass(frozen=True)
class SpaceSpec:
    """A finite-dimensional lp space: dimension, exponent and scalar field.

    ``p`` may be any real number >= 1 or ``math.inf`` for the max norm.
    """

    dim: int
    p: float = 2.0
    field: FieldTag = FieldTag.REAL

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim}")
        if not (self.p >= 1.0):  # also rejects nan
            raise ValueError(f"p must satisfy p >= 1 (or inf), got {self.p}")

    @property
    def q(self) -> float:
        """Dual exponent with 1/p + 1/q = 1."""
        return dual_exponent(self.p)

    @property
    def is_complex(self) -> bool:
        return self.field is FieldTag.COMPLEX

    def dual(self) -> "SpaceSpec":
        return SpaceSpec(self.dim, self.q, self.field)


def dual_exponent(p: float) -> float:
    """Exponent q with 1/p + 1/q = 1; maps 1 <-> inf and fixes 2."""
    if p == math.inf:
        return 1.0
    if p == 1.0:
        return math.inf
    return p / (p - 1.0)


def as_vector(x, spec: SpaceSpec) -> np.ndarray:
    """Validate ``x`` against ``spec`` and return it as a 1-d array."""
    arr = np.asarray(x)
    if arr.shape != (spec.dim,):
        raise DimensionMismatchError(
            f"expected a vector of length {spec.dim}, got shape {arr.shape}")
    if spec.field is FieldTag.REAL and np.iscomplexobj(arr):
        if np.any(arr.imag != 0):
            raise DimensionMismatchError("complex entries in a real space")
        arr = arr.real
    return arr.astype(spec.field.dtype, copy=False)


def lp_norm(x, spec: SpaceSpec) -> float:
    """The lp norm (sum |x_j|^p)^(1/p), or max_j |x_j| for p = inf."""
    arr = as_vector(x, spec)
    a = np.abs(arr)
    if spec.p == math.inf:
        return float(a.max())
    if spec.p == 1.0:
        return float(a.sum())
    if spec.p == 2.0:
        return float(np.sqrt((a * a).sum()))
    return float((a ** spec.p).sum() ** (1.0 / spec.p))


def dual_norm(coeffs, spec: SpaceSpec) -> float:
    """Norm of a coefficient vector in the dual space (exponent q)."""
    return lp_norm(coeffs, spec.dual())


def unit_sign(z):
    """z/|z| elementwise, with 0 at 0.  Works for real and complex arrays."""
    z = np.asarray(z)
    a = np.abs(z)
    out = np.zeros_like(z)
    nz = a > 0
    out[nz] = z[nz] / a[nz]
    return out


def normalize(x, spec: SpaceSpec) -> np.ndarray:
    """Scale ``x`` to the unit sphere of ``spec``."""
    n = lp_norm(x, spec)
    if n == 0:
        raise ZeroVectorError("cannot normalize the zero vector")
    return as_vector(x, spec) / n


@dataclass(frozen=True)
class SupportFunctional:
    """A dual vector acting by the plain linear sum sum_j coeffs_j * y_j.

    A valid support functional at x has dual norm 1 and action(x) = ||x||.
    """

    coeffs: np.ndarray

    def action(self, y):
        val = np.sum(np.asarray(self.coeffs) * np.asarray(y))
        return complex(val) if np.iscomplexobj(self.coeffs) or np.iscomplexobj(y) else float(val)


@dataclass(frozen=True)
class SupportSet:
    """The support functionals J(x) at an anchor point.

    ``extreme`` lists extreme functionals.  For 1 < p < inf there is exactly
    one.  For p in {1, inf} the full J(x) is the convex hull of the listed
    extremes, except that for complex p = 1 each index in ``circle_free``
    marks a coordinate (a zero coordinate of the anchor) whose value ranges
    over the whole unit circle; the listed extremes carry the +-1 real
    sections of those circles.
    """

    anchor: np.ndarray
    extreme: list
    circle_free: tuple = ()

    @property
    def is_singleton(self) -> bool:
        return len(self.extreme) == 1 and not self.circle_free


def _zero_mask(a: np.ndarray) -> np.ndarray:
    return a <= TIE_REL * a.max()


def support_functionals(x, spec: SpaceSpec) -> SupportSet:
    """All extreme support functionals at x, i.e. the extreme points of
    J(x) = {f : ||f||_q = 1, f(x) = ||x||}.

    * 1 < p < inf: the unique functional conj(sgn(x_j)) |x_j|^(p-1) / ||x||^(p-1).
    * p = 1: conj(sgn(x_j)) on non-zero coordinates; zero coordinates are free
      in [-1, 1] (real) or the closed unit disc (complex).  Real sign patterns
      are enumerated; the complex circle freedom is flagged via ``circle_free``.
    * p = inf: one coordinate functional conj(sgn(x_j)) e_j per index attaining
      the maximum modulus.
    """
    arr = as_vector(x, spec)
    a = np.abs(arr)
    nrm = lp_norm(arr, spec)
    if nrm == 0:
        raise ZeroVectorError("support functionals are undefined at the zero vector")

    anchor = arr.copy()
    if spec.p == math.inf:
        ties = np.flatnonzero(a >= a.max() * (1.0 - TIE_REL))
        extremes = []
        for j in ties:
            c = np.zeros(spec.dim, dtype=spec.field.dtype)
            c[j] = np.conj(unit_sign(arr[j : j + 1]))[0]
            extremes.append(SupportFunctional(c))
        return SupportSet(anchor, extremes)

    if spec.p == 1.0:
        zeros = np.flatnonzero(_zero_mask(a))
        base = np.conj(unit_sign(arr))
        base[zeros] = 0
        if zeros.size == 0:
            return SupportSet(anchor, [SupportFunctional(base)])
        if zeros.size > _MAX_FREE:
            raise ValueError(
                f"{zeros.size} free coordinates: too many sign patterns to enumerate")
        extremes = []
        for pattern in itertools.product((1.0, -1.0), repeat=zeros.size):
            c = base.copy()
            c[zeros] = pattern
            extremes.append(SupportFunctional(c))
        circle = tuple(int(j) for j in zeros) if spec.is_complex else ()
        return SupportSet(anchor, extremes, circle_free=circle)

    coeffs = np.conj(unit_sign(arr)) * a ** (spec.p - 1.0) / nrm ** (spec.p - 1.0)
    return SupportSet(anchor, [SupportFunctional(coeffs)])


def is_smooth_point(x, spec: SpaceSpec) -> bool:
    """True iff J(x) is a singleton.

    Always true for 1 < p < inf; for p = 1 true iff no coordinate vanishes;
    for p = inf true iff the maximum modulus is attained exactly once.
    """
    arr = as_vector(x, spec)
    a = np.abs(arr)
    if a.max() == 0:
        raise ZeroVectorError("smoothness is undefined at the zero vector")
    if spec.p == math.inf:
        return int((a >= a.max() * (1.0 - TIE_REL)).sum()) == 1
    if spec.p == 1.0:
        return not np.any(_zero_mask(a))
    return True


def sip(y, x, spec: SpaceSpec):
    """Canonical semi-inner-product [y, x] on lp, 1 <= p < inf:

        [y, x] = ||x||^(2-p) * sum_j y_j conj(sgn(x_j)) |x_j|^(p-1)

    Satisfies [x, x] = ||x||^2, linearity in the first argument, conjugate
    homogeneity in the second, and |[y, x]| <= ||y|| ||x||.  There is no
    canonical continuous SIP for p = inf, which is rejected.
    """
    if spec.p == math.inf:
        raise ValueError("no canonical semi-inner-product for p = inf")
    xa = as_vector(x, spec)
    ya = as_vector(y, spec)
    nrm = lp_norm(xa, spec)
    if nrm == 0:
        raise ZeroVectorError("sip is undefined against the zero vector")
    w = np.conj(unit_sign(xa)) * np.abs(xa) ** (spec.p - 1.0)
    val = nrm ** (2.0 - spec.p) * np.sum(ya * w)
    return complex(val) if spec.is_complex else float(val)


def dual_certificate_check(f: SupportFunctional, x, spec: SpaceSpec,
                           tol: float = TOL_DUAL) -> bool:
    """Check membership of ``f`` in J(x): unit dual norm and action = ||x||."""
    arr = as_vector(x, spec)
    coeffs = np.asarray(f.coeffs)
    if coeffs.shape != arr.shape:
        raise DimensionMismatchError(
            f"functional has {coeffs.shape}, point has {arr.shape}")
    nrm = lp_norm(arr, spec)
    act = np.sum(coeffs * arr)
    return bool(abs(act - nrm) <= tol and abs(dual_norm(coeffs, spec) - 1.0) <= tol)
