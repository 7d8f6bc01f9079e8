"""Bounded k-linear maps as dense coefficient tensors.

A map T: X_1 x ... x X_k -> Y is stored as a tensor of shape
(codomain.dim, n_1, ..., n_k); evaluation is the full contraction

    T(x_1, ..., x_k)_j = sum coeffs[j, i_1, ..., i_k] * prod_t (x_t)_{i_t}.

The module computes lp-operator norms by exact linear algebra where that is
possible (SVD for Hilbert operators, dual norms for functionals, SVD again
for Euclidean bilinear forms) and by multi-start ascent on the product of
unit spheres otherwise, and it searches for the norm attainment set
{unit tuples with ||T x|| = ||T||} together with its orbit structure under
per-factor unimodular scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional

import numpy as np

from .spaces import (
    DimensionMismatchError,
    FieldTag,
    SpaceSpec,
    ZeroVectorError,
    as_vector,
    lp_norm,
    normalize,
    support_functionals,
    unit_sign,
)

__all__ = [
    "MultilinearMap",
    "TuplePoint",
    "AttainmentCluster",
    "BruteForceResult",
    "ZeroMapError",
    "evaluate",
    "norm_bruteforce",
    "norm_estimate",
    "operator_norm",
    "top_right_singular_subspace",
    "attainment_set",
    "random_map",
    "phase_normalized",
    "same_orbit",
    "ascent_trajectory",
]

_LETTERS = "abcdefgh"
_GRID_CAP = 20_000_000   # max number of grid tuples in norm_bruteforce
TOL_GAP = 1e-8           # relative gap for singular-value ties
ORBIT_COORD_TOL = 1e-7   # per-coordinate tolerance after phase normalization

CERTIFIED = "certified"
SAMPLED = "sampled"


class ZeroMapError(ValueError):
    """Raised when an operation requires a non-zero map."""


def _is_euclidean(spec: SpaceSpec) -> bool:
    # one-dimensional spaces carry the same norm for every p
    return spec.p == 2.0 or spec.dim == 1


@dataclass(frozen=True)
class MultilinearMap:
    """Dense representation of a bounded k-linear map."""

    factors: tuple
    codomain: SpaceSpec
    coeffs: np.ndarray

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise ValueError("a multilinear map needs at least one factor space")
        fields = {s.field for s in factors} | {self.codomain.field}
        if len(fields) != 1:
            raise ValueError("all factor spaces and the codomain must share a field")
        shape = (self.codomain.dim,) + tuple(s.dim for s in factors)
        arr = np.asarray(self.coeffs, dtype=self.field.dtype)
        if arr.shape != shape:
            raise DimensionMismatchError(
                f"coefficient tensor has shape {arr.shape}, expected {shape}")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def field(self) -> FieldTag:
        return self.codomain.field

    @property
    def k(self) -> int:
        return len(self.factors)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    @classmethod
    def from_matrix(cls, matrix, p_in: float = 2.0, p_out: float = 2.0,
                    field: Optional[FieldTag] = None) -> "MultilinearMap":
        """Linear operator (k = 1) from an (m, n) matrix."""
        m = np.asarray(matrix)
        if m.ndim != 2:
            raise ValueError("from_matrix expects a 2-d array")
        if field is None:
            field = FieldTag.COMPLEX if np.iscomplexobj(m) else FieldTag.REAL
        rows, cols = m.shape
        return cls((SpaceSpec(cols, p_in, field),), SpaceSpec(rows, p_out, field), m)

    @classmethod
    def from_bilinear(cls, matrix, p1: float = 2.0, p2: float = 2.0,
                      field: Optional[FieldTag] = None) -> "MultilinearMap":
        """Scalar-valued bilinear map (x, y) -> x^T M y from an (n1, n2) matrix."""
        m = np.asarray(matrix)
        if m.ndim != 2:
            raise ValueError("from_bilinear expects a 2-d array")
        if field is None:
            field = FieldTag.COMPLEX if np.iscomplexobj(m) else FieldTag.REAL
        n1, n2 = m.shape
        factors = (SpaceSpec(n1, p1, field), SpaceSpec(n2, p2, field))
        return cls(factors, SpaceSpec(1, 2.0, field), m[np.newaxis, :, :])

    @property
    def matrix(self) -> np.ndarray:
        """The (m, n) matrix of a k = 1 map."""
        if self.k != 1:
            raise ValueError("matrix view only exists for k = 1")
        return np.asarray(self.coeffs)

    def __add__(self, other: "MultilinearMap") -> "MultilinearMap":
        _check_same_shape(self, other)
        return MultilinearMap(self.factors, self.codomain, self.coeffs + other.coeffs)

    def __sub__(self, other: "MultilinearMap") -> "MultilinearMap":
        _check_same_shape(self, other)
        return MultilinearMap(self.factors, self.codomain, self.coeffs - other.coeffs)

    def __mul__(self, scalar) -> "MultilinearMap":
        if self.field is FieldTag.REAL and np.iscomplexobj(np.asarray(scalar)):
            raise ValueError("complex scalar on a real-field map")
        return MultilinearMap(self.factors, self.codomain, self.coeffs * scalar)

    __rmul__ = __mul__


def _check_same_shape(t: MultilinearMap, a: MultilinearMap):
    if t.factors != a.factors or t.codomain != a.codomain:
        raise DimensionMismatchError("maps live on different spaces")


@dataclass(frozen=True)
class TuplePoint:
    """A k-tuple of vectors, one per factor space."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "parts", tuple(np.asarray(p) for p in self.parts))

    @property
    def k(self) -> int:
        return len(self.parts)

    def concat(self) -> np.ndarray:
        return np.concatenate([np.ravel(p) for p in self.parts])


@dataclass
class AttainmentCluster:
    """Best norm value found with the unit tuples that attain it.

    ``confidence`` is "certified" only when the maximizer description is
    exact (Hilbert k = 1, linear functionals, Euclidean bilinear forms);
    ascent-based clusters are "sampled" and never complete.
    """

    value: float
    maximizers: list
    orbit_representative: Optional[TuplePoint]
    is_single_orbit: bool
    confidence: str
    note: str = ""


class BruteForceResult(NamedTuple):
    value: float
    argmax: TuplePoint
    error_bound: float


def evaluate(T: MultilinearMap, point: TuplePoint) -> np.ndarray:
    """Apply T to a tuple point, returning the codomain vector."""
    if point.k != T.k:
        raise DimensionMismatchError(f"map has {T.k} slots, point has {point.k}")
    parts = [as_vector(p, s) for p, s in zip(point.parts, T.factors)]
    sub = "z" + _LETTERS[: T.k]
    args = ",".join(_LETTERS[t] for t in range(T.k))
    return np.einsum(f"{sub},{args}->z", T.coeffs, *parts)


def _contract_except(T: MultilinearMap, parts, slot: int) -> np.ndarray:
    """Matrix of the linear map in slot ``slot`` with the other slots frozen."""
    sub = "z" + _LETTERS[: T.k]
    ops, args = [T.coeffs], []
    for t in range(T.k):
        if t != slot:
            ops.append(parts[t])
            args.append(_LETTERS[t])
    out = "z" + _LETTERS[slot]
    spec = f"{sub},{','.join(args)}->{out}" if args else f"{sub}->{out}"
    return np.einsum(spec, *ops)


# ---------------------------------------------------------------------------
# brute-force grid search


def _sphere_grid(spec: SpaceSpec, density: int):
    """Grid of unit vectors and an upper bound on its covering radius."""
    n_real = spec.dim * (2 if spec.is_complex else 1)
    if n_real == 1:
        return np.array([[1.0], [-1.0]]), 0.0
    n_angles = n_real - 1
    azim = np.linspace(0.0, 2.0 * math.pi, density, endpoint=False)
    polar_count = max(density // 2 + 1, 3)
    polar = np.linspace(0.0, math.pi, polar_count)
    grids = np.meshgrid(*([polar] * (n_angles - 1) + [azim]), indexing="ij")
    angles = np.stack([g.ravel() for g in grids], axis=1)
    # spherical coordinates -> Euclidean directions
    dirs = np.ones((angles.shape[0], n_real))
    for i in range(n_angles):
        dirs[:, i] *= np.cos(angles[:, i])
        dirs[:, i + 1 :] *= np.sin(angles[:, i : i + 1])
    if spec.is_complex:
        dirs = dirs[:, :spec.dim] + 1j * dirs[:, spec.dim :]
    if spec.p != 2.0:
        norms = np.abs(dirs)
        if spec.p == math.inf:
            scale = norms.max(axis=1)
        else:
            scale = (norms ** spec.p).sum(axis=1) ** (1.0 / spec.p)
        dirs = dirs / scale[:, np.newaxis]
    d_azim = 2.0 * math.pi / density
    d_polar = math.pi / (polar_count - 1)
    radius = 0.5 * math.sqrt((n_angles - 1) * d_polar ** 2 + d_azim ** 2)
    if spec.p != 2.0:
        radius *= 2.0  # renormalization distortion slop for p != 2
    return dirs, radius


def norm_bruteforce(T: MultilinearMap, density: int,
                    cap: int = _GRID_CAP) -> BruteForceResult:
    """Certified lower bound on ||T|| from a product of unit-sphere grids.

    The error bound uses the Lipschitz constant ||T|| * k of the objective
    on the product sphere and the covering radius of each factor grid.
    """
    if T.is_zero():
        raise ZeroMapError("norm of the zero map is 0; nothing to search")
    grids, radii = [], []
    total = 1
    for s in T.factors:
        g, r = _sphere_grid(s, density)
        grids.append(g)
        radii.append(r)
        total *= g.shape[0]
        if total > cap:
            raise ValueError(f"grid size {total} exceeds cap {cap}")
    sub = "z" + _LETTERS[: T.k]
    out_axes = "".join(_LETTERS[t].upper() for t in range(T.k))
    args = ",".join(_LETTERS[t].upper() + _LETTERS[t] for t in range(T.k))
    vals = np.einsum(f"{sub},{args}->{out_axes}z", T.coeffs, *grids)
    mags = np.abs(vals)
    p = T.codomain.p
    if p == math.inf:
        obj = mags.max(axis=-1)
    elif p == 1.0:
        obj = mags.sum(axis=-1)
    elif p == 2.0:
        obj = np.sqrt((mags * mags).sum(axis=-1))
    else:
        obj = (mags ** p).sum(axis=-1) ** (1.0 / p)
    flat = int(np.argmax(obj))
    idx = np.unravel_index(flat, obj.shape)
    best = float(obj[idx])
    argmax = TuplePoint(tuple(grids[t][idx[t]] for t in range(T.k)))
    bound = best * T.k * max(radii) if radii else 0.0
    return BruteForceResult(best, argmax, bound)


# ---------------------------------------------------------------------------
# exact routes


def top_right_singular_subspace(T: MultilinearMap, tol_gap: float = TOL_GAP):
    """Largest singular value and an orthonormal basis of its right subspace.

    Only defined for k = 1 maps between Euclidean (p = 2) spaces, where the
    attainment set is exactly the unit sphere of this subspace.
    """
    if T.k != 1:
        raise ValueError("top_right_singular_subspace needs k = 1")
    if not (_is_euclidean(T.factors[0]) and _is_euclidean(T.codomain)):
        raise ValueError("top_right_singular_subspace needs Euclidean spaces")
    if T.is_zero():
        raise ZeroMapError("zero map has no norming subspace")
    _, s, vh = np.linalg.svd(T.matrix)
    sigma = float(s[0])
    r = int(np.sum(s >= sigma * (1.0 - tol_gap)))
    basis = vh[:r].conj().T
    return sigma, basis


def _phase_normalize_vector(x: np.ndarray, complex_field: bool) -> np.ndarray:
    a = np.abs(x)
    big = np.flatnonzero(a > ORBIT_COORD_TOL * a.max()) if a.max() > 0 else []
    if len(big) == 0:
        return x
    j = int(big[0])
    mu = np.conj(unit_sign(x[j : j + 1]))[0]
    out = x * mu
    if not complex_field:
        out = out.real if np.iscomplexobj(out) else out
    return out


def phase_normalized(point: TuplePoint, T: MultilinearMap) -> TuplePoint:
    """Canonical orbit representative: first significant coordinate of each
    factor rotated to be real positive."""
    cx = T.field is FieldTag.COMPLEX
    return TuplePoint(tuple(_phase_normalize_vector(np.asarray(p), cx)
                            for p in point.parts))


def same_orbit(a: TuplePoint, b: TuplePoint, T: MultilinearMap,
               tol: float = ORBIT_COORD_TOL) -> bool:
    """Whether two unit tuples agree modulo per-factor unimodular scalars."""
    na, nb = phase_normalized(a, T), phase_normalized(b, T)
    return all(np.abs(pa - pb).max() <= tol for pa, pb in zip(na.parts, nb.parts))


def _finalize_cluster(T, value, points, confidence, note="", tol=ORBIT_COORD_TOL):
    normed = [phase_normalized(p, T) for p in points]
    order = sorted(range(len(normed)),
                   key=lambda i: tuple(np.round(normed[i].concat().view(np.float64), 9)))
    unique = []
    for i in order:
        if not any(all(np.abs(pa - pb).max() <= tol
                       for pa, pb in zip(normed[i].parts, u.parts))
                   for u in unique):
            unique.append(normed[i])
    rep = unique[0] if unique else None
    return AttainmentCluster(value, unique, rep, len(unique) == 1, confidence, note)


def _svd_cluster(T: MultilinearMap, cfg) -> AttainmentCluster:
    sigma, basis = top_right_singular_subspace(T)
    r = basis.shape[1]
    if r == 1:
        cluster = _finalize_cluster(T, sigma, [TuplePoint((basis[:, 0],))],
                                    CERTIFIED, "unique top singular direction")
        return cluster
    pts = [basis[:, i] for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            pts.append((basis[:, i] + basis[:, j]) / math.sqrt(2.0))
            pts.append((basis[:, i] - basis[:, j]) / math.sqrt(2.0))
            if T.field is FieldTag.COMPLEX:
                pts.append((basis[:, i] + 1j * basis[:, j]) / math.sqrt(2.0))
                pts.append((basis[:, i] - 1j * basis[:, j]) / math.sqrt(2.0))
    rng = np.random.default_rng(cfg_seed(cfg))
    for _ in range(16):
        c = rng.standard_normal(r)
        if T.field is FieldTag.COMPLEX:
            c = c + 1j * rng.standard_normal(r)
        pts.append(basis @ (c / np.linalg.norm(c)))
    cluster = _finalize_cluster(T, sigma, [TuplePoint((p,)) for p in pts], CERTIFIED,
                                f"top singular subspace has dimension {r}")
    cluster.is_single_orbit = False  # certified: the whole sphere of the subspace attains
    return cluster


def _functional_cluster(T: MultilinearMap, cfg) -> Optional[AttainmentCluster]:
    """Exact attainment for k = 1 maps into a one-dimensional codomain."""
    c = T.coeffs[0]
    spec = T.factors[0]
    p, q = spec.p, spec.q
    a = np.abs(c)
    if p == 1.0:
        # maximize |sum c_i x_i| over the l1 sphere: mass on argmax coordinates
        top = a.max()
        ties = np.flatnonzero(a >= top * (1.0 - TOL_GAP))
        pts = []
        for j in ties:
            e = np.zeros(spec.dim, dtype=spec.field.dtype)
            e[j] = np.conj(unit_sign(c[j : j + 1]))[0]
            pts.append(e)
        if len(ties) > 1:
            for i in range(len(ties)):
                for j in range(i + 1, len(ties)):
                    pts.append((pts[i] + pts[j]) / 2.0)
        note = "l1 domain: attainment on the argmax simplex"
        return _finalize_cluster(T, float(top), [TuplePoint((x,)) for x in pts],
                                 CERTIFIED, note)
    if p == math.inf:
        zeros = np.flatnonzero(_zero_like(a))
        base = np.conj(unit_sign(c))
        base[zeros] = 1.0
        pts = [base]
        for j in zeros:
            for v in (-1.0, 0.0):
                x = base.copy()
                x[j] = v
                pts.append(x)
        cluster = _finalize_cluster(T, float(a.sum()),
                                    [TuplePoint((x,)) for x in pts], CERTIFIED,
                                    "linf domain: free coordinates where the "
                                    "coefficient vanishes" if zeros.size else
                                    "linf domain: sign pattern is forced")
        if zeros.size:
            cluster.is_single_orbit = False
        return cluster
    # 1 < p < inf: Hoelder equality forces a single direction
    nq = float((a ** q).sum() ** (1.0 / q))
    x = np.conj(unit_sign(c)) * a ** (q - 1.0) / nq ** (q - 1.0)
    return _finalize_cluster(T, nq, [TuplePoint((x,))], CERTIFIED,
                             "strictly convex domain: unique maximizer")


def _zero_like(a: np.ndarray) -> np.ndarray:
    m = a.max()
    return a <= 1e-9 * m if m > 0 else np.ones_like(a, dtype=bool)


def _bilinear_cluster(T: MultilinearMap, cfg) -> AttainmentCluster:
    """Exact attainment for Euclidean bilinear forms via the SVD."""
    m = T.coeffs[0]
    u, s, vh = np.linalg.svd(m)
    sigma = float(s[0])
    r = int(np.sum(s >= sigma * (1.0 - TOL_GAP)))
    ur, vr = u[:, :r], vh[:r].conj().T
    combos = [np.eye(r, dtype=complex)[:, i] for i in range(r)]
    if r > 1:
        rng = np.random.default_rng(cfg_seed(cfg))
        for i in range(r):
            for j in range(i + 1, r):
                combos.append((combos[i] + combos[j]) / math.sqrt(2.0))
        for _ in range(8):
            cc = rng.standard_normal(r) + (1j * rng.standard_normal(r)
                                           if T.field is FieldTag.COMPLEX else 0)
            combos.append(cc / np.linalg.norm(cc))
    pts = []
    for aa in combos:
        aa = aa if T.field is FieldTag.COMPLEX else aa.real
        pts.append(TuplePoint((np.conj(ur @ aa), vr @ aa)))
    cluster = _finalize_cluster(T, sigma, pts, CERTIFIED,
                                f"bilinear form, top singular multiplicity {r}")
    if r > 1:
        cluster.is_single_orbit = False
    return cluster


def _certified_cluster(T: MultilinearMap, cfg) -> Optional[AttainmentCluster]:
    if T.k == 1 and _is_euclidean(T.factors[0]) and _is_euclidean(T.codomain):
        return _svd_cluster(T, cfg)
    if T.codomain.dim == 1:
        if T.k == 1:
            return _functional_cluster(T, cfg)
        if T.k == 2 and all(_is_euclidean(s) for s in T.factors):
            return _bilinear_cluster(T, cfg)
    return None


# ---------------------------------------------------------------------------
# iterative ascent


def cfg_seed(cfg) -> int:
    return int(getattr(cfg, "seed", 0)) if cfg is not None else 0


def _random_unit_parts(T, rng):
    parts = []
    for s in T.factors:
        v = rng.standard_normal(s.dim)
        if s.is_complex:
            v = v + 1j * rng.standard_normal(s.dim)
        parts.append(normalize(v, s))
    return parts


def _hopm_step(T, parts):
    v = np.einsum(f"z{_LETTERS[:T.k]},{','.join(_LETTERS[:T.k])}->z",
                  T.coeffs, *parts)
    nv = np.linalg.norm(v)
    if nv == 0:
        return parts, 0.0
    y = v / nv
    for t in range(T.k):
        m = _contract_except(T, parts, t)
        xt = m.conj().T @ y
        nx = np.linalg.norm(xt)
        if nx > 0:
            parts[t] = xt / nx
        v = np.einsum(f"z{_LETTERS[:T.k]},{','.join(_LETTERS[:T.k])}->z",
                      T.coeffs, *parts)
        nv = np.linalg.norm(v)
        y = v / nv if nv > 0 else y
    return parts, float(nv)


def _dual_vertex(c: np.ndarray, spec: SpaceSpec) -> np.ndarray:
    """Maximizer of the real pairing Re sum c_i v_i over the unit lp ball."""
    a = np.abs(c)
    if spec.p == math.inf:
        v = np.conj(unit_sign(c))
        v[a == 0] = 1.0
        return v
    if spec.p == 1.0:
        i = int(np.argmax(a))
        v = np.zeros(spec.dim, dtype=spec.field.dtype)
        v[i] = np.conj(unit_sign(c[i : i + 1]))[0]
        return v
    q = spec.q
    nq = float((a ** q).sum() ** (1.0 / q))
    return np.conj(unit_sign(c)) * a ** (q - 1.0) / nq ** (q - 1.0)


def _subgradient_sweep(T, parts, val):
    """One Gauss-Seidel sweep of projected subgradient ascent.

    Each slot steps toward the lp-ball maximizer of its linearization (the
    full step never decreases the convex objective) with step-halving as
    the fallback near floating-point ties.
    """
    improved = False
    for t in range(T.k):
        spec = T.factors[t]
        v = evaluate(T, TuplePoint(tuple(parts)))
        if not np.any(v):
            c = np.ones(spec.dim, dtype=spec.field.dtype)
        else:
            w = support_functionals(v, T.codomain).extreme[0].coeffs
            m = _contract_except(T, parts, t)
            c = m.T @ w
        if not np.any(np.abs(c)):
            continue
        target = _dual_vertex(c, spec)
        eta = 1.0
        while eta > 1e-12:
            cand = parts[t] + eta * (target - parts[t])
            n = lp_norm(cand, spec)
            if n == 0:
                eta *= 0.5
                continue
            cand = cand / n
            new_parts = list(parts)
            new_parts[t] = cand
            new_val = lp_norm(evaluate(T, TuplePoint(tuple(new_parts))), T.codomain)
            if new_val > val * (1 + 1e-14) or (val == 0 and new_val > 0):
                parts[t] = cand
                val = new_val
                improved = True
                break
            eta *= 0.5
    return parts, val, improved


def _ascent_cluster(T: MultilinearMap, cfg) -> AttainmentCluster:
    restarts = int(getattr(cfg, "restarts", 32)) if cfg is not None else 32
    max_iter = int(getattr(cfg, "max_iter", 500)) if cfg is not None else 500
    tol_attain = float(getattr(cfg, "tol_attain", 1e-6)) if cfg is not None else 1e-6
    rng = np.random.default_rng(cfg_seed(cfg))
    hilbertian = all(_is_euclidean(s) for s in T.factors) and _is_euclidean(T.codomain)
    results = []
    for _ in range(restarts):
        parts = _random_unit_parts(T, rng)
        val = lp_norm(evaluate(T, TuplePoint(tuple(parts))), T.codomain)
        for _ in range(max_iter):
            prev = val
            if hilbertian:
                parts, val = _hopm_step(T, parts)
            else:
                parts, val, improved = _subgradient_sweep(T, parts, val)
                if not improved:
                    break
            if val - prev <= 1e-13 * max(val, 1.0):
                break
        results.append((val, TuplePoint(tuple(parts))))
    best = max(v for v, _ in results)
    keep = [p for v, p in results if v >= best - tol_attain * best]
    return _finalize_cluster(T, best, keep, SAMPLED,
                             "multi-start ascent; attainment sampling is not "
                             "certified complete")


def norm_estimate(T: MultilinearMap, cfg=None) -> AttainmentCluster:
    """Best value of ||T x|| over unit tuples plus the maximizers found.

    Exact (SVD / dual-norm) routes are used whenever available; otherwise a
    multi-start alternating ascent runs: higher-order power iteration when
    every space is Euclidean, projected subgradient ascent with step halving
    for general lp factors.
    """
    if T.is_zero():
        raise ZeroMapError("the zero map has no norming tuples")
    exact = _certified_cluster(T, cfg)
    if exact is not None:
        return exact
    return _ascent_cluster(T, cfg)


def attainment_set(T: MultilinearMap, cfg=None) -> AttainmentCluster:
    """Norm attainment set sample with orbit classification.

    ``is_single_orbit`` is certified exactly when the underlying route is
    (Hilbert k = 1: true iff the top singular space is one-dimensional);
    ascent-based answers stay flagged as sampled.
    """
    return norm_estimate(T, cfg)


def operator_norm(T: MultilinearMap, cfg=None):
    """(value, certified) without maximizer bookkeeping; used in inner loops."""
    if T.k == 1 and _is_euclidean(T.factors[0]) and _is_euclidean(T.codomain):
        s = np.linalg.svd(T.matrix, compute_uv=False)
        return (float(s[0]) if s.size else 0.0), True
    if T.codomain.dim == 1:
        if T.k == 1:
            from .spaces import dual_norm
            return float(dual_norm(T.coeffs[0], T.factors[0])), True
        if T.k == 2 and all(_is_euclidean(s) for s in T.factors):
            s = np.linalg.svd(T.coeffs[0], compute_uv=False)
            return float(s[0]), True
    if T.is_zero():
        return 0.0, True
    return _ascent_cluster(T, cfg).value, False


def ascent_trajectory(T: MultilinearMap, seed: int = 0, steps: int = 30):
    """Iterates of one ascent run from a random start; a norming sequence."""
    rng = np.random.default_rng(seed)
    parts = _random_unit_parts(T, rng)
    hilbertian = all(_is_euclidean(s) for s in T.factors) and _is_euclidean(T.codomain)
    path = [TuplePoint(tuple(parts))]
    val = lp_norm(evaluate(T, path[0]), T.codomain)
    for _ in range(steps):
        if hilbertian:
            parts, val = _hopm_step(T, list(parts))
        else:
            parts, val, improved = _subgradient_sweep(T, list(parts), val)
            if not improved:
                break
        path.append(TuplePoint(tuple(parts)))
    return path


def random_map(dims, field: FieldTag = FieldTag.REAL, seed: int = 0,
               p: float = 2.0, codomain_p: float = 2.0) -> MultilinearMap:
    """Seeded Gaussian map: dims = (codomain_dim, n_1, ..., n_k).

    Real and imaginary parts are drawn independently in the complex case;
    identical seeds reproduce byte-identical tensors.
    """
    dims = tuple(int(d) for d in dims)
    if len(dims) < 2 or any(d < 1 for d in dims):
        raise ValueError("dims must be (codomain_dim, n_1, ..., n_k) with all >= 1")
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(dims)
    if field is FieldTag.COMPLEX:
        coeffs = coeffs + 1j * rng.standard_normal(dims)
    factors = tuple(SpaceSpec(n, p, field) for n in dims[1:])
    return MultilinearMap(factors, SpaceSpec(dims[0], codomain_p, field), coeffs)
