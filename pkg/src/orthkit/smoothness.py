"""Smoothness classification of multilinear maps and related probes.

A non-zero map is smooth (has a unique support functional) iff its norm
attainment set is a single orbit under per-factor unimodular scalars and
the image of a representative is a smooth point of the codomain.  The
structural test is the deciding criterion here; the universally quantified
singleton-scalar-set criterion is sampled with random probe maps as
corroboration, since it cannot be quantified finitely.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .spaces import (
    FieldTag,
    SupportFunctional,
    is_smooth_point,
    lp_norm,
    normalize,
    sip,
    support_functionals,
    unit_sign,
)
from .multilinear import (
    CERTIFIED,
    MultilinearMap,
    TuplePoint,
    ZeroMapError,
    _is_euclidean,
    ascent_trajectory,
    attainment_set,
    evaluate,
    random_map,
    top_right_singular_subspace,
)
from .orthogonality import (
    Decision,
    SolverConfig,
    decide_orthogonality,
    distance_to_hull,
    omega_samples,
)

__all__ = [
    "PreconditionError",
    "SmoothDecision",
    "SmoothnessReport",
    "ProbeSpread",
    "AdditivityReport",
    "BSPropertyCertificate",
    "SipProbeReport",
    "decide_smooth",
    "omega_singleton_test",
    "right_additivity_probe",
    "nilpotent_split_counterexample",
    "bs_property_certificate",
    "sip_orthogonality_probe",
]

DEFAULT_PROBES = 20


class PreconditionError(ValueError):
    """Raised when an operation's stated precondition does not hold."""


class SmoothDecision(enum.Enum):
    SMOOTH = "Smooth"
    NOT_SMOOTH = "NotSmooth"
    UNDETERMINED = "Undetermined"


@dataclass
class SmoothnessReport:
    decision: SmoothDecision
    orbit_ok: bool
    image_smooth: bool
    representative: TuplePoint
    omega_spreads: list
    witnesses: dict
    confidence: str
    notes: str = ""


@dataclass(frozen=True)
class ProbeSpread:
    probe: int
    spread: float
    value: complex


@dataclass
class AdditivityReport:
    trials: int
    passes: int
    failures: int
    counterexample: Optional[tuple] = None
    notes: str = ""


@dataclass(frozen=True)
class BSPropertyCertificate:
    witness: TuplePoint
    functional: SupportFunctional
    residual_attainment: float
    residual_orthogonality: float


@dataclass(frozen=True)
class SipLimit:
    sequence: str
    variant: str
    limit: complex
    hull_distance: float


@dataclass
class SipProbeReport:
    entries: list
    max_limit_modulus: float
    converged: bool
    tol: float
    notes: str = ""


def _diameter(values) -> float:
    vals = np.asarray(list(values), dtype=complex)
    if vals.size <= 1:
        return 0.0
    if vals.size > 200:
        from .orthogonality import _hull_indices
        vals = vals[_hull_indices(vals)]
    diff = np.abs(vals[:, None] - vals[None, :])
    return float(diff.max())


def decide_smooth(T: MultilinearMap, cfg: SolverConfig = None,
                  probes: int = DEFAULT_PROBES) -> SmoothnessReport:
    """Structural smoothness test with sampled scalar-set corroboration.

    Smooth requires: a single attainment orbit, a smooth image point, and
    all probe scalar-set diameters below tolerance.  Positive answers from
    non-certified (sampled) attainment are downgraded to Undetermined.
    """
    cfg = cfg or SolverConfig()
    if T.is_zero():
        raise ZeroMapError("smoothness of the zero map is not defined")
    cluster = attainment_set(T, cfg)
    rep = cluster.orbit_representative or cluster.maximizers[0]
    image = evaluate(T, rep)
    image_smooth = is_smooth_point(image, T.codomain)
    spreads = omega_singleton_test(T, probes, cfg, cluster=cluster)
    witnesses: dict = {}
    notes = []
    spread_ok = True
    for ps in spreads:
        scale = max(1.0, abs(ps.value))
        if ps.spread > cfg.tol_decision * scale:
            spread_ok = False
            witnesses.setdefault("omega_spread", []).append((ps.probe, ps.spread))

    if not cluster.is_single_orbit:
        witnesses["second_orbit"] = tuple(cluster.maximizers[:2])
        if (T.k == 1 and _is_euclidean(T.factors[0]) and _is_euclidean(T.codomain)
                and not T.is_zero()):
            try:
                witnesses["additivity_counterexample"] = \
                    nilpotent_split_counterexample(T, cfg)
            except PreconditionError:
                pass
        decision = SmoothDecision.NOT_SMOOTH
        notes.append("attainment set spans more than one unimodular orbit")
    elif not image_smooth:
        a = np.abs(image)
        witnesses["image_tie"] = {
            "point": image,
            "codomain_p": T.codomain.p,
            "tied_or_zero_coordinates":
                [int(j) for j in np.flatnonzero(
                    (a >= a.max() * (1 - 1e-9)) if T.codomain.p == math.inf
                    else (a <= 1e-9 * a.max()))],
        }
        decision = SmoothDecision.NOT_SMOOTH
        notes.append("image of the representative is not a smooth point")
    elif not spread_ok:
        decision = SmoothDecision.UNDETERMINED
        notes.append("structure looks smooth but a probe scalar set has "
                     "non-trivial diameter")
    elif cluster.confidence != CERTIFIED:
        decision = SmoothDecision.UNDETERMINED
        notes.append("single orbit found by sampling only; a positive "
                     "verdict is not certified")
    else:
        decision = SmoothDecision.SMOOTH
    return SmoothnessReport(decision, cluster.is_single_orbit, image_smooth,
                            rep, spreads, witnesses, cluster.confidence,
                            "; ".join(notes))


def omega_singleton_test(T: MultilinearMap, probes: int,
                         cfg: SolverConfig = None, cluster=None):
    """Diameter of the sampled scalar set for random probe maps A.

    All diameters ~ 0 is necessary evidence for smoothness; for a smooth map
    the singleton value is y0*(A x0) at the orbit representative.
    """
    cfg = cfg or SolverConfig()
    if T.is_zero():
        raise ZeroMapError("probing the zero map is not defined")
    if cluster is None:
        cluster = attainment_set(T, cfg)
    dims = (T.codomain.dim,) + tuple(s.dim for s in T.factors)
    out = []
    for i in range(probes):
        A = random_map(dims, T.field, seed=cfg.seed + 7919 * (i + 1),
                       p=T.factors[0].p, codomain_p=T.codomain.p)
        A = MultilinearMap(T.factors, T.codomain, A.coeffs)
        samples = omega_samples(T, A, cfg, cluster=cluster)
        vals = [s.value for s in samples]
        out.append(ProbeSpread(i, _diameter(vals), vals[0]))
    return out


def _project_out(A: MultilinearMap, T: MultilinearMap, point: TuplePoint,
                 functional: SupportFunctional, norm_t: float) -> MultilinearMap:
    """A' = A - (y0*(A x0)/||T||) T, which satisfies y0*(A' x0) = 0."""
    lam = functional.action(evaluate(A, point)) / norm_t
    if T.field is FieldTag.REAL:
        lam = float(np.real(lam))
    return A - lam * T


def right_additivity_probe(T: MultilinearMap, trials: int,
                           cfg: SolverConfig = None) -> AdditivityReport:
    """Test whether orthogonality is right-additive at T.

    Each trial projects two random maps onto the orthogonal complement of T
    at attainment witnesses (so T is certified orthogonal to each) and asks
    whether T stays orthogonal to their sum.  When the attainment set has
    several orbits the projections use different witnesses, and for
    Euclidean operators the explicit nilpotent-split counterexample pair is
    tested first.
    """
    cfg = cfg or SolverConfig()
    if T.is_zero():
        raise ZeroMapError("probing the zero map is not defined")
    cluster = attainment_set(T, cfg)
    norm_t = cluster.value
    points = cluster.maximizers
    funcs = [support_functionals(evaluate(T, pt), T.codomain).extreme[0]
             for pt in points]
    dims = (T.codomain.dim,) + tuple(s.dim for s in T.factors)
    passes = failures = 0
    counter = None
    notes = []

    constructed = []
    if not cluster.is_single_orbit and T.k == 1 \
            and _is_euclidean(T.factors[0]) and _is_euclidean(T.codomain):
        try:
            constructed.append(nilpotent_split_counterexample(T, cfg))
        except PreconditionError:
            pass

    for pair in constructed:
        verdict = decide_orthogonality(T, pair[0] + pair[1], cfg)
        if verdict.decision is Decision.ORTHOGONAL:
            passes += 1
        else:
            failures += 1
            if counter is None:
                counter = pair
        notes.append("constructed nilpotent-split pair tested")

    for i in range(trials - len(constructed)):
        wa = points[i % len(points)]
        fa = funcs[i % len(points)]
        wb = points[(i + 1) % len(points)]
        fb = funcs[(i + 1) % len(points)]
        a_raw = random_map(dims, T.field, seed=cfg.seed + 104729 + 2 * i,
                           p=T.factors[0].p, codomain_p=T.codomain.p)
        b_raw = random_map(dims, T.field, seed=cfg.seed + 104730 + 2 * i,
                           p=T.factors[0].p, codomain_p=T.codomain.p)
        a1 = _project_out(MultilinearMap(T.factors, T.codomain, a_raw.coeffs),
                          T, wa, fa, norm_t)
        a2 = _project_out(MultilinearMap(T.factors, T.codomain, b_raw.coeffs),
                          T, wb, fb, norm_t)
        verdict = decide_orthogonality(T, a1 + a2, cfg)
        if verdict.decision is Decision.ORTHOGONAL:
            passes += 1
        else:
            failures += 1
            if counter is None:
                counter = (a1, a2)
    return AdditivityReport(trials, passes, failures, counter, "; ".join(notes))


def nilpotent_split_counterexample(T: MultilinearMap, cfg: SolverConfig = None):
    """Maps A1, A2 with T orthogonal to each but not to A1 + A2.

    Needs a Euclidean operator whose top singular subspace has dimension at
    least 2.  On that subspace the compressions of T^H A_i are
    [[s, +-4s], [0, s]] (+) s*I with s = sigma^2/2: each numerical range is
    a disc about s of radius 2s containing 0, while the sum compresses to
    sigma^2 * I, whose range {sigma^2} misses 0.
    """
    cfg = cfg or SolverConfig()
    if T.k != 1 or not (_is_euclidean(T.factors[0]) and _is_euclidean(T.codomain)):
        raise PreconditionError("construction needs a k = 1 Euclidean operator")
    sigma, basis = top_right_singular_subspace(T)
    r = basis.shape[1]
    if r < 2:
        raise PreconditionError("top singular subspace is one-dimensional: "
                                "the map is smooth and no counterexample exists")
    s = sigma ** 2 / 2.0
    out = []
    for off in (4.0 * s, -4.0 * s):
        c = np.eye(r, dtype=T.field.dtype) * s
        c[0, 1] = off
        m = T.matrix @ basis @ c @ basis.conj().T / sigma ** 2
        if T.field is FieldTag.REAL:
            m = m.real
        out.append(MultilinearMap(T.factors, T.codomain, m))
    return tuple(out)


def bs_property_certificate(T: MultilinearMap, A: MultilinearMap,
                            cfg: SolverConfig = None) -> BSPropertyCertificate:
    """Single-witness certificate for a smooth orthogonal pair.

    For smooth T orthogonal to A there is one attainment witness x0 whose
    image is orthogonal to A x0 in the codomain; the residuals
    (| ||T x0|| - ||T|| |, |y0*(A x0)|) certify both facts.
    """
    cfg = cfg or SolverConfig()
    smooth = decide_smooth(T, cfg)
    if smooth.decision is not SmoothDecision.SMOOTH:
        raise PreconditionError(
            f"T must be Smooth, got {smooth.decision.value}: {smooth.notes}")
    verdict = decide_orthogonality(T, A, cfg)
    if verdict.decision is not Decision.ORTHOGONAL:
        raise PreconditionError(
            f"T must be certified orthogonal to A, got {verdict.decision.value}")
    cluster = attainment_set(T, cfg)
    rep = cluster.orbit_representative
    y = evaluate(T, rep)
    f = support_functionals(y, T.codomain).extreme[0]
    res_attain = abs(lp_norm(y, T.codomain) - cluster.value)
    res_orth = abs(f.action(evaluate(A, rep)))
    return BSPropertyCertificate(rep, f, float(res_attain), float(res_orth))


def _perturbation_sequence(T, point, seed, steps):
    rng = np.random.default_rng(seed)
    dirs = []
    for s in T.factors:
        d = rng.standard_normal(s.dim)
        if s.is_complex:
            d = d + 1j * rng.standard_normal(s.dim)
        dirs.append(d)
    seq = []
    for n in range(steps):
        eps = 0.5 * 2.0 ** (-n)
        parts = tuple(normalize(np.asarray(p) + eps * d, s)
                      for p, d, s in zip(point.parts, dirs, T.factors))
        seq.append(TuplePoint(parts))
    return seq


def _sip_variants(y, spec):
    """Canonical SIP plus variants twisted by diagonal lp isometries on the
    tie coordinates of the anchor image."""
    variants = [("canonical", None)]
    a = np.abs(np.asarray(y))
    if spec.p == 1.0:
        ties = np.flatnonzero(a <= 1e-9 * a.max())
    elif spec.p == math.inf:
        ties = np.flatnonzero(a >= a.max() * (1 - 1e-9))
    else:
        ties = np.array([], dtype=int)
    for j in ties[:6]:
        d = np.ones(spec.dim, dtype=spec.field.dtype)
        d[j] = np.exp(0.37j) if spec.is_complex else -1.0
        variants.append((f"diag_twist_{int(j)}", d))
    return variants


def _sip_eval(av, tv, spec, twist):
    if twist is None:
        return sip(av, tv, spec)
    return sip(twist * av, twist * tv, spec)


def sip_orthogonality_probe(T: MultilinearMap, A: MultilinearMap,
                            cfg: SolverConfig = None, steps: int = 24) -> SipProbeReport:
    """Evaluate [A x_n, T x_n] along norming sequences for an orthogonal pair.

    Sequences are ascent iterates plus perturbed restarts around each found
    maximizer; SIPs are the canonical lp SIP and its tie-coordinate twisted
    variants.  For a smooth T every limit must vanish, and each limit value
    divided by ||T|| is checked against the sampled scalar-set hull.
    """
    cfg = cfg or SolverConfig()
    if T.codomain.p == math.inf:
        raise ValueError("no canonical semi-inner-product on an l-inf codomain")
    if T.is_zero():
        raise ZeroMapError("probing the zero map is not defined")
    verdict = decide_orthogonality(T, A, cfg)
    if verdict.decision is not Decision.ORTHOGONAL:
        raise PreconditionError(
            f"probe needs a certified orthogonal pair, got {verdict.decision.value}")
    cluster = attainment_set(T, cfg)
    samples = omega_samples(T, A, cfg, cluster=cluster)
    sample_vals = [s.value for s in samples]
    norm_t = cluster.value

    sequences = []
    for mi, point in enumerate(cluster.maximizers[:6]):
        sequences.append((f"perturb_{mi}",
                          _perturbation_sequence(T, point, cfg.seed + 31 * mi, steps)))
    for run in range(2):
        path = ascent_trajectory(T, seed=cfg.seed + 1009 + run, steps=steps)
        sequences.append((f"ascent_{run}", path))

    entries = []
    a_scale = 1.0
    for name, seq in sequences:
        tail = seq[-1]
        y_tail = evaluate(T, tail)
        variants = _sip_variants(y_tail, T.codomain)
        a_scale = max(a_scale, lp_norm(evaluate(A, tail), A.codomain))
        for vname, twist in variants:
            vals = [_sip_eval(evaluate(A, pt), evaluate(T, pt), T.codomain, twist)
                    for pt in seq]
            limit = vals[-1]
            dist = distance_to_hull(complex(limit) / norm_t, sample_vals)
            entries.append(SipLimit(name, vname, limit, dist))
        if len(variants) > 1:
            # one sequence that switches SIP per step, per the finite-family surrogate
            vals = [_sip_eval(evaluate(A, pt), evaluate(T, pt), T.codomain,
                              variants[n % len(variants)][1])
                    for n, pt in enumerate(seq)]
            limit = vals[-1]
            entries.append(SipLimit(name, "cycled",
                                    limit, distance_to_hull(complex(limit) / norm_t,
                                                            sample_vals)))
    max_mod = max(abs(complex(e.limit)) for e in entries) if entries else 0.0
    tol = cfg.tol_decision * norm_t * max(1.0, a_scale)
    return SipProbeReport(entries, float(max_mod), bool(max_mod <= tol), tol)
