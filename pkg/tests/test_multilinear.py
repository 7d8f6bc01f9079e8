import math

import numpy as np
import pytest

from orthkit.spaces import DimensionMismatchError, FieldTag, SpaceSpec, lp_norm
from orthkit.multilinear import (
    MultilinearMap,
    TuplePoint,
    ZeroMapError,
    attainment_set,
    evaluate,
    norm_bruteforce,
    norm_estimate,
    operator_norm,
    phase_normalized,
    random_map,
    same_orbit,
    top_right_singular_subspace,
)
from orthkit.orthogonality import SolverConfig


def test_evaluate_bilinear_entry(bilinear_x1y1):
    out = evaluate(bilinear_x1y1, TuplePoint(([2.0, 0.0], [3.0, 0.0])))
    assert out.shape == (1,)
    assert out[0] == pytest.approx(6.0)


def test_evaluate_identity(diag21):
    eye = MultilinearMap.from_matrix(np.eye(2))
    np.testing.assert_allclose(evaluate(eye, TuplePoint(([1.0, 2.0],))), [1.0, 2.0])


def test_evaluate_linear_in_first_slot():
    T = random_map((2, 3, 2), seed=11)
    rng = np.random.default_rng(12)
    x1, x2 = rng.standard_normal(3), rng.standard_normal(2)
    a = evaluate(T, TuplePoint((2.0 * x1, x2)))
    b = 2.0 * evaluate(T, TuplePoint((x1, x2)))
    np.testing.assert_allclose(a, b)


def test_evaluate_dimension_mismatch(diag21):
    with pytest.raises(DimensionMismatchError):
        evaluate(diag21, TuplePoint(([1.0, 2.0, 3.0],)))


def test_bruteforce_diag(diag21):
    res = norm_bruteforce(diag21, 360)
    assert res.value == pytest.approx(2.0, abs=2e-2)
    assert res.error_bound <= 2e-2
    x = res.argmax.parts[0]
    assert abs(abs(x[0]) - 1.0) < 0.05


def test_bruteforce_bilinear(bilinear_x1y1):
    res = norm_bruteforce(bilinear_x1y1, 360)
    assert res.value == pytest.approx(1.0, abs=1e-6)


def test_bruteforce_rank_one():
    rng = np.random.default_rng(13)
    u, v, w = rng.standard_normal(2), rng.standard_normal(2), rng.standard_normal(2)
    coeffs = np.einsum("i,j,k->ijk", u, v, w)
    T = MultilinearMap((SpaceSpec(2), SpaceSpec(2)), SpaceSpec(2), coeffs)
    want = np.linalg.norm(u) * np.linalg.norm(v) * np.linalg.norm(w)
    res = norm_bruteforce(T, 200)
    assert res.value == pytest.approx(want, rel=1e-3)
    assert res.value <= want + 1e-12


def test_bruteforce_cap():
    T = random_map((2, 2, 2, 2), seed=14)
    with pytest.raises(ValueError):
        norm_bruteforce(T, 5000)


def test_norm_estimate_matches_svd(diag21):
    cluster = norm_estimate(diag21, SolverConfig())
    assert cluster.value == pytest.approx(2.0, rel=1e-10)


def test_norm_estimate_bilinear_single_orbit(bilinear_x1y1):
    cluster = attainment_set(bilinear_x1y1, SolverConfig())
    assert cluster.value == pytest.approx(1.0, rel=1e-12)
    assert cluster.is_single_orbit
    rep = cluster.orbit_representative
    np.testing.assert_allclose(np.abs(rep.parts[0]), [1.0, 0.0], atol=1e-9)
    np.testing.assert_allclose(np.abs(rep.parts[1]), [1.0, 0.0], atol=1e-9)


def test_norm_estimate_random_tensor_vs_bruteforce():
    cfg = SolverConfig(restarts=16)
    for seed in (21, 22, 23):
        T = random_map((2, 2, 2), seed=seed)
        est = norm_estimate(T, cfg).value
        bf = norm_bruteforce(T, 400).value
        assert abs(est - bf) <= 1e-3


def test_top_singular_subspace_examples():
    sigma, basis = top_right_singular_subspace(
        MultilinearMap.from_matrix(np.diag([2.0, 1.0])))
    assert sigma == pytest.approx(2.0)
    assert basis.shape == (2, 1)
    np.testing.assert_allclose(np.abs(basis[:, 0]), [1.0, 0.0], atol=1e-12)

    sigma, basis = top_right_singular_subspace(MultilinearMap.from_matrix(np.eye(3)))
    assert sigma == pytest.approx(1.0)
    assert basis.shape == (3, 3)

    sigma, basis = top_right_singular_subspace(
        MultilinearMap.from_matrix(np.diag([2.0, 2.0, 1.0])))
    assert basis.shape == (3, 2)
    span = basis @ basis.conj().T
    np.testing.assert_allclose(span, np.diag([1.0, 1.0, 0.0]), atol=1e-12)


def test_top_singular_subspace_rejects_non_hilbert():
    T = MultilinearMap((SpaceSpec(2, 3.0),), SpaceSpec(2, 2.0), np.eye(2))
    with pytest.raises(ValueError):
        top_right_singular_subspace(T)
    with pytest.raises(ValueError):
        top_right_singular_subspace(random_map((2, 2, 2), seed=1))


def test_attainment_examples(diag21, eye2, bilinear_x1y1):
    c1 = attainment_set(diag21, SolverConfig())
    assert c1.is_single_orbit and c1.confidence == "certified"
    np.testing.assert_allclose(np.abs(c1.orbit_representative.parts[0]),
                               [1.0, 0.0], atol=1e-12)
    c2 = attainment_set(eye2, SolverConfig())
    assert not c2.is_single_orbit and c2.confidence == "certified"
    c3 = attainment_set(bilinear_x1y1, SolverConfig())
    assert c3.is_single_orbit


def test_attainment_zero_map():
    z = MultilinearMap.from_matrix(np.zeros((2, 2)))
    with pytest.raises(ZeroMapError):
        attainment_set(z, SolverConfig())


def test_maximizers_attain_value():
    cfg = SolverConfig(restarts=8)
    for seed in (31, 32):
        T = random_map((2, 2, 2), seed=seed)
        cluster = attainment_set(T, cfg)
        for m in cluster.maximizers:
            val = lp_norm(evaluate(T, m), T.codomain)
            assert abs(val - cluster.value) <= 1e-6 * cluster.value


def test_boundedness_on_non_unit_tuples():
    cfg = SolverConfig(restarts=8)
    rng = np.random.default_rng(41)
    T = random_map((2, 3, 2), seed=42)
    bound = norm_estimate(T, cfg).value
    for _ in range(20):
        x1, x2 = 3.0 * rng.standard_normal(3), 0.5 * rng.standard_normal(2)
        val = lp_norm(evaluate(T, TuplePoint((x1, x2))), T.codomain)
        prod = (lp_norm(x1, T.factors[0]) * lp_norm(x2, T.factors[1]))
        assert val <= bound * prod + 1e-9


def test_orbit_dedup_under_unimodular_scalars():
    T = random_map((2, 2, 2), field=FieldTag.COMPLEX, seed=51)
    cluster = attainment_set(T, SolverConfig(restarts=8))
    rng = np.random.default_rng(52)
    m = cluster.maximizers[0]
    phases = np.exp(2j * math.pi * rng.random(2))
    twisted = TuplePoint(tuple(mu * p for mu, p in zip(phases, m.parts)))
    assert same_orbit(m, twisted, T)
    norm_twisted = phase_normalized(twisted, T)
    for a, b in zip(norm_twisted.parts, phase_normalized(m, T).parts):
        np.testing.assert_allclose(a, b, atol=1e-9)


def test_random_map_determinism():
    a = random_map((2, 3, 4), seed=7)
    b = random_map((2, 3, 4), seed=7)
    assert a.coeffs.tobytes() == b.coeffs.tobytes()
    c = random_map((2, 3, 4), seed=8)
    assert a.coeffs.tobytes() != c.coeffs.tobytes()
    assert a.coeffs.shape == (2, 3, 4)


def test_map_arithmetic(diag21, eye2):
    s = diag21 + 2.0 * eye2
    np.testing.assert_allclose(s.matrix, np.diag([4.0, 3.0]))
    d = diag21 - eye2
    np.testing.assert_allclose(d.matrix, np.diag([1.0, 0.0]))
    with pytest.raises(DimensionMismatchError):
        diag21 + random_map((2, 3), seed=1)


def test_operator_norm_routes(diag21, bilinear_x1y1, linf_sum_functional):
    v, cert = operator_norm(diag21)
    assert cert and v == pytest.approx(2.0)
    v, cert = operator_norm(bilinear_x1y1)
    assert cert and v == pytest.approx(1.0)
    v, cert = operator_norm(linf_sum_functional)
    assert cert and v == pytest.approx(2.0)
    T = random_map((2, 2, 2), seed=61)
    v, cert = operator_norm(T, SolverConfig(restarts=8))
    assert not cert
    assert v == pytest.approx(norm_bruteforce(T, 300).value, abs=1e-3)


def test_general_lp_ascent_against_bruteforce():
    # non-Euclidean factors force the subgradient route
    rng = np.random.default_rng(71)
    coeffs = rng.standard_normal((2, 2, 2))
    factors = (SpaceSpec(2, 1.0), SpaceSpec(2, math.inf))
    T = MultilinearMap(factors, SpaceSpec(2, 3.0), coeffs)
    est = norm_estimate(T, SolverConfig(restarts=24)).value
    bf = norm_bruteforce(T, 400).value
    assert est >= bf - 1e-3
    assert est <= bf + 5e-3
