import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthkit.spaces import (
    FieldTag,
    SpaceSpec,
    SupportFunctional,
    ZeroVectorError,
    DimensionMismatchError,
    dual_certificate_check,
    dual_exponent,
    dual_norm,
    is_smooth_point,
    lp_norm,
    sip,
    support_functionals,
)

R = FieldTag.REAL
C = FieldTag.COMPLEX


def test_lp_norm_pythagorean():
    assert lp_norm([3.0, 4.0], SpaceSpec(2, 2.0)) == pytest.approx(5.0)


def test_lp_norm_l1_and_linf():
    assert lp_norm([1.0, -2.0, 2.0], SpaceSpec(3, 1.0)) == pytest.approx(5.0)
    assert lp_norm([1.0, -2.0, 2.0], SpaceSpec(3, math.inf)) == pytest.approx(2.0)


def test_lp_norm_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        lp_norm([1.0, 2.0], SpaceSpec(3, 2.0))


def test_lp_norm_homogeneous_and_triangle():
    rng = np.random.default_rng(0)
    for p in (1.0, 1.5, 2.0, 3.0, math.inf):
        spec = SpaceSpec(4, p)
        x, y = rng.standard_normal(4), rng.standard_normal(4)
        assert lp_norm(2.5 * x, spec) == pytest.approx(2.5 * lp_norm(x, spec))
        assert lp_norm(x + y, spec) <= lp_norm(x, spec) + lp_norm(y, spec) + 1e-12


def test_dual_exponent():
    assert dual_exponent(1.0) == math.inf
    assert dual_exponent(math.inf) == 1.0
    assert dual_exponent(2.0) == 2.0
    assert dual_exponent(1.5) == pytest.approx(3.0)


def test_support_functional_euclidean():
    ss = support_functionals([3.0, 4.0], SpaceSpec(2, 2.0))
    assert ss.is_singleton
    np.testing.assert_allclose(ss.extreme[0].coeffs, [0.6, 0.8])


def test_support_functional_l1_zero_coordinate():
    ss = support_functionals([0.0, 5.0], SpaceSpec(2, 1.0))
    got = {tuple(f.coeffs) for f in ss.extreme}
    assert got == {(-1.0, 1.0), (1.0, 1.0)}
    assert not ss.circle_free


def test_support_functional_linf_tie():
    ss = support_functionals([2.0, 2.0], SpaceSpec(2, math.inf))
    got = {tuple(f.coeffs) for f in ss.extreme}
    assert got == {(1.0, 0.0), (0.0, 1.0)}


def test_support_functional_complex_l1_circle_flag():
    ss = support_functionals([0.0, 5.0], SpaceSpec(2, 1.0, C))
    assert ss.circle_free == (0,)
    got = {tuple(f.coeffs) for f in ss.extreme}
    assert got == {(-1.0, 1.0), (1.0, 1.0)}


def test_support_functional_zero_vector():
    with pytest.raises(ZeroVectorError):
        support_functionals([0.0, 0.0], SpaceSpec(2, 2.0))


def test_smooth_point_examples():
    assert is_smooth_point([3.0, 4.0], SpaceSpec(2, 2.0))
    assert not is_smooth_point([1.0, 0.0], SpaceSpec(2, 1.0))
    assert is_smooth_point([2.0, 1.0], SpaceSpec(2, math.inf))
    assert not is_smooth_point([2.0, 2.0], SpaceSpec(2, math.inf))


def test_sip_euclidean_is_inner_product():
    assert sip([1.0, 2.0], [3.0, 4.0], SpaceSpec(2, 2.0)) == pytest.approx(11.0)


def test_sip_single_support_coordinate():
    spec = SpaceSpec(2, 4.0)
    rng = np.random.default_rng(1)
    y = rng.standard_normal(2)
    assert sip(y, [1.0, 0.0], spec) == pytest.approx(y[0])


def test_sip_norm_axiom_p3():
    spec = SpaceSpec(2, 3.0)
    assert sip([1.0, 1.0], [1.0, 1.0], spec) == pytest.approx(2.0 ** (2.0 / 3.0))


def test_sip_rejects_p_inf():
    with pytest.raises(ValueError):
        sip([1.0, 0.0], [1.0, 0.0], SpaceSpec(2, math.inf))


def test_sip_complex_p2_matches_inner_product():
    spec = SpaceSpec(3, 2.0, C)
    rng = np.random.default_rng(2)
    y = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    assert sip(y, x, spec) == pytest.approx(np.sum(y * np.conj(x)))


def test_dual_certificate_examples():
    assert dual_certificate_check(SupportFunctional(np.array([0.6, 0.8])),
                                  [3.0, 4.0], SpaceSpec(2, 2.0))
    assert not dual_certificate_check(SupportFunctional(np.array([1.0, 0.0])),
                                      [3.0, 4.0], SpaceSpec(2, 2.0))
    # l-inf point (2, 2): action 0.5*2 + 0.5*2 = 2 = max |x_j|; l1 dual norm 1
    assert dual_certificate_check(SupportFunctional(np.array([0.5, 0.5])),
                                  [2.0, 2.0], SpaceSpec(2, math.inf), tol=1e-12)


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 7.0])
@pytest.mark.parametrize("field", [R, C])
def test_unique_support_functional_passes_certificate(p, field):
    rng = np.random.default_rng(3)
    spec = SpaceSpec(5, p, field)
    for _ in range(25):
        x = rng.standard_normal(5)
        if field is C:
            x = x + 1j * rng.standard_normal(5)
        ss = support_functionals(x, spec)
        assert ss.is_singleton
        assert dual_certificate_check(ss.extreme[0], x, spec, tol=1e-10)


@pytest.mark.parametrize("p", [1.0, math.inf])
def test_extreme_functionals_pass_certificate(p):
    rng = np.random.default_rng(4)
    spec = SpaceSpec(4, p)
    for _ in range(25):
        x = rng.standard_normal(4)
        x[rng.integers(0, 4)] = 0.0
        if not np.any(x):
            continue
        for f in support_functionals(x, spec).extreme:
            assert dual_certificate_check(f, x, spec, tol=1e-10)


def test_smoothness_matches_singleton_support():
    rng = np.random.default_rng(5)
    for p in (1.0, 1.5, 2.0, 3.0, math.inf):
        spec = SpaceSpec(4, p)
        for _ in range(20):
            x = rng.standard_normal(4)
            if rng.random() < 0.5:
                x[0] = 0.0
            if rng.random() < 0.5 and p == math.inf:
                x[1] = x[2]
            if not np.any(x):
                continue
            ss = support_functionals(x, spec)
            assert is_smooth_point(x, spec) == ss.is_singleton


_coord = st.floats(min_value=-10.0, max_value=10.0,
                   allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(st.lists(_coord, min_size=3, max_size=3),
       st.lists(_coord, min_size=3, max_size=3),
       st.lists(_coord, min_size=3, max_size=3),
       _coord, _coord,
       st.sampled_from([1.0, 1.5, 2.0, 3.0]))
def test_sip_axioms_property(x, y, z, alpha, beta, p):
    spec = SpaceSpec(3, p)
    x = np.asarray(x)
    if lp_norm(x, spec) < 1e-6:
        x = x + np.array([1.0, 0.0, 0.0])
    y, z = np.asarray(y), np.asarray(z)
    nx = lp_norm(x, spec)
    scale = max(1.0, nx, lp_norm(y, spec), lp_norm(z, spec), abs(alpha), abs(beta))
    assert sip(x, x, spec) == pytest.approx(nx ** 2, rel=1e-10)
    assert sip(x, x, spec) > 0
    lhs = sip(alpha * y + beta * z, x, spec)
    rhs = alpha * sip(y, x, spec) + beta * sip(z, x, spec)
    assert abs(lhs - rhs) <= 1e-10 * scale ** 3 + 1e-12
    lam = 0.5 + alpha / 20.0
    if abs(lam) > 1e-6:
        assert sip(y, lam * x, spec) == pytest.approx(lam * sip(y, x, spec),
                                                      rel=1e-9, abs=1e-12)
    assert abs(sip(y, x, spec)) <= lp_norm(y, spec) * nx + 1e-10


@settings(max_examples=40, deadline=None)
@given(st.lists(_coord, min_size=4, max_size=4),
       st.lists(_coord, min_size=4, max_size=4),
       st.sampled_from([1.0, 1.5, 2.0, 3.0]))
def test_sip_conjugate_homogeneity_complex(yr, yi, p):
    spec = SpaceSpec(2, p, C)
    y = np.array([yr[0] + 1j * yr[1], yr[2] + 1j * yr[3]])
    x = np.array([yi[0] + 1j * yi[1], yi[2] + 1j * yi[3]])
    if lp_norm(x, spec) < 1e-6:
        x = x + np.array([1.0 + 0.0j, 0.0])
    lam = 0.7 - 1.3j
    got = sip(y, lam * x, spec)
    want = np.conj(lam) * sip(y, x, spec)
    assert got == pytest.approx(want, rel=1e-9, abs=1e-12)
