"""Adaptive quadrature: known integrals, error honesty, failure modes."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_pws.quadrature import (
    EvaluationError,
    QuadratureConfig,
    integrate_2d_wedge,
    integrate_finite,
    integrate_semi_infinite,
)

CFG = QuadratureConfig(rel_tol=1e-12)


# ---------------------------------------------------------------------------
# known finite integrals

FINITE_CASES = [
    (lambda x: x**2, 0.0, 1.0, 1.0 / 3.0),
    (lambda x: np.sin(x), 0.0, math.pi, 2.0),
    (lambda x: np.exp(x), 0.0, 1.0, math.e - 1.0),
    (lambda x: 1.0 / (1.0 + x**2), -1.0, 1.0, math.pi / 2.0),
    (lambda x: np.exp(-(x**2)), 0.0, 5.0,
     math.sqrt(math.pi) / 2.0 * math.erf(5.0)),
    (lambda x: np.sqrt(np.abs(x)), 0.0, 1.0, 2.0 / 3.0),
    (lambda x: np.cos(10.0 * x), 0.0, 2.0, math.sin(20.0) / 10.0),
    (lambda x: np.log(x), 1.0, 4.0, 4.0 * math.log(4.0) - 3.0),
]


@pytest.mark.parametrize("f,a,b,truth", FINITE_CASES)
def test_finite_known_values(f, a, b, truth):
    res = integrate_finite(f, a, b, CFG)
    assert res.converged
    assert res.value == pytest.approx(truth, rel=1e-11)
    # the reported error estimate must bound the actual error (with a
    # small safety factor for the rare panel where the estimate is tight)
    assert abs(res.value - truth) <= 10.0 * res.error_estimate + 1e-15


# ---------------------------------------------------------------------------
# known semi-infinite integrals

SEMI_CASES = [
    (lambda x: np.exp(-x), 0.0, 1.0, 1.0),
    (lambda x: x**2 * np.exp(-2.0 * x), 0.0, 0.25, 2.0),
    (lambda x: x**3 * np.exp(-x), 0.0, 6.0, 1.0),
    (lambda x: np.exp(-x), 2.0, math.exp(-2.0), 1.0),
    (lambda x: np.exp(-x) * np.cos(x), 0.0, 0.5, 1.0),
    (lambda x: np.exp(-0.1 * x), 0.0, 10.0, 0.1),
]


@pytest.mark.parametrize("f,a,truth,scale", SEMI_CASES)
def test_semi_infinite_known_values(f, a, truth, scale):
    res = integrate_semi_infinite(f, a, CFG._replace(decay_scale=scale))
    assert res.converged
    assert res.value == pytest.approx(truth, rel=1e-11)


def test_semi_infinite_decay_hint_is_only_a_hint():
    # a wrong decay_scale must not change the answer, only the cost
    f = lambda x: np.exp(-3.0 * x)
    right = integrate_semi_infinite(f, 0.0, CFG._replace(decay_scale=3.0))
    wrong = integrate_semi_infinite(f, 0.0, CFG._replace(decay_scale=0.2))
    assert right.value == pytest.approx(1.0 / 3.0, rel=1e-11)
    assert wrong.value == pytest.approx(1.0 / 3.0, rel=1e-10)


# ---------------------------------------------------------------------------
# 2-D wedge (u from 0, kappa from u upward)


def test_wedge_exponential():
    # inner: int_u^inf e^(-2k) dk = e^(-2u)/2; outer: int_0^inf -> 1/4
    res = integrate_2d_wedge(lambda u, k: np.exp(-2.0 * k),
                             QuadratureConfig(rel_tol=1e-11,
                                              decay_scale=2.0))
    assert res.converged
    assert res.value == pytest.approx(0.25, rel=1e-9)


def test_wedge_gaussian():
    # inner: int_u^inf k e^(-k^2) dk = e^(-u^2)/2; outer -> sqrt(pi)/4
    res = integrate_2d_wedge(lambda u, k: k * np.exp(-(k**2)),
                             QuadratureConfig(rel_tol=1e-11))
    assert res.converged
    assert res.value == pytest.approx(math.sqrt(math.pi) / 4.0, rel=1e-9)


# ---------------------------------------------------------------------------
# structural properties


def test_linearity():
    f = lambda x: np.exp(-x)
    g = lambda x: x * np.exp(-2.0 * x)
    combo = lambda x: 3.0 * f(x) - 2.0 * g(x)
    vf = integrate_semi_infinite(f, 0.0, CFG).value
    vg = integrate_semi_infinite(g, 0.0, CFG).value
    vc = integrate_semi_infinite(combo, 0.0, CFG).value
    assert vc == pytest.approx(3.0 * vf - 2.0 * vg, rel=1e-12)


def test_interval_additivity():
    f = lambda x: np.exp(-x) * np.sin(3.0 * x)
    whole = integrate_finite(f, 0.0, 5.0, CFG).value
    left = integrate_finite(f, 0.0, 1.7, CFG).value
    right = integrate_finite(f, 1.7, 5.0, CFG).value
    assert whole == pytest.approx(left + right, rel=1e-11)


def test_interval_orientation_contract():
    # endpoints must be strictly increasing and finite
    f = lambda x: x**2
    with pytest.raises(ValueError):
        integrate_finite(f, 1.0, 1.0, CFG)
    with pytest.raises(ValueError):
        integrate_finite(f, 2.0, 0.0, CFG)
    with pytest.raises(ValueError):
        integrate_finite(f, 0.0, math.inf, CFG)


def test_evaluation_counting():
    res = integrate_finite(lambda x: x, 0.0, 1.0, CFG)
    assert res.evaluations >= 15
    res2 = integrate_finite(lambda x: np.sin(50.0 * x), 0.0, 10.0, CFG)
    assert res2.evaluations > res.evaluations


def test_nonconvergence_is_reported_not_raised():
    nasty = lambda x: np.sin(1000.0 * x) / (1e-8 + np.abs(x - 0.5))
    res = integrate_finite(nasty, 0.0, 1.0,
                           QuadratureConfig(rel_tol=1e-14,
                                            max_subdivisions=2))
    assert not res.converged


def test_nan_integrand_raises():
    def bad(x):
        return np.where(x > 0.5, np.nan, 1.0)

    with pytest.raises(EvaluationError) as err:
        integrate_finite(bad, 0.0, 1.0, CFG)
    # the failing abscissa is named so the integrand can be debugged
    assert "0.5" in str(err.value) or "x=" in str(err.value)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=-1.0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureConfig(decay_scale=0.0)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(min_value=0, max_value=6),
       b=st.floats(min_value=0.1, max_value=10.0),
       c=st.floats(min_value=-5.0, max_value=5.0))
def test_property_monomials_exact(n, b, c):
    res = integrate_finite(lambda x: c * x**n, 0.0, b, CFG)
    truth = c * b ** (n + 1) / (n + 1)
    assert res.value == pytest.approx(truth, rel=1e-10, abs=1e-12)


@settings(max_examples=25, deadline=None)
@given(rate=st.floats(min_value=0.05, max_value=20.0))
def test_property_exponential_moments(rate):
    # int_0^inf x e^(-rate x) dx = 1/rate^2 for any positive rate
    res = integrate_semi_infinite(lambda x: x * np.exp(-rate * x), 0.0,
                                  CFG._replace(decay_scale=rate))
    assert res.converged
    assert res.value == pytest.approx(1.0 / rate**2, rel=1e-10)
