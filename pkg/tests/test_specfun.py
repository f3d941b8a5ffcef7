"""Primitive family: high-precision oracle, chain relation, regimes.

The reference values are generated on the fly from the same exact
closed forms (rational P, Q with p = P*Gamma(0,x) + e^(-x)*Q) the
coefficient generator emits, evaluated in 60-digit mpmath arithmetic.
Binary floats are exact rationals, so feeding the test abscissae
straight into mpmath introduces no representation error.
"""

import importlib.util
import math
import pathlib
import subprocess
import sys

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_pws import specfun
from casimir_pws import _kernels_np
from casimir_pws._backend import BACKEND_NAME, kernels

KINDS = "defghij"

# abscissae spanning every evaluation regime: power series, direct
# closed form, float continued fraction, extended-precision continued
# fraction, and the asymptotic expansion -- including the handoffs
X_GRID = [1e-4, 5e-4, 9.9e-4, 1.1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 2.4,
          2.5, 2.6, 5.0, 10.0, 19.0, 20.0, 21.0, 25.0, 30.0, 34.0,
          35.9, 36.1, 40.0, 44.0, 50.0, 80.0]


def _load_generator():
    root = pathlib.Path(__file__).resolve().parents[1]
    path = root / "tools" / "gen_primitive_coefficients.py"
    spec = importlib.util.spec_from_file_location("prim_gen", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


@pytest.fixture(scope="module")
def oracle():
    """kind, x -> 60-digit mpmath value of P(x)Gamma(0,x) + e^(-x)Q(x)."""
    import sympy

    gen = _load_generator()
    lambdified = {}
    for kind, (P, Q) in gen.CLOSED_FORMS.items():
        lambdified[kind] = (
            sympy.lambdify(gen.X, P, modules="mpmath"),
            sympy.lambdify(gen.X, Q, modules="mpmath"),
        )

    def evaluate(kind: str, x: float) -> mp.mpf:
        fP, fQ = lambdified[kind]
        with mp.workdps(60):
            xm = mp.mpf(x)
            return fP(xm) * mp.e1(xm) + mp.exp(-xm) * fQ(xm)

    return evaluate


@pytest.mark.parametrize("kind", KINDS)
def test_primitive_against_mpmath(oracle, kind):
    worst = 0.0
    for x in X_GRID:
        got = specfun.primitive(kind, x)
        want = oracle(kind, x)
        rel = abs(mp.mpf(got) - want) / abs(want)
        worst = max(worst, float(rel))
    assert worst <= 1e-10, f"kind {kind}: worst relative error {worst:.3e}"


def test_j_at_zero_is_exact():
    assert specfun.primitive("j", 0.0) == -23.0 / 15.0


def test_j_zero_matches_limit(oracle):
    # the closed form approaches the same constant like x*ln(x)
    for x in (1e-6, 1e-8):
        gap = abs(float(oracle("j", x)) + 23.0 / 15.0)
        assert gap <= 4.0 * x * abs(math.log(x))


@pytest.mark.parametrize("kind", KINDS)
def test_decay_at_large_argument(kind):
    assert abs(specfun.primitive(kind, 100.0)) < 1e-40
    assert specfun.primitive(kind, 250.0) == pytest.approx(0.0, abs=1e-100)


@pytest.mark.parametrize("kind", "defghi")
@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0, 10.0, 20.0])
def test_derivative_chain(kind, x):
    residual = specfun.primitive_chain_check(kind, x, 1e-4 * x)
    assert abs(residual / specfun.primitive(kind, x)) <= 1e-6


def test_chain_check_contract():
    with pytest.raises(ValueError):
        specfun.primitive_chain_check("j", 1.0, 1e-4)
    with pytest.raises(ValueError):
        specfun.primitive_chain_check("f", 1.0, 0.2)  # h >= x/10
    with pytest.raises(ValueError):
        specfun.primitive_chain_check("f", -1.0, 1e-4)


def test_divergent_kinds_reject_zero():
    for kind in "defghi":
        with pytest.raises(ValueError):
            specfun.primitive(kind, 0.0)
    with pytest.raises(ValueError):
        specfun.primitive("j", -1.0)
    with pytest.raises(ValueError):
        specfun.primitive("q", 1.0)


def test_vectorized_matches_scalar():
    xs = np.asarray([0.3, 1.7, 24.0, 41.0])
    for kind in KINDS:
        vec = specfun.primitive(kind, xs)
        sca = [specfun.primitive(kind, float(x)) for x in xs]
        assert np.array_equal(vec, np.asarray(sca))


def test_gamma0_against_scipy():
    from scipy.special import exp1

    xs = np.geomspace(1e-6, 300.0, 80)
    got = specfun.gamma0(xs)
    assert np.allclose(got, exp1(xs), rtol=1e-13, atol=0.0)
    with pytest.raises(ValueError):
        specfun.gamma0(0.0)


def test_exp_gamma0_survives_underflow_range():
    # e^x Gamma(0,x) ~ 1/x stays representable long after e^(-x)
    # underflows; check the asymptotic envelope
    for x in (800.0, 5000.0):
        v = specfun.exp_gamma0(x)
        assert 0.0 < v < 1.0 / x
        assert v == pytest.approx(1.0 / x * (1.0 - 1.0 / x), rel=1e-3)


def test_small_x_expansion_reconstructs_primitive(oracle):
    # p(x) = -ln(x) P(x) + R(x) as returned, for x below the handoff
    for kind in KINDS:
        p_coeffs, r_terms = specfun.small_x_expansion(kind)
        for x in (1e-4, 5e-4):
            P = sum(c * x**m for m, c in enumerate(p_coeffs))
            R = sum(c * x**k for k, c in r_terms.items())
            want = float(oracle(kind, x))
            assert -math.log(x) * P + R == pytest.approx(want, rel=1e-12)


def test_series_handoff_is_seamless(oracle):
    # both evaluation paths hold the same accuracy straddling the
    # series/closed-form switch (function variation between the two
    # abscissae is removed by comparing each side to the oracle)
    for rel_offset in (-1e-6, 1e-6):
        x = specfun.X_SERIES * (1.0 + rel_offset)
        for kind in KINDS:
            want = oracle(kind, x)
            got = specfun.primitive(kind, x)
            assert abs(mp.mpf(got) - want) / abs(want) <= 1e-10


def test_backends_agree():
    rng = np.random.default_rng(642)
    xs = np.concatenate([
        rng.uniform(1e-4, 1e-3, 40),
        rng.uniform(1e-3, 2.5, 60),
        rng.uniform(2.5, 20.0, 60),
        rng.uniform(20.0, 36.0, 40),
        rng.uniform(36.0, 90.0, 40),
    ])
    for kind in KINDS:
        active = kernels.primitive(kind, xs)
        fallback = _kernels_np.primitive(kind, xs)
        denom = np.maximum(np.abs(fallback), 1e-300)
        assert np.max(np.abs(active - fallback) / denom) <= 1e-12


def test_backend_env_override():
    code = ("import casimir_pws as c; print(c.BACKEND_NAME)")
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True, text=True,
        env={"PATH": "/usr/bin:/bin", "CASIMIR_PWS_BACKEND": "python"},
        cwd=str(pathlib.Path(__file__).resolve().parents[1]),
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "numpy"
    assert BACKEND_NAME in ("cython", "numpy")


@settings(max_examples=60, deadline=None)
@given(x=st.floats(min_value=0.3, max_value=30.0),
       kind=st.sampled_from("defghi"))
def test_property_chain_holds_everywhere(x, kind):
    residual = specfun.primitive_chain_check(kind, x, 1e-5 * x)
    scale = max(abs(specfun.primitive(kind, x)), 1e-30)
    assert abs(residual) / scale <= 1e-5


@settings(max_examples=60, deadline=None)
@given(x1=st.floats(min_value=2.0, max_value=60.0),
       factor=st.floats(min_value=1.01, max_value=3.0),
       kind=st.sampled_from(KINDS))
def test_property_magnitude_decays(x1, factor, kind):
    # beyond the last sign change every member decays monotonically
    x2 = x1 * factor
    assert abs(specfun.primitive(kind, x2)) < abs(
        specfun.primitive(kind, x1))
