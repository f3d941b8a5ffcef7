"""Material response models and Clausius-Mossotti conversions."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_pws.materials import (
    MaterialModel,
    PolarizationCatastropheError,
    alpha_from_eps_cm,
    alpha_iu,
    eps_dilute_first_order,
    eps_from_alpha_cm,
    eps_iu,
)

FOUR_PI = 4.0 * math.pi


# ---------------------------------------------------------------------------
# Clausius-Mossotti conversions


@pytest.mark.parametrize("eps", [1.0, 1.0 + 1e-12, 1.001, 2.0, 11.87,
                                 1e4, 1e8])
@pytest.mark.parametrize("nv", [0.3, 1.0, 7.5])
def test_cm_round_trip_from_eps(eps, nv):
    a = alpha_from_eps_cm(eps, nv)
    back = eps_from_alpha_cm(a, nv)
    assert back == pytest.approx(eps, rel=1e-15)


@pytest.mark.parametrize("filling", [1e-12, 1e-3, 0.3, 0.9, 0.999])
def test_cm_round_trip_from_alpha(filling):
    # filling = 4 pi n a / 3 < 1 parametrizes the allowed range
    nv = 2.0
    a = 3.0 * filling / (FOUR_PI * nv)
    eps = eps_from_alpha_cm(a, nv)
    again = alpha_from_eps_cm(eps, nv)
    assert again.a == pytest.approx(a, rel=1e-14)


def test_cm_anchor_values():
    # eps = 4 gives (eps-1)/(eps+2) = 1/2, so a = 3/(8 pi n)
    a = alpha_from_eps_cm(4.0, 1.0)
    assert a.a == pytest.approx(3.0 / (8.0 * math.pi), rel=1e-15)
    assert alpha_from_eps_cm(1.0, 1.0).a == 0.0


def test_cm_saturation_limit():
    # a -> 3/(4 pi n) as eps -> infinity
    sat = 3.0 / (FOUR_PI * 2.0)
    assert alpha_from_eps_cm(1e14, 2.0).a == pytest.approx(sat, rel=1e-13)


def test_polarization_catastrophe():
    nv = 1.0
    critical = 3.0 / (FOUR_PI * nv)
    with pytest.raises(PolarizationCatastropheError):
        eps_from_alpha_cm(critical, nv)
    with pytest.raises(PolarizationCatastropheError):
        eps_from_alpha_cm(1.5 * critical, nv)
    # just below the pole is legal and large
    assert eps_from_alpha_cm(critical * (1.0 - 1e-10), nv) > 1e9


def test_dilute_first_order():
    a, nv = 1.7e-4, 2.0
    assert eps_dilute_first_order(a, nv) == pytest.approx(
        1.0 + FOUR_PI * nv * a, rel=1e-15)
    # and the full CM expression approaches it for small a
    full = eps_from_alpha_cm(a, nv)
    assert full == pytest.approx(eps_dilute_first_order(a, nv),
                                 rel=5.0 * FOUR_PI * nv * a)


# ---------------------------------------------------------------------------
# response models on the imaginary frequency axis


def test_static_models_are_flat():
    m = MaterialModel.static(5.0)
    u = np.asarray([0.0, 0.1, 3.0, 100.0])
    assert np.all(eps_iu(m, u) == 5.0)
    ma = MaterialModel.static_alpha(0.02, n_v=3.0)
    assert np.all(alpha_iu(ma, u) == 0.02)


def test_lorentz_halving_at_resonance():
    m = MaterialModel.lorentz_eps(5.0, u_res=2.0)
    assert eps_iu(m, 2.0) == pytest.approx(1.0 + (5.0 - 1.0) / 2.0,
                                           rel=1e-15)
    ma = MaterialModel.lorentz_alpha(0.04, u_res=1.5)
    assert alpha_iu(ma, 1.5) == pytest.approx(0.02, rel=1e-15)
    assert alpha_iu(ma, 0.0) == 0.04


def test_alpha_of_eps_model_is_cm_converted():
    m = MaterialModel.static(4.0, n_v=2.0)
    want = alpha_from_eps_cm(4.0, 2.0).a
    assert alpha_iu(m, 0.0) == pytest.approx(want, rel=1e-15)


def test_eps_of_alpha_model_is_cm_converted():
    ma = MaterialModel.static_alpha(0.01, n_v=2.0)
    want = eps_from_alpha_cm(0.01, 2.0)
    assert eps_iu(ma, 0.0) == pytest.approx(want, rel=1e-15)


def test_perfect_mirror():
    m = MaterialModel.perfect_mirror(n_v=2.0)
    assert m.is_perfect_mirror
    assert math.isinf(eps_iu(m, 1.0))
    assert alpha_iu(m, 0.0) == pytest.approx(3.0 / (FOUR_PI * 2.0),
                                             rel=1e-15)
    assert alpha_iu(m, 57.0) == alpha_iu(m, 0.0)  # flat in frequency


def test_is_static_classification():
    assert MaterialModel.static(2.0).is_static
    assert MaterialModel.static_alpha(0.1).is_static
    assert MaterialModel.perfect_mirror().is_static
    assert not MaterialModel.lorentz_eps(2.0, 1.0).is_static
    assert not MaterialModel.lorentz_alpha(0.1, 1.0).is_static


def test_vectorization_shapes():
    m = MaterialModel.lorentz_eps(3.0, 1.0)
    u = np.linspace(0.0, 5.0, 7).reshape(7, 1)
    assert eps_iu(m, u).shape == (7, 1)
    assert float(eps_iu(m, 0.0)) == 3.0  # scalar in, scalar out


def test_constructor_validation():
    with pytest.raises(ValueError):
        MaterialModel.static(0.5)
    with pytest.raises(ValueError):
        MaterialModel.static_alpha(-0.1)
    with pytest.raises(ValueError):
        MaterialModel.lorentz_eps(2.0, u_res=0.0)
    with pytest.raises(ValueError):
        MaterialModel.lorentz_alpha(0.1, u_res=-1.0)
    with pytest.raises(ValueError):
        MaterialModel.static(2.0, n_v=0.0)
    with pytest.raises(ValueError):
        MaterialModel(variant="bogus")


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=80, deadline=None)
@given(eps=st.floats(min_value=1.0, max_value=1e10),
       nv=st.floats(min_value=1e-3, max_value=1e3))
def test_property_cm_round_trip(eps, nv):
    assert eps_from_alpha_cm(alpha_from_eps_cm(eps, nv), nv) == \
        pytest.approx(eps, rel=1e-13)


@settings(max_examples=50, deadline=None)
@given(u1=st.floats(min_value=0.0, max_value=50.0),
       du=st.floats(min_value=1e-3, max_value=50.0))
def test_property_lorentz_monotone_decreasing(u1, du):
    ma = MaterialModel.lorentz_alpha(0.3, u_res=1.0)
    assert alpha_iu(ma, u1 + du) < alpha_iu(ma, u1)
    m = MaterialModel.lorentz_eps(4.0, u_res=2.0)
    assert eps_iu(m, u1 + du) < eps_iu(m, u1)
    assert eps_iu(m, u1 + du) >= 1.0
