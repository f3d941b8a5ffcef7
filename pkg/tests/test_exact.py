"""Scattering-side checks: Fresnel algebra, Lifshitz anchors, oracles.

The 1-D reduction oracles used here exist because every static-
permittivity energy integral separates in the variables (t = u/kappa,
kappa): the kappa integral is a Gamma function (atom side) or a
polylogarithm (plate-plate side), leaving a single t-integral for
scipy.  Note the sign convention: both reflection coefficients are
negative on the imaginary axis for eps > 1, i.e. r_TM here equals
-(eps kappa - kappa_m)/(eps kappa + kappa_m).
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from casimir_pws import exact, pws
from casimir_pws.exact import Polarization, WaveParams
from casimir_pws.materials import MaterialModel
from casimir_pws.quadrature import QuadratureConfig

CFG = QuadratureConfig(rel_tol=1e-11)
ZETA4 = math.pi**4 / 90.0


def _fresnel_reference(eps, u, kappa, pol):
    """Independent plain-algebra Fresnel forms (same sign convention)."""
    km = math.sqrt(kappa**2 + (eps - 1.0) * u**2)
    if pol is Polarization.TE:
        return (kappa - km) / (kappa + km)
    return (km - eps * kappa) / (km + eps * kappa)


# ---------------------------------------------------------------------------
# Fresnel coefficients


def test_fresnel_matches_plain_algebra():
    rng = np.random.default_rng(7)
    for _ in range(200):
        eps = float(np.exp(rng.uniform(0.0, 18.0)))
        u = float(rng.uniform(0.0, 30.0))
        kappa = u + float(rng.uniform(1e-6, 30.0))
        w = WaveParams(u, kappa)
        for pol in Polarization:
            got = exact.fresnel_bulk(eps, w, pol)
            want = _fresnel_reference(eps, u, kappa, pol)
            assert got == pytest.approx(want, rel=1e-13, abs=1e-15)


def test_fresnel_normal_incidence_analytic():
    # at u = kappa (k = 0) both polarizations reduce to
    # -(sqrt(eps)-1)/(sqrt(eps)+1)
    for eps in (4.0, 9.0, 11.87):
        w = WaveParams(1.0, 1.0)
        want = -(math.sqrt(eps) - 1.0) / (math.sqrt(eps) + 1.0)
        for pol in Polarization:
            assert exact.fresnel_bulk(eps, w, pol) == pytest.approx(
                want, rel=1e-14)


def test_fresnel_limits():
    w = WaveParams(0.7, 1.9)
    for pol in Polarization:
        assert exact.fresnel_bulk(1.0, w, pol) == 0.0
        assert exact.fresnel_bulk(math.inf, w, pol) == -1.0
    with pytest.raises(ValueError):
        exact.fresnel_bulk(0.8, w, Polarization.TE)


def test_fresnel_te_at_grazing_u_zero():
    # u = 0: kappa_m = kappa, so TE reflection vanishes at any eps
    w = WaveParams(0.0, 1.3)
    assert exact.fresnel_bulk(50.0, w, Polarization.TE) == 0.0


@settings(max_examples=120, deadline=None)
@given(eps=st.floats(min_value=1.0, max_value=1e8),
       u=st.floats(min_value=0.0, max_value=50.0),
       dk=st.floats(min_value=1e-9, max_value=50.0))
def test_property_reflection_bounds(eps, u, dk):
    w = WaveParams(u, u + dk)
    for pol in Polarization:
        r = exact.fresnel_bulk(eps, w, pol)
        assert -1.0 <= r <= 0.0


def test_wave_params_contract():
    w = WaveParams(0.6, 1.0)
    assert w.k == pytest.approx(0.8, rel=1e-15)
    assert w.kappa_m(1.0) == pytest.approx(1.0, rel=1e-15)
    assert w.kappa_m(2.0) == pytest.approx(math.sqrt(1.36), rel=1e-15)
    with pytest.raises(ValueError):
        WaveParams(-0.1, 1.0)
    with pytest.raises(ValueError):
        WaveParams(1.0, 0.9)  # kappa < u


# ---------------------------------------------------------------------------
# slab reflection


def test_slab_reflection_against_airy_form():
    # independent transcription: r (1 - q^2) / (1 - r^2 q^2),
    # q^2 = exp(-2 e kappa_m)
    rng = np.random.default_rng(11)
    for _ in range(100):
        eps = float(np.exp(rng.uniform(0.0, 6.0)))
        u = float(rng.uniform(0.0, 5.0))
        kappa = u + float(rng.uniform(1e-3, 5.0))
        e_A = float(rng.uniform(0.02, 5.0))
        w = WaveParams(u, kappa)
        km = math.sqrt(kappa**2 + (eps - 1.0) * u**2)
        q2 = math.exp(-2.0 * e_A * km)
        for pol in Polarization:
            rf = _fresnel_reference(eps, u, kappa, pol)
            want = rf * (1.0 - q2) / (1.0 - rf * rf * q2)
            got = exact.slab_reflection_exact(eps, w, e_A, pol)
            assert got == pytest.approx(want, rel=1e-13, abs=1e-15)


def test_slab_reflection_limits():
    w = WaveParams(0.5, 1.2)
    for pol in Polarization:
        thick = exact.slab_reflection_exact(5.0, w, 300.0, pol)
        bulk = exact.fresnel_bulk(5.0, w, pol)
        assert thick == pytest.approx(bulk, rel=1e-14)
        thin = exact.slab_reflection_exact(5.0, w, 1e-12, pol)
        assert abs(thin) < 1e-10
        # a finite slab never out-reflects the half-space
        mid = exact.slab_reflection_exact(5.0, w, 0.8, pol)
        assert abs(mid) < abs(bulk)
        assert exact.slab_reflection_exact(math.inf, w, 0.7, pol) == -1.0


def test_slab_reflection_summed_te_closed_form():
    m = MaterialModel.static_alpha(0.004, n_v=3.0)
    for u, kappa, e_A in ((0.3, 0.9, 0.5), (2.0, 2.5, 1.5)):
        w = WaveParams(u, kappa)
        got = exact.slab_reflection_summed(m, w, e_A, Polarization.TE)
        want = (3.0 * math.pi * u**2 * 0.004 / kappa**2
                * math.expm1(-2.0 * kappa * e_A))
        assert got == pytest.approx(want, rel=1e-14)


def test_slab_reflection_summed_te_vanishes_at_kappa_zero():
    w = WaveParams(0.0, 0.0)
    m = MaterialModel.static_alpha(0.004)
    assert exact.slab_reflection_summed(m, w, 1.0, Polarization.TE) == 0.0


def test_slab_reflection_summed_tm_needs_positive_u():
    m = MaterialModel.static_alpha(0.004)
    with pytest.raises(ValueError):
        exact.slab_reflection_summed(m, WaveParams(0.0, 1.0),
                                     1.0, Polarization.TM)
    # away from u = 0 the TM branch is well defined and negative
    v = exact.slab_reflection_summed(m, WaveParams(0.5, 1.0), 1.0,
                                     Polarization.TM)
    assert v < 0.0


def test_thin_slab_first_order_contract():
    w = WaveParams(0.5, 1.0)
    with pytest.raises(ValueError):
        exact.thin_slab_first_order("exact", w, Polarization.TE)
    with pytest.raises(ValueError):
        exact.thin_slab_first_order("summed", w, Polarization.TE,
                                    eps=2.0)
    with pytest.raises(ValueError):
        exact.thin_slab_first_order("bogus", w, Polarization.TE, eps=2.0)
    with pytest.raises(ValueError):
        exact.thin_slab_first_order("exact", WaveParams(0.0, 0.0),
                                    Polarization.TE, eps=2.0)


# ---------------------------------------------------------------------------
# atom-plate / atom-slab energies


def _J_oracle(eps: float) -> float:
    def f(t):
        km = math.sqrt(1.0 + (eps - 1.0) * t * t)
        rte = (1.0 - km) / (1.0 + km)
        rtm = (km - eps) / (km + eps)
        return t * t * rte + (2.0 - t * t) * rtm

    return quad(f, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13)[0]


@pytest.mark.parametrize("eps,L", [(2.0, 1.0), (11.87, 1.0),
                                   (100.0, 0.7)])
def test_atom_plate_against_1d_reduction(eps, L):
    aB = 0.013
    probe = MaterialModel.static_alpha(aB)
    got = exact.exact_atom_plate(probe, MaterialModel.static(eps), L,
                                 cfg=CFG).value
    want = 3.0 * aB / (16.0 * math.pi * L**4) * _J_oracle(eps)
    assert got == pytest.approx(want, rel=1e-9)


def test_atom_plate_mirror_anchor():
    aB = 0.02
    probe = MaterialModel.static_alpha(aB)
    mirror = MaterialModel.perfect_mirror()
    for L in (1.0, 2.0):
        got = exact.exact_atom_plate(probe, mirror, L, cfg=CFG).value
        assert got == pytest.approx(-3.0 * aB / (8.0 * math.pi * L**4),
                                    rel=1e-10)


def test_atom_slab_limits():
    probe = MaterialModel.static_alpha(0.02)
    slab_mat = MaterialModel.static(5.0)
    thick = exact.exact_atom_slab(probe, slab_mat, 1.0, 200.0, cfg=CFG)
    plate = exact.exact_atom_plate(probe, slab_mat, 1.0, cfg=CFG)
    assert thick.value == pytest.approx(plate.value, rel=1e-9)
    # thin limit: linear in thickness
    u1 = exact.exact_atom_slab(probe, slab_mat, 1.0, 2e-7, cfg=CFG).value
    u2 = exact.exact_atom_slab(probe, slab_mat, 1.0, 1e-7, cfg=CFG).value
    assert u1 / u2 == pytest.approx(2.0, rel=1e-5)


# ---------------------------------------------------------------------------
# plate-plate / slab-slab energies


def _li4(q: float) -> float:
    n = np.arange(1, 20001, dtype=float)
    return float(np.sum(q**n / n**4))


def _pp_oracle(eps: float, L: float) -> float:
    def f(t):
        km = math.sqrt(1.0 + (eps - 1.0) * t * t)
        rte = (1.0 - km) / (1.0 + km)
        rtm = (km - eps) / (km + eps)
        return _li4(rte * rte) + _li4(rtm * rtm)

    val = quad(f, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13)[0]
    return -val / (16.0 * math.pi**2 * L**3)


@pytest.mark.parametrize("eps,L", [(2.0, 1.0), (10.0, 1.0),
                                   (100.0, 1.3)])
def test_plate_plate_against_1d_reduction(eps, L):
    got = exact.exact_plate_plate(MaterialModel.static(eps), L,
                                  cfg=CFG).value
    assert got == pytest.approx(_pp_oracle(eps, L), rel=1e-9)


def test_plate_plate_mirror_anchor():
    mirror = MaterialModel.perfect_mirror()
    for L in (1.0, 3.0):
        got = exact.exact_plate_plate(mirror, L, cfg=CFG).value
        assert got == pytest.approx(-math.pi**2 / (720.0 * L**3),
                                    rel=1e-10)


def test_slab_slab_limits_and_symmetry():
    mat = MaterialModel.static(5.0)
    sym_a = exact.exact_slab_slab(mat, 1.0, 0.4, 1.1, cfg=CFG).value
    sym_b = exact.exact_slab_slab(mat, 1.0, 1.1, 0.4, cfg=CFG).value
    assert sym_a == pytest.approx(sym_b, rel=1e-10)
    # finite-thickness corrections die off cubically in 1/(1+e), so a
    # very thick slab is needed to reach the half-space answer
    thick = exact.exact_slab_slab(mat, 1.0, 1500.0, 1500.0, cfg=CFG).value
    pp = exact.exact_plate_plate(mat, 1.0, cfg=CFG).value
    assert thick == pytest.approx(pp, rel=1e-8)


def test_single_roundtrip_fraction():
    # ideal mirrors: the one-roundtrip term carries exactly 1/zeta(4)
    # of the full multiple-scattering energy
    mirror = MaterialModel.perfect_mirror()
    full = exact.exact_plate_plate(mirror, 1.0, cfg=CFG).value
    single = exact.exact_plate_plate(mirror, 1.0, cfg=CFG,
                                     single_roundtrip=True).value
    assert single / full == pytest.approx(1.0 / ZETA4, rel=1e-10)
    assert abs(single) < abs(full)
    # weak dielectric: multiple scattering is a sub-percent correction
    weak = MaterialModel.static(2.0)
    full = exact.exact_plate_plate(weak, 1.0, cfg=CFG).value
    single = exact.exact_plate_plate(weak, 1.0, cfg=CFG,
                                     single_roundtrip=True).value
    assert 0.0 < 1.0 - single / full < 0.05


# ---------------------------------------------------------------------------
# reflection-path identity and dilute limit


def test_pws_via_reflection_equals_volume_pws():
    m = MaterialModel.static_alpha(0.01)
    ref = exact.pws_via_reflection(m, m, 1.0, 1.0).value
    vol = pws.pws_atom_slab(m, m, 1.0, 1.0).value
    assert ref == pytest.approx(vol, rel=1e-10)
    mL = MaterialModel.lorentz_alpha(0.02, 1.0, n_v=2.0)
    mB = MaterialModel.lorentz_eps(5.0, 2.0)
    ref = exact.pws_via_reflection(mL, mB, 1.0, 0.7).value
    vol = pws.pws_atom_slab(mL, mB, 1.0, 0.7).value
    assert ref == pytest.approx(vol, rel=1e-10)


def test_dilute_exact_equals_summed_spot():
    nv = 1.0
    a = 1e-3 / (4.0 * math.pi * nv)
    eps = 1.0 + 1e-3
    m = MaterialModel.static_alpha(a, n_v=nv)
    w = WaveParams(0.8, 1.7)
    for pol in Polarization:
        r_e = exact.slab_reflection_exact(eps, w, 0.9, pol)
        r_s = exact.slab_reflection_summed(m, w, 0.9, pol)
        assert r_s == pytest.approx(r_e, rel=1e-3)
