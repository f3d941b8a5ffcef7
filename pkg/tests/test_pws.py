"""Pairwise-summation energies: closed forms, oracle, frozen references.

The three FROZEN_* constants are 60-digit mpmath evaluations of the
same integrals (closed-form primitive combinations under mp.quad with
exact-rational material responses), computed independently of the
package quadrature.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_pws import pws
from casimir_pws.materials import MaterialModel, alpha_from_eps_cm
from casimir_pws.pws import EnergyResult, GeometrySpec
from casimir_pws.quadrature import QuadratureConfig

MA = MaterialModel.static_alpha(0.01, n_v=1.0)
MB = MaterialModel.static_alpha(0.02, n_v=2.0)

# mpmath references (60 digits, mp.quad over split panels)
FROZEN_ATOM_SLAB_LORENTZ = -0.0017668028806758409702
FROZEN_ATOM_ATOM_LORENTZ = -2.9757921053032687508e-6
FROZEN_SPHERE_SLAB_LORENTZ = -0.00041192315940120275338


# ---------------------------------------------------------------------------
# static limit: quadrature path vs closed form, all seven geometries


def _geometries():
    return [
        GeometrySpec.atom_atom(1.3),
        GeometrySpec.atom_slab(1.0, 0.7),
        GeometrySpec.atom_plate(0.8),
        GeometrySpec.slab_slab(1.0, 0.5, 2.0),
        GeometrySpec.plate_plate(1.2),
        GeometrySpec.sphere_slab(2.0, 0.8, 1.5),
        GeometrySpec.sphere_plate(2.5, 1.0),
    ]


def _quadrature_energy(g: GeometrySpec) -> EnergyResult:
    fn = {
        "atom-atom": lambda: pws.vdw_atom_atom(MA, MB, g.d),
        "atom-slab": lambda: pws.pws_atom_slab(MA, MB, g.L, g.e_A),
        "atom-plate": lambda: pws.pws_atom_plate(MA, MB, g.L),
        "slab-slab": lambda: pws.pws_slab_slab(MA, MB, g.L, g.e_A, g.e_B),
        "plate-plate": lambda: pws.pws_plate_plate(MA, MB, g.L),
        "sphere-slab": lambda: pws.pws_sphere_slab(MA, MB, g.L_center,
                                                   g.R, g.e_A),
        "sphere-plate": lambda: pws.pws_sphere_plate(MA, MB, g.L_center,
                                                     g.R),
    }
    return fn[g.kind]()


@pytest.mark.parametrize("g", _geometries(), ids=lambda g: g.kind)
def test_static_quadrature_matches_long_range_closed_form(g):
    got = _quadrature_energy(g)
    want = pws.pws_long_range(MA, MB, g)
    assert got.converged
    assert got.value == pytest.approx(want.value, rel=1e-11)
    assert got.per_unit == want.per_unit == g.per_unit
    assert got.value < 0.0  # attraction throughout


def test_long_range_anchor_atom_atom():
    g = GeometrySpec.atom_atom(2.0)
    want = -23.0 * 0.01 * 0.02 / (4.0 * math.pi * 2.0**7)
    assert pws.pws_long_range(MA, MB, g).value == pytest.approx(
        want, rel=1e-15)


def test_long_range_anchor_sphere_slab():
    Lc, R, e = 2.0, 0.8, 1.5
    g = GeometrySpec.sphere_slab(Lc, R, e)
    pref = -(23.0 / 30.0) * math.pi * R**3 * MA.n_v * MB.n_v * 0.01 * 0.02
    want = pref * ((Lc**2 - R**2) ** -2 - ((Lc + e) ** 2 - R**2) ** -2)
    assert pws.pws_long_range(MA, MB, g).value == pytest.approx(
        want, rel=1e-15)


# ---------------------------------------------------------------------------
# frozen dispersive references


def test_frozen_atom_slab_lorentz():
    mA = MaterialModel.lorentz_alpha(0.02, 1.0, n_v=2.0)
    mB = MaterialModel.lorentz_eps(5.0, 2.0)
    got = pws.pws_atom_slab(mA, mB, 1.0, 1.0)
    assert got.value == pytest.approx(FROZEN_ATOM_SLAB_LORENTZ, rel=1e-12)


def test_frozen_atom_atom_lorentz():
    m1 = MaterialModel.lorentz_alpha(0.01, 1.0)
    m2 = MaterialModel.lorentz_alpha(0.03, 3.0)
    got = pws.vdw_atom_atom(m1, m2, 2.0)
    assert got.value == pytest.approx(FROZEN_ATOM_ATOM_LORENTZ, rel=1e-12)


def test_frozen_sphere_slab_lorentz():
    mA = MaterialModel.lorentz_alpha(0.02, 1.0, n_v=2.0)
    mB = MaterialModel.lorentz_eps(5.0, 2.0)
    got = pws.pws_sphere_slab(mA, mB, 2.0, 0.8, 1.5)
    assert got.value == pytest.approx(FROZEN_SPHERE_SLAB_LORENTZ,
                                      rel=1e-10)


# ---------------------------------------------------------------------------
# atom-atom asymptotics


def test_vdw_london_limit():
    # d << 1/u_res: U -> -(3/4) u_res a0^2 / d^6 for identical atoms
    m = MaterialModel.lorentz_alpha(0.05, 2.0)
    d = 5e-4
    got = pws.vdw_atom_atom(m, m, d).value
    london = -0.75 * 2.0 * 0.05**2 / d**6
    assert got == pytest.approx(london, rel=5e-3)


def test_vdw_retarded_limit():
    # d >> 1/u_res: U -> -23 a0^2/(4 pi d^7) with static polarizability
    m = MaterialModel.lorentz_alpha(0.05, 2.0)
    d = 600.0
    got = pws.vdw_atom_atom(m, m, d).value
    retarded = -23.0 * 0.05**2 / (4.0 * math.pi * d**7)
    assert got == pytest.approx(retarded, rel=5e-3)


def test_vdw_static_closed_form():
    for d in (0.5, 1.0, 2.0):
        got = pws.vdw_atom_atom(MA, MB, d).value
        assert got == pytest.approx(
            -23.0 * 0.01 * 0.02 / (4.0 * math.pi * d**7), rel=1e-12)


# ---------------------------------------------------------------------------
# geometry limits and symmetries


def test_sphere_slab_thick_limit_is_sphere_plate():
    thick = pws.pws_sphere_slab(MA, MB, 2.0, 0.8, 400.0).value
    plate = pws.pws_sphere_plate(MA, MB, 2.0, 0.8).value
    assert thick == pytest.approx(plate, rel=1e-8)


def test_atom_slab_thick_limit_is_atom_plate():
    thick = pws.pws_atom_slab(MA, MB, 1.0, 500.0).value
    plate = pws.pws_atom_plate(MA, MB, 1.0).value
    assert thick == pytest.approx(plate, rel=1e-10)


def test_slab_slab_symmetric_in_thicknesses():
    a = pws.pws_slab_slab(MA, MB, 1.0, 0.4, 2.5).value
    b = pws.pws_slab_slab(MA, MB, 1.0, 2.5, 0.4).value
    assert a == b  # the combination is identical term by term


def test_thin_slab_linearity():
    # U(e) -> e * dU/de as e -> 0: halving a thin slab halves the energy
    u1 = pws.pws_atom_slab(MA, MB, 1.0, 2e-7).value
    u2 = pws.pws_atom_slab(MA, MB, 1.0, 1e-7).value
    assert u1 / u2 == pytest.approx(2.0, rel=1e-6)


def test_energy_decays_with_separation():
    prev = -math.inf
    for L in (0.5, 1.0, 2.0, 4.0):
        v = pws.pws_plate_plate(MA, MB, L).value
        assert v < 0.0 and v > prev
        prev = v


# ---------------------------------------------------------------------------
# volume oracle


def test_oracle_atom_slab():
    for L, e in ((1.0, 1.0), (0.7, 2.3)):
        got = pws.pws_atom_slab(MA, MB, L, e).value
        ora = pws.oracle_pws(MA, MB, GeometrySpec.atom_slab(L, e))
        assert ora.converged
        assert got == pytest.approx(ora.value, rel=1e-6)


def test_oracle_slab_slab():
    g = GeometrySpec.slab_slab(1.0, 0.5, 2.0)
    got = pws.pws_slab_slab(MA, MB, 1.0, 0.5, 2.0).value
    assert got == pytest.approx(pws.oracle_pws(MA, MB, g).value, rel=1e-6)


def test_oracle_spheres():
    g = GeometrySpec.sphere_slab(2.0, 0.8, 1.5)
    got = pws.pws_sphere_slab(MA, MB, 2.0, 0.8, 1.5).value
    assert got == pytest.approx(pws.oracle_pws(MA, MB, g).value, rel=1e-6)
    g = GeometrySpec.sphere_plate(2.5, 1.0)
    got = pws.pws_sphere_plate(MA, MB, 2.5, 1.0).value
    assert got == pytest.approx(pws.oracle_pws(MA, MB, g).value, rel=1e-6)


def test_oracle_truncated_bulk():
    # half-space oracles integrate a finite depth: 1e-5-level agreement
    got = pws.pws_atom_plate(MA, MB, 1.0).value
    ora = pws.oracle_pws(MA, MB, GeometrySpec.atom_plate(1.0)).value
    assert got == pytest.approx(ora, rel=1e-5)
    got = pws.pws_plate_plate(MA, MB, 1.0).value
    ora = pws.oracle_pws(MA, MB, GeometrySpec.plate_plate(1.0)).value
    assert got == pytest.approx(ora, rel=2e-5)


def test_oracle_dispersive_spot():
    # one non-static point exercises the full nested path
    mA = MaterialModel.lorentz_alpha(0.02, 1.0, n_v=2.0)
    mB = MaterialModel.lorentz_eps(5.0, 2.0)
    got = pws.pws_atom_slab(mA, mB, 1.0, 1.0).value
    ora = pws.oracle_pws(mA, mB, GeometrySpec.atom_slab(1.0, 1.0),
                         cfg=QuadratureConfig(rel_tol=1e-7)).value
    assert got == pytest.approx(ora, rel=1e-5)


def test_oracle_atom_atom_is_the_same_integral():
    g = GeometrySpec.atom_atom(1.3)
    direct = pws.vdw_atom_atom(MA, MB, 1.3)
    ora = pws.oracle_pws(MA, MB, g)
    assert ora.value == direct.value  # same quadrature, relabeled
    assert ora.method != direct.method


# ---------------------------------------------------------------------------
# GeometrySpec contract


def test_geometry_validation():
    with pytest.raises(ValueError):
        GeometrySpec.atom_slab(0.0, 1.0)
    with pytest.raises(ValueError):
        GeometrySpec.atom_slab(1.0, -0.5)
    with pytest.raises(ValueError):
        GeometrySpec.sphere_plate(1.0, 1.0)  # touching surface
    with pytest.raises(ValueError):
        GeometrySpec.sphere_slab(0.5, 0.8, 1.0)  # interpenetrating
    with pytest.raises(ValueError):
        GeometrySpec(kind="hexagon-plate", L=1.0)


def test_geometry_per_unit_and_fields():
    assert GeometrySpec.plate_plate(1.0).per_unit == "per-area"
    assert GeometrySpec.slab_slab(1.0, 1.0, 1.0).per_unit == "per-area"
    assert GeometrySpec.atom_plate(1.0).per_unit == "total"
    assert GeometrySpec.sphere_plate(2.0, 1.0).per_unit == "total"
    g = GeometrySpec.sphere_slab(2.0, 0.5, 1.5)
    assert (g.L_center, g.R, g.e_A) == (2.0, 0.5, 1.5)


def test_energy_result_fields():
    res = pws.pws_plate_plate(MA, MB, 1.0)
    assert res.per_unit == "per-area"
    assert res.method == "PWS-closed-form"
    assert res.quadrature is not None and res.quadrature.evaluations > 0
    lr = pws.pws_long_range(MA, MB, GeometrySpec.plate_plate(1.0))
    assert lr.method == "PWS-long-range"
    assert lr.quadrature is None and lr.converged


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=30, deadline=None)
@given(L=st.floats(min_value=0.3, max_value=5.0),
       e=st.floats(min_value=0.05, max_value=20.0))
def test_property_slab_bracketed_by_plate(L, e):
    # 0 > U_slab > U_plate: a finite slab binds less than a half-space
    slab = pws.pws_atom_slab(MA, MB, L, e).value
    plate = pws.pws_atom_plate(MA, MB, L).value
    assert plate < slab < 0.0


@settings(max_examples=30, deadline=None)
@given(eps=st.floats(min_value=1.01, max_value=1e4))
def test_property_long_range_scaling_in_eps(eps):
    # atom-plate long-range energy scales as n a(eps); ratio of two
    # permittivities equals the ratio of their CM polarizabilities
    m1 = MaterialModel.static(eps)
    m2 = MaterialModel.static(2.0)
    g = GeometrySpec.atom_plate(1.0)
    r = (pws.pws_long_range(m1, MB, g).value
         / pws.pws_long_range(m2, MB, g).value)
    want = alpha_from_eps_cm(eps, 1.0).a / alpha_from_eps_cm(2.0, 1.0).a
    assert r == pytest.approx(want, rel=1e-12)
