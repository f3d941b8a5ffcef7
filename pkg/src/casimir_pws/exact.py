"""Scattering-formula dispersion energies.

Exact interaction energies at zero temperature from reflection
coefficients on the imaginary-frequency axis: Fresnel coefficients of
a bulk half-space, finite-slab coefficients (exact multilayer form,
the first-order-in-reflection "summed" form, and their thin-slab
linearizations), the atom-plate/atom-slab integral, the plate-plate /
slab-slab Lifshitz formula, and a reflection-path re-derivation of the
pairwise-summation energy that the test suite checks against the
volume-integral implementation.

Conventions: reduced units hbar = c = 1; u is the imaginary frequency,
kappa >= u the longitudinal imaginary wavevector in vacuum,
k = sqrt(kappa^2 - u^2) the transverse modulus, and
kappa_m = sqrt(eps u^2 + k^2) its in-medium counterpart.  All energies
are normalized so attraction is negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .materials import MaterialModel, alpha_iu, eps_iu
from .pws import EnergyResult
from .quadrature import QuadratureConfig, integrate_2d_wedge

__all__ = [
    "Polarization",
    "WaveParams",
    "exact_atom_plate",
    "exact_atom_slab",
    "exact_plate_plate",
    "exact_slab_slab",
    "fresnel_bulk",
    "pws_via_reflection",
    "slab_reflection_exact",
    "slab_reflection_summed",
    "slab_reflection_summed_u2tm",
    "thin_slab_first_order",
]

ArrayLike = Union[float, np.ndarray]


class Polarization(str, Enum):
    """Field polarization relative to the plane of incidence."""

    TE = "TE"
    TM = "TM"


@dataclass(frozen=True)
class WaveParams:
    """Imaginary-frequency wave parameters (u, kappa), scalar or array.

    Invariants: kappa >= u >= 0, and kappa_m(eps) >= kappa for eps >= 1.
    """

    u: ArrayLike
    kappa: ArrayLike

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float)
        kap = np.asarray(self.kappa, dtype=float)
        if np.any(u < 0.0):
            raise ValueError("imaginary frequency u must be >= 0")
        if np.any(kap < u):
            raise ValueError("kappa must be >= u (propagation wedge)")

    @property
    def k(self) -> ArrayLike:
        """Transverse modulus sqrt(kappa^2 - u^2), cancellation-safe."""
        return np.sqrt((self.kappa - self.u) * (self.kappa + self.u))

    def kappa_m(self, eps: float) -> ArrayLike:
        """In-medium wavevector sqrt(eps u^2 + k^2) for finite eps >= 1."""
        return np.sqrt(self.kappa**2 + (eps - 1.0) * np.square(self.u))


def _neg_one_like(w: WaveParams) -> ArrayLike:
    shape = np.broadcast(np.asarray(w.u), np.asarray(w.kappa)).shape
    return -1.0 if shape == () else np.full(shape, -1.0)


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not eps >= 1.0:
        raise ValueError(f"permittivity on the imaginary axis must be >= 1, "
                         f"got {eps}")
    return eps


def fresnel_bulk(eps: float, w: WaveParams, p: Polarization) -> ArrayLike:
    """Fresnel reflection coefficient of a bulk half-space.

    r_TE = (kappa - kappa_m)/(kappa + kappa_m) and
    r_TM = (kappa_m - eps*kappa)/(eps*kappa + kappa_m), evaluated in the
    subtraction-free equivalent forms

        r_TE = -(eps-1) u^2 / (kappa + kappa_m)^2,
        r_TM = (1-eps) (k^2 + kappa*kappa_m)
               / ((kappa_m + kappa)(eps*kappa + kappa_m)),

    which are exact rearrangements (multiply numerator and denominator
    by the conjugate) and stay fully accurate as eps -> 1.  Both lie in
    [-1, 0] for eps >= 1; eps = inf gives the perfect-mirror value -1.
    """
    eps = _check_eps(eps)
    if math.isinf(eps):
        return _neg_one_like(w)
    u = np.asarray(w.u, dtype=float)
    kap = np.asarray(w.kappa, dtype=float)
    km = w.kappa_m(eps)
    if p == Polarization.TE:
        return -(eps - 1.0) * u * u / (kap + km) ** 2
    k2 = (kap - u) * (kap + u)
    return (1.0 - eps) * (k2 + kap * km) / ((km + kap) * (eps * kap + km))


def slab_reflection_exact(eps: float, w: WaveParams, e_A: float,
                          p: Polarization) -> ArrayLike:
    """Reflection coefficient of a slab of thickness e_A (exact).

    Multilayer (round-trip-summed) form r_f (1 - q^2)/(1 - r_f^2 q^2)
    with q = exp(-e_A kappa_m), equivalent to
    -sinh(eta)/sinh(eta + theta) with eta = e_A kappa_m and
    r_f = -exp(-theta).  Recovers fresnel_bulk as e_A -> inf and
    vanishes linearly as e_A -> 0.
    """
    if not e_A > 0.0:
        raise ValueError("slab thickness e_A must be > 0")
    eps = _check_eps(eps)
    if math.isinf(eps):
        return _neg_one_like(w)
    r_f = fresnel_bulk(eps, w, p)
    two_eta = 2.0 * e_A * w.kappa_m(eps)
    q2 = np.exp(-two_eta)
    return r_f * (-np.expm1(-two_eta)) / (1.0 - r_f * r_f * q2)


def slab_reflection_summed(mA: MaterialModel, w: WaveParams, e_A: float,
                           p: Polarization) -> ArrayLike:
    """First-order-in-reflection slab coefficient from the volume sum.

    r_TE = n_v pi u^2 a_A (e^{-2 kappa e_A} - 1)/kappa^2 and
    r_TM = r_TE (1 + 2 k^2/u^2).  Unlike the exact coefficient this is
    not bounded by 1 for dense media; it agrees with the linearized
    exact coefficient in the dilute limit eps - 1 = 4 pi n_v a -> 0.

    The TM form diverges pointwise as u -> 0 at fixed k; energy
    integrands must use the combined helper
    :func:`slab_reflection_summed_u2tm` (the u^2 response prefactor
    makes the singularity removable), so u = 0 raises here for TM.
    """
    if not e_A > 0.0:
        raise ValueError("slab thickness e_A must be > 0")
    u = np.asarray(w.u, dtype=float)
    kap = np.asarray(w.kappa, dtype=float)
    if p == Polarization.TM and np.any(u == 0.0):
        raise ValueError(
            "summed TM coefficient diverges at u = 0; use "
            "slab_reflection_summed_u2tm for the combined u^2 r_TM form"
        )
    a_A = alpha_iu(mA, u)
    with np.errstate(divide="ignore", invalid="ignore"):
        r_te = (mA.n_v * math.pi * u * u * a_A
                * np.expm1(-2.0 * kap * e_A) / (kap * kap))
        r_te = np.where(kap == 0.0, 0.0, r_te)
        if p == Polarization.TE:
            return r_te if r_te.ndim else float(r_te)
        k2 = (kap - u) * (kap + u)
        r_tm = r_te * (1.0 + 2.0 * k2 / (u * u))
    return r_tm if r_tm.ndim else float(r_tm)


def slab_reflection_summed_u2tm(mA: MaterialModel, w: WaveParams,
                                e_A: float) -> ArrayLike:
    """u^2 * r_TM for the summed coefficient, finite at u = 0.

    n_v pi a_A (e^{-2 kappa e_A} - 1) (u^2 + 2 k^2)/kappa^2; the
    removable u -> 0 singularity of r_TM is absorbed by the u^2
    response factor that always accompanies it in energy integrands.
    """
    if not e_A > 0.0:
        raise ValueError("slab thickness e_A must be > 0")
    u = np.asarray(w.u, dtype=float)
    kap = np.asarray(w.kappa, dtype=float)
    a_A = alpha_iu(mA, u)
    k2 = (kap - u) * (kap + u)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (mA.n_v * math.pi * a_A * np.expm1(-2.0 * kap * e_A)
               * (u * u + 2.0 * k2) / (kap * kap))
        out = np.where(kap == 0.0, 0.0, out)
    return out if out.ndim else float(out)


def thin_slab_first_order(source: str, w: WaveParams, p: Polarization, *,
                          eps: Optional[float] = None,
                          mA: Optional[MaterialModel] = None) -> ArrayLike:
    """Linear-in-thickness coefficient c with r ~ c * e_A as e_A -> 0.

    source="summed": c_TE = -2 pi n_v a u^2/kappa,
                     c_TM = -2 pi n_v a (u^2 + 2 k^2)/kappa (needs mA);
    source="exact":  c_TE = -(eps-1) u^2/(2 kappa),
                     c_TM = -(eps-1)(u^2 + ((eps+1)/eps) k^2)/(2 kappa)
                     (needs eps).

    The TE pair coincide exactly when eps - 1 = 4 pi n_v a; the TM pair
    additionally require (eps+1)/eps = 2, i.e. only as eps -> 1.
    """
    u = np.asarray(w.u, dtype=float)
    kap = np.asarray(w.kappa, dtype=float)
    if np.any(kap == 0.0):
        raise ValueError("thin-slab coefficients require kappa > 0")
    k2 = (kap - u) * (kap + u)
    if source == "summed":
        if mA is None:
            raise ValueError("source='summed' requires the material mA")
        a_A = alpha_iu(mA, u)
        base = -2.0 * math.pi * mA.n_v * a_A / kap
        out = base * u * u if p == Polarization.TE else base * (u * u
                                                                + 2.0 * k2)
    elif source == "exact":
        if eps is None:
            raise ValueError("source='exact' requires the permittivity eps")
        eps = _check_eps(eps)
        if p == Polarization.TE:
            out = -(eps - 1.0) * u * u / (2.0 * kap)
        else:
            out = (-(eps - 1.0) * (u * u + (eps + 1.0) / eps * k2)
                   / (2.0 * kap))
    else:
        raise ValueError("source must be 'summed' or 'exact'")
    return out if np.ndim(out) else float(out)


# ----------------------------------------------------------------------
# energies
# ----------------------------------------------------------------------

def _require_positive(**lengths):
    for name, v in lengths.items():
        if not float(v) > 0.0:
            raise ValueError(f"{name} must be > 0, got {v!r}")


def _atom_reflection_energy(mB: MaterialModel, reflection, L: float,
                            cfg: Optional[QuadratureConfig],
                            method: str = "exact") -> EnergyResult:
    """(1/2pi) int du a_B int_u^inf dkappa e^{-2 kappa L}
    [u^2 r_TE + (2 kappa^2 - u^2) r_TM], with ``reflection(u, w, p)``
    supplying the plate coefficients.  The combined bracket keeps the
    u -> 0 corner finite; attraction comes out negative.
    """
    cfg = (cfg or QuadratureConfig())._replace(decay_scale=2.0 * L)

    def f(u, kappa):
        w = WaveParams(u, kappa)
        r_te = reflection(u, w, Polarization.TE)
        r_tm = reflection(u, w, Polarization.TM)
        bracket = u * u * r_te + (2.0 * kappa * kappa - u * u) * r_tm
        return (alpha_iu(mB, u) / (2.0 * math.pi)
                * np.exp(-2.0 * kappa * L) * bracket)

    quad = integrate_2d_wedge(f, cfg)
    return EnergyResult(quad.value, "total", method, quad)


def exact_atom_plate(mB: MaterialModel, eps_model: MaterialModel, L: float,
                     cfg: Optional[QuadratureConfig] = None) -> EnergyResult:
    """Exact atom-plate energy: atom B at distance L from a bulk
    half-space described by eps_model's permittivity on the imaginary
    axis.  Negative (attractive); zero when eps = 1 identically.
    """
    _require_positive(L=L)
    if eps_model.is_perfect_mirror:
        def reflection(u, w, p):
            return _neg_one_like(w)
    else:
        def reflection(u, w, p):
            return fresnel_bulk(float(eps_iu(eps_model, u)), w, p)
    return _atom_reflection_energy(mB, reflection, L, cfg)


def exact_atom_slab(mB: MaterialModel, eps_model: MaterialModel, L: float,
                    e_A: float,
                    cfg: Optional[QuadratureConfig] = None) -> EnergyResult:
    """Exact atom-slab energy: the atom-plate integral with the slab's
    thickness-dependent reflection coefficients.  Recovers
    exact_atom_plate as e_A -> inf and vanishes as e_A -> 0.
    """
    _require_positive(L=L, e_A=e_A)
    if eps_model.is_perfect_mirror:
        def reflection(u, w, p):
            return _neg_one_like(w)
    else:
        def reflection(u, w, p):
            return slab_reflection_exact(float(eps_iu(eps_model, u)), w,
                                         e_A, p)
    return _atom_reflection_energy(mB, reflection, L, cfg)


def _lifshitz_energy(side_a, side_b, L: float,
                     cfg: Optional[QuadratureConfig],
                     single_roundtrip: bool) -> EnergyResult:
    """(1/4pi^2) int du int_u^inf dkappa kappa sum_p
    ln(1 - r_A^p r_B^p e^{-2 kappa L}) per unit area, with the log
    replaced by its first-order term -r_A r_B e^{-2 kappa L} when
    single_roundtrip is set (one round trip between the surfaces).
    """
    cfg = (cfg or QuadratureConfig())._replace(decay_scale=2.0 * L)

    def f(u, kappa):
        w = WaveParams(u, kappa)
        damp = np.exp(-2.0 * kappa * L)
        total = 0.0
        for p in (Polarization.TE, Polarization.TM):
            x = side_a(u, w, p) * side_b(u, w, p) * damp
            if np.any(x >= 1.0):
                raise AssertionError(
                    "round-trip reflection product reached unity; "
                    "coefficients must satisfy |r_A r_B| < e^{2 kappa L}"
                )
            total = total + (-x if single_roundtrip else np.log1p(-x))
        return kappa * total / (4.0 * math.pi**2)

    quad = integrate_2d_wedge(f, cfg)
    return EnergyResult(quad.value, "per-area", "exact", quad)


def _plate_side(eps_model: MaterialModel, e: Optional[float]):
    if eps_model.is_perfect_mirror:
        return lambda u, w, p: _neg_one_like(w)
    if e is None:
        return lambda u, w, p: fresnel_bulk(float(eps_iu(eps_model, u)), w, p)
    return lambda u, w, p: slab_reflection_exact(
        float(eps_iu(eps_model, u)), w, e, p)


def exact_plate_plate(eps_model: MaterialModel, L: float,
                      cfg: Optional[QuadratureConfig] = None,
                      single_roundtrip: bool = False) -> EnergyResult:
    """Exact energy per unit area of two bulk plates at gap L.

    Perfect mirrors (r^2 = 1) give -pi^2/(720 L^3).  With
    single_roundtrip=True only one reflection round trip is kept,
    quantifying the multiple-reflection content of the full result.
    """
    _require_positive(L=L)
    side = _plate_side(eps_model, None)
    return _lifshitz_energy(side, side, L, cfg, single_roundtrip)


def exact_slab_slab(eps_model: MaterialModel, L: float, e_A: float,
                    e_B: float,
                    cfg: Optional[QuadratureConfig] = None) -> EnergyResult:
    """Exact energy per unit area of two slabs (thicknesses e_A, e_B)
    facing each other at gap L; symmetric in e_A <-> e_B and recovering
    exact_plate_plate as both grow.
    """
    _require_positive(L=L, e_A=e_A, e_B=e_B)
    return _lifshitz_energy(_plate_side(eps_model, e_A),
                            _plate_side(eps_model, e_B), L, cfg, False)


def pws_via_reflection(mA: MaterialModel, mB: MaterialModel, L: float,
                       e_A: float,
                       cfg: Optional[QuadratureConfig] = None) -> EnergyResult:
    """Pairwise-summation atom-slab energy rebuilt on the scattering
    side: the first-order (single-reflection) energy with the summed
    slab coefficients,

        (n_v^A/2) int du a_A a_B int_u^inf dkappa e^{-2 kappa L}
            (e^{-2 kappa e_A} - 1) (u^4 + (2 kappa^2 - u^2)^2)/kappa^2.

    The bracket is u^2 r_TE + (2 kappa^2 - u^2) r_TM with the summed
    coefficients folded in algebraically (finite at the u -> 0 corner).
    Must equal pws_atom_slab to quadrature accuracy; the test suite
    enforces 1e-8.
    """
    _require_positive(L=L, e_A=e_A)
    cfg = (cfg or QuadratureConfig())._replace(decay_scale=2.0 * L)
    half_nv = 0.5 * mA.n_v

    def f(u, kappa):
        resp = alpha_iu(mA, u) * alpha_iu(mB, u)
        core = u**4 + (2.0 * kappa * kappa - u * u) ** 2
        return (half_nv * resp * np.exp(-2.0 * kappa * L)
                * np.expm1(-2.0 * kappa * e_A) * core / (kappa * kappa))

    quad = integrate_2d_wedge(f, cfg)
    return EnergyResult(quad.value, "total", "PWS-closed-form", quad)
