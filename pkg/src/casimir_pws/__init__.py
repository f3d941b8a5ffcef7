"""Casimir / van der Waals interaction energies: pairwise summation vs exact.

Computes atom-surface and surface-surface dispersion energies two ways --
by pairwise summation (PWS) over atomic constituents and by the exact
scattering/Lifshitz formulas -- and quantifies the error of the pairwise
approximation as ratio curves in permittivity, slab thickness, and sphere
size.  Reduced units hbar = c = 1 throughout; all lengths in one common
unit fixed by the caller.

Layout
------
``materials``   response models (permittivity / polarizability on the
                imaginary frequency axis, Clausius-Mossotti conversions)
``quadrature``  adaptive Gauss-Kronrod integration (finite, semi-
                infinite, and the (u, kappa >= u) wedge)
``specfun``     the exponential-integral primitive family behind the
                closed-form pairwise sums
``pws``         closed-form pairwise-summation energies + volume oracle
``exact``       Fresnel/slab reflection coefficients, Casimir-Polder
                and Lifshitz energies, the reflection-path identity
``ratios``      PWS/exact ratio curves and extremum search
``validation``  the twelve-criterion quantitative self-check suite
``cli``         the ``casimir-pws`` command-line front end
"""

from ._backend import BACKEND_NAME
from .exact import (
    Polarization,
    WaveParams,
    exact_atom_plate,
    exact_atom_slab,
    exact_plate_plate,
    exact_slab_slab,
    fresnel_bulk,
    pws_via_reflection,
    slab_reflection_exact,
    slab_reflection_summed,
    thin_slab_first_order,
)
from .materials import (
    MaterialModel,
    PolarizationCatastropheError,
    alpha_from_eps_cm,
    alpha_iu,
    eps_from_alpha_cm,
    eps_iu,
)
from .pws import (
    EnergyResult,
    GeometrySpec,
    GEOMETRY_KINDS,
    oracle_pws,
    pws_atom_plate,
    pws_atom_slab,
    pws_long_range,
    pws_plate_plate,
    pws_slab_slab,
    pws_sphere_plate,
    pws_sphere_slab,
    vdw_atom_atom,
)
from .quadrature import (
    EvaluationError,
    IntegralResult,
    QuadratureConfig,
    integrate_2d_wedge,
    integrate_finite,
    integrate_semi_infinite,
)
from .ratios import (
    RatioPoint,
    SweepSpec,
    default_eps_grid,
    find_extremum,
    ratio_atom_plate_lr,
    ratio_atom_slab_lr,
    ratio_plate_plate_lr,
    ratio_slab_slab_lr,
    ratio_sphere_pws_limits,
    sweep_eps,
    sweep_thickness,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "__version__",
    # materials
    "MaterialModel",
    "PolarizationCatastropheError",
    "alpha_from_eps_cm",
    "alpha_iu",
    "eps_from_alpha_cm",
    "eps_iu",
    # quadrature
    "EvaluationError",
    "IntegralResult",
    "QuadratureConfig",
    "integrate_2d_wedge",
    "integrate_finite",
    "integrate_semi_infinite",
    # pws
    "EnergyResult",
    "GeometrySpec",
    "GEOMETRY_KINDS",
    "oracle_pws",
    "pws_atom_plate",
    "pws_atom_slab",
    "pws_long_range",
    "pws_plate_plate",
    "pws_slab_slab",
    "pws_sphere_plate",
    "pws_sphere_slab",
    "vdw_atom_atom",
    # exact
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
    "thin_slab_first_order",
    # ratios
    "RatioPoint",
    "SweepSpec",
    "default_eps_grid",
    "find_extremum",
    "ratio_atom_plate_lr",
    "ratio_atom_slab_lr",
    "ratio_plate_plate_lr",
    "ratio_slab_slab_lr",
    "ratio_sphere_pws_limits",
    "sweep_eps",
    "sweep_thickness",
]
