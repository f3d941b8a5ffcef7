"""Material response on the imaginary frequency axis.

Permittivity eps(icu) and reduced polarizability a(icu) = alpha/(4 pi
eps_0) models, plus the Clausius-Mossotti bridge between them.  The
frequency variable u has units of inverse length (omega = i c u, hbar =
c = 1); every model here is real, >= 1 (permittivity) or >= 0
(polarizability), and non-increasing in u, which keeps all energy
integrands smooth and sign-definite.

Supported variants: static permittivity, single-resonance Lorentz
permittivity, static polarizability, single-resonance Lorentz
polarizability, and an idealized perfect mirror (eps -> infinity, used
for closed-form limit checks).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ._kernels_np import _dd_add, _dd_div, _dd_mul

# pi as a double-double pair (the low word is the classic sin(pi_float))
_PI_DD = (3.141592653589793, 1.2246467991473532e-16)

__all__ = [
    "MaterialModel",
    "PolarizationCatastropheError",
    "ReducedPolarizability",
    "alpha_from_eps_cm",
    "alpha_iu",
    "eps_dilute_first_order",
    "eps_from_alpha_cm",
    "eps_iu",
]

_VARIANTS = ("static", "lorentz-eps", "static-alpha", "lorentz-alpha",
             "perfect-mirror")


class PolarizationCatastropheError(ValueError):
    """Clausius-Mossotti inversion requested with (4 pi/3) n_v a >= 1."""


@dataclass(frozen=True)
class ReducedPolarizability:
    """The combination a = alpha/(4 pi eps_0), a volume (>= 0).

    ``a_lo`` is a compensated remainder (|a_lo| <= ulp(a)) kept by
    alpha_from_eps_cm so that the inverse conversion can recover eps to
    machine precision even near Clausius-Mossotti saturation, where
    eps is an ill-conditioned function of the rounded a alone.
    """

    a: Union[float, np.ndarray]
    a_lo: Union[float, np.ndarray] = 0.0

    def __post_init__(self):
        if not np.all(np.asarray(self.a) >= 0.0):
            raise ValueError("reduced polarizability must be >= 0")


def _unwrap(a):
    """(hi, lo) parts of a polarizability given as RP, float, or array."""
    if isinstance(a, ReducedPolarizability):
        return a.a, a.a_lo
    return a, np.zeros_like(np.asarray(a, dtype=float))


@dataclass(frozen=True)
class MaterialModel:
    """One body's response model plus its constituent number density.

    Use the classmethod constructors; ``variant`` selects which of the
    optional fields are meaningful.  ``n_v`` (volume^-1) is the atomic
    number density used by pairwise summation and by Clausius-Mossotti
    conversions; energies are linear in it, and the long-range ratios
    are independent of it.
    """

    variant: str
    eps0: Optional[float] = None
    a0: Optional[float] = None
    u_res: Optional[float] = None
    n_v: float = 1.0

    def __post_init__(self):
        if self.variant not in _VARIANTS:
            raise ValueError(
                f"unknown material variant {self.variant!r}; "
                f"expected one of {_VARIANTS}"
            )
        if not self.n_v > 0.0:
            raise ValueError("number density n_v must be > 0")
        if self.variant in ("static", "lorentz-eps"):
            if self.eps0 is None or not self.eps0 >= 1.0:
                raise ValueError("permittivity models require eps0 >= 1")
        if self.variant in ("static-alpha", "lorentz-alpha"):
            if self.a0 is None or not self.a0 >= 0.0:
                raise ValueError("polarizability models require a0 >= 0")
        if self.variant in ("lorentz-eps", "lorentz-alpha"):
            if self.u_res is None or not self.u_res > 0.0:
                raise ValueError("Lorentz models require u_res > 0")

    @classmethod
    def static(cls, eps0: float, n_v: float = 1.0) -> "MaterialModel":
        """Frequency-independent permittivity eps(icu) = eps0."""
        return cls(variant="static", eps0=float(eps0), n_v=float(n_v))

    @classmethod
    def lorentz_eps(cls, eps0: float, u_res: float,
                    n_v: float = 1.0) -> "MaterialModel":
        """Single-resonance permittivity 1 + (eps0-1)/(1+(u/u_res)^2)."""
        return cls(variant="lorentz-eps", eps0=float(eps0),
                   u_res=float(u_res), n_v=float(n_v))

    @classmethod
    def static_alpha(cls, a0: float, n_v: float = 1.0) -> "MaterialModel":
        """Frequency-independent reduced polarizability a(icu) = a0."""
        return cls(variant="static-alpha", a0=float(a0), n_v=float(n_v))

    @classmethod
    def lorentz_alpha(cls, a0: float, u_res: float,
                      n_v: float = 1.0) -> "MaterialModel":
        """Single-resonance polarizability a0/(1+(u/u_res)^2)."""
        return cls(variant="lorentz-alpha", a0=float(a0),
                   u_res=float(u_res), n_v=float(n_v))

    @classmethod
    def perfect_mirror(cls, n_v: float = 1.0) -> "MaterialModel":
        """Idealized perfect reflector: eps -> infinity at all u.

        The pairwise-summation side uses the Clausius-Mossotti
        saturation value a = 3/(4 pi n_v); the scattering side short-
        circuits to r^TE = r^TM = -1.
        """
        return cls(variant="perfect-mirror", n_v=float(n_v))

    @property
    def is_perfect_mirror(self) -> bool:
        return self.variant == "perfect-mirror"

    @property
    def is_static(self) -> bool:
        """True when the response carries no frequency dependence."""
        return self.variant in ("static", "static-alpha", "perfect-mirror")


def eps_iu(m: MaterialModel, u):
    """Permittivity eps(icu) of model ``m`` at imaginary frequency u >= 0.

    Static variants return eps0 for every u; the Lorentz variant falls
    from eps0 at u=0 to 1 (transparency) as u -> infinity.  Models given
    by a polarizability are converted through Clausius-Mossotti with the
    model's own n_v; the perfect mirror returns +infinity.
    """
    u_arr = np.asarray(u, dtype=float)
    scalar = u_arr.ndim == 0
    if np.any(u_arr < 0.0):
        raise ValueError("imaginary frequency u must be >= 0")
    if m.variant == "static":
        out = np.full_like(u_arr, m.eps0)
    elif m.variant == "lorentz-eps":
        out = 1.0 + (m.eps0 - 1.0) / (1.0 + (u_arr / m.u_res) ** 2)
    elif m.variant == "perfect-mirror":
        out = np.full_like(u_arr, np.inf)
    else:
        out = np.asarray(eps_from_alpha_cm(alpha_iu(m, u_arr), m.n_v))
    return float(out) if scalar else out


def alpha_iu(m: MaterialModel, u):
    """Reduced polarizability a(icu) of ``m``'s constituents at u >= 0.

    Polarizability variants evaluate their model directly; permittivity
    variants convert through Clausius-Mossotti with the model's n_v.
    The perfect mirror returns the saturation value 3/(4 pi n_v).
    """
    u_arr = np.asarray(u, dtype=float)
    scalar = u_arr.ndim == 0
    if np.any(u_arr < 0.0):
        raise ValueError("imaginary frequency u must be >= 0")
    if m.variant == "static-alpha":
        out = np.full_like(u_arr, m.a0)
    elif m.variant == "lorentz-alpha":
        out = m.a0 / (1.0 + (u_arr / m.u_res) ** 2)
    elif m.variant == "perfect-mirror":
        out = np.full_like(u_arr, 3.0 / (4.0 * math.pi * m.n_v))
    else:
        out = np.asarray(alpha_from_eps_cm(eps_iu(m, u_arr), m.n_v).a)
    return float(out) if scalar else out


def _scale_dd(n_v: float):
    """(4 pi/3) n_v as a double-double pair."""
    four_pi = _dd_mul(4.0, 0.0, *_PI_DD)
    third = _dd_div(*four_pi, 3.0, 0.0)
    return _dd_mul(*third, n_v, 0.0)


def alpha_from_eps_cm(eps, n_v: float) -> ReducedPolarizability:
    """Clausius-Mossotti: a = (3/(4 pi n_v)) (eps-1)/(eps+2).

    Includes local-field effects; saturates at 3/(4 pi n_v) as
    eps -> infinity.  Raises on eps < 1.  The result carries a
    compensated remainder (see ReducedPolarizability) so the inverse
    conversion is exact to machine precision even near saturation,
    where the ill-conditioning of eps(a) would otherwise amplify the
    rounding of a by a factor ~eps.
    """
    eps_arr = np.asarray(eps, dtype=float)
    scalar = eps_arr.ndim == 0
    if not n_v > 0.0:
        raise ValueError("n_v must be > 0")
    if not np.all(eps_arr >= 1.0):
        raise ValueError("alpha_from_eps_cm requires eps >= 1")
    finite = np.where(np.isinf(eps_arr), 1.0, eps_arr)
    num = _dd_add(finite, np.zeros_like(finite), -1.0, 0.0)
    den = _dd_add(finite, np.zeros_like(finite), 2.0, 0.0)
    frac = _dd_div(*num, *den)
    frac = tuple(np.where(np.isinf(eps_arr), (1.0, 0.0)[i], frac[i])
                 for i in (0, 1))
    sh, sl = _scale_dd(n_v)
    ah, al = _dd_div(*frac, sh, sl)
    if scalar:
        return ReducedPolarizability(float(ah), float(al))
    return ReducedPolarizability(np.asarray(ah), np.asarray(al))


def eps_from_alpha_cm(a, n_v: float):
    """Inverse Clausius-Mossotti: eps = (1+2y)/(1-y), y = (4 pi/3) n_v a.

    Raises PolarizationCatastropheError when y >= 1 (the local-field
    feedback diverges; no physical permittivity exists).
    """
    if not n_v > 0.0:
        raise ValueError("n_v must be > 0")
    ah, al = _unwrap(a)
    ah = np.asarray(ah, dtype=float)
    al = np.asarray(al, dtype=float)
    yh, yl = _dd_mul(*_scale_dd(n_v), ah, al)
    if not np.all(yh + yl < 1.0):
        raise PolarizationCatastropheError(
            "(4 pi/3) n_v a >= 1: polarization catastrophe, "
            "no finite permittivity"
        )
    two_y = _dd_mul(2.0, 0.0, yh, yl)
    num = _dd_add(*two_y, 1.0, 0.0)
    den = _dd_add(-yh, -yl, 1.0, 0.0)
    eh, el = _dd_div(*num, *den)
    out = np.asarray(eh + el)
    return float(out) if out.ndim == 0 else out


def eps_dilute_first_order(a, n_v: float):
    """First-order (dilute) Clausius-Mossotti: eps = 1 + 4 pi n_v a.

    Neglects local-field effects; agrees with eps_from_alpha_cm to
    O((n_v a)^2).
    """
    ah, al = _unwrap(a)
    out = 1.0 + 4.0 * math.pi * n_v * (np.asarray(ah, dtype=float) + al)
    out = np.asarray(out)
    return float(out) if out.ndim == 0 else out
