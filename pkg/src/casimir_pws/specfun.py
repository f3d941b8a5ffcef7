"""Cancellation-safe evaluation of Gamma(0, x) and the primitive chain d..j.

The seven functions d, e, f, g, h, i, j form a chain of successive
primitives (antiderivatives): e' = d, f' = e, ..., j' = i.  Each has the
closed form

    p(x) = P(x) * Gamma(0, x) + exp(-x) * Q(x)

with polynomial P and rational Q, all members vanishing as x -> infinity
and all but j diverging at x = 0 (j(0) = -23/15).  Naive evaluation of
the closed form loses all significant digits by x ~ 40 because the two
terms cancel to many leading orders; the backends therefore switch
between a small-x series, compensated direct evaluation, and a pure
asymptotic expansion (see ``_kernels_np`` for the regime map).  This
module is the public face: argument validation, scalar/array handling,
and the small-x log/Laurent split used by integrand-cancellation paths.
"""

from __future__ import annotations

import enum
from typing import Dict, Tuple, Union

import numpy as np

from . import _primcoef
from ._backend import BACKEND_NAME, kernels

__all__ = [
    "BACKEND_NAME",
    "EULER_GAMMA",
    "PrimitiveKind",
    "X_SERIES",
    "X_SWITCH",
    "gamma0",
    "exp_gamma0",
    "primitive",
    "primitive_chain_check",
    "small_x_expansion",
]

EULER_GAMMA = _primcoef.EULER_GAMMA

# Band edges of the evaluation scheme (shared by both backends).  Below
# X_SERIES the series split of `small_x_expansion` is authoritative;
# above X_SWITCH the asymptotic expansion is used.
X_SERIES = kernels.X_SERIES
X_SWITCH = kernels.X_SWITCH

J_AT_ZERO = -23.0 / 15.0


class PrimitiveKind(str, enum.Enum):
    """The seven members of the primitive chain, innermost first."""

    D = "d"
    E = "e"
    F = "f"
    G = "g"
    H = "h"
    I = "i"
    J = "j"


_KIND_ORDER = "defghij"

KindLike = Union[PrimitiveKind, str]


def _normalize_kind(kind: KindLike) -> str:
    if isinstance(kind, PrimitiveKind):
        return kind.value
    name = str(kind).strip().lower()
    if name in _KIND_ORDER and len(name) == 1:
        return name
    raise ValueError(
        f"unknown primitive kind {kind!r}; expected one of "
        + ", ".join(repr(c) for c in _KIND_ORDER)
    )


def _as_array(x) -> Tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=np.float64)
    return arr, (arr.ndim == 0)


def gamma0(x):
    """Exponential integral Gamma(0, x) = E_1(x) for x > 0.

    Parameters
    ----------
    x : float or array_like
        Strictly positive argument(s).

    Returns
    -------
    float or ndarray
        Gamma(0, x) with relative error <= 1e-14.

    Raises
    ------
    ValueError
        If any element satisfies x <= 0 (the function diverges at 0).
    """
    arr, scalar = _as_array(x)
    if not np.all(arr > 0.0):
        raise ValueError("gamma0 requires x > 0 (Gamma(0, x) diverges at 0)")
    out = kernels.gamma0(arr if arr.ndim else arr.reshape(1))
    return float(out[0]) if scalar else out.reshape(arr.shape)


def exp_gamma0(x):
    """e^x * Gamma(0, x) for x > 0.

    This product stays O(1/x) for large x, so it remains representable
    where Gamma(0, x) itself (and e^{-x}) would underflow; integrands
    that carry their own exponential factor should prefer it.
    """
    arr, scalar = _as_array(x)
    if not np.all(arr > 0.0):
        raise ValueError("exp_gamma0 requires x > 0")
    out = kernels.exp_gamma0(arr if arr.ndim else arr.reshape(1))
    return float(out[0]) if scalar else out.reshape(arr.shape)


def primitive(kind: KindLike, x):
    """Evaluate one member of the primitive chain at x.

    Parameters
    ----------
    kind : PrimitiveKind or str
        One of "d", "e", "f", "g", "h", "i", "j".
    x : float or array_like
        Argument(s); must be > 0, except that kind "j" also accepts
        x = 0 where it takes the finite value -23/15.

    Returns
    -------
    float or ndarray
        Function value(s), relative error <= 1e-10 over the full domain
        (the result is exponentially small for large x).

    Raises
    ------
    ValueError
        On an unknown kind, or x <= 0 for kinds d..i (they diverge at
        0), or x < 0 for kind j.
    """
    name = _normalize_kind(kind)
    arr, scalar = _as_array(x)
    flat = arr.reshape(-1) if arr.ndim else arr.reshape(1)
    if name == "j":
        if not np.all(flat >= 0.0):
            raise ValueError("primitive kind 'j' requires x >= 0")
        zero = flat == 0.0
        if np.any(zero):
            out = np.empty_like(flat)
            out[zero] = J_AT_ZERO
            if np.any(~zero):
                out[~zero] = kernels.primitive(name, flat[~zero])
        else:
            out = kernels.primitive(name, flat)
    else:
        if not np.all(flat > 0.0):
            raise ValueError(
                f"primitive kind {name!r} requires x > 0 (it diverges at 0)"
            )
        out = kernels.primitive(name, flat)
    return float(out[0]) if scalar else out.reshape(arr.shape)


def primitive_chain_check(kind: KindLike, x: float, h: float) -> float:
    """Finite-difference residual of the chain relation successor' = kind.

    Computes the central difference [p_next(x+h) - p_next(x-h)] / (2h)
    of the successor of ``kind`` (the member whose derivative is
    ``kind``) and subtracts ``primitive(kind, x)``.  A small residual
    confirms the chain relation at x; used by tests.

    Parameters
    ----------
    kind : PrimitiveKind or str
        Any member except "j", which has no successor.
    x : float
        Evaluation point, > 0.
    h : float
        Step size, required to lie in (0, x/10).

    Returns
    -------
    float
        The residual (finite-difference derivative minus the chain
        predecessor).

    Raises
    ------
    ValueError
        If kind is "j" (usage error: no successor exists) or the step
        does not satisfy 0 < h < x/10.
    """
    name = _normalize_kind(kind)
    if name == "j":
        raise ValueError("primitive kind 'j' has no successor to differentiate")
    if not x > 0.0:
        raise ValueError("primitive_chain_check requires x > 0")
    if not (0.0 < h < x / 10.0):
        raise ValueError("step h must satisfy 0 < h < x/10")
    succ = _KIND_ORDER[_KIND_ORDER.index(name) + 1]
    derivative = (primitive(succ, x + h) - primitive(succ, x - h)) / (2.0 * h)
    return derivative - primitive(name, x)


def small_x_expansion(kind: KindLike) -> Tuple[Tuple[float, ...], Dict[int, float]]:
    """Small-x log/Laurent split of one primitive: p(x) = -ln(x)*P(x) + R(x).

    Returns
    -------
    (p_coeffs, r_terms)
        ``p_coeffs`` are the ascending coefficients of the polynomial
        P(x) multiplying -ln(x), and ``r_terms`` maps integer powers k
        (negative = Laurent part) to the coefficients of the log-free
        remainder R(x) = sum_k r_k x^k.  The Euler-Mascheroni constant
        from Gamma(0, x) = -gamma - ln x + ... is already folded into
        the x^0..x^deg(P) entries of R, so the split is exactly the two
        returned pieces.  Truncated at a total order that keeps the
        combination accurate to ~1e-13 relative for x < X_SERIES.

    Notes
    -----
    Integrand-cancellation paths use this split: in a signed
    combination sum_i s_i p(2 u L_i) with sum_i s_i = 0, the ln(2u)
    part of -ln(x_i) P(x_i) pairs across the L_i and the divergent
    Laurent terms cancel order by order, which the caller can exploit
    term-wise instead of subtracting nearly equal function values.
    """
    name = _normalize_kind(kind)
    p_coeffs = tuple(_primcoef.P[name])
    r_terms: Dict[int, float] = dict(_primcoef.R[name])
    # Fold -gamma * P(x) into the log-free part so that
    # p(x) = -ln(x) * P(x) + R(x) holds exactly as returned.
    for k, c in enumerate(p_coeffs):
        if c != 0.0:
            r_terms[k] = r_terms.get(k, 0.0) - EULER_GAMMA * c
    return p_coeffs, r_terms
