# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled kernels for Gamma(0, x) and the d..j primitive family.

Same contract and regime layout as ``casimir_pws._kernels_np`` (see that
module for the numerical rationale); this version runs scalar loops per
array element instead of masked vector passes, with early exit from the
continued fractions.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, log, pow

from . import _primcoef as _pc

__all__ = ["BACKEND_NAME", "gamma0", "exp_gamma0", "primitive"]

BACKEND_NAME = "cython"

KIND_NAMES = "defghij"

cdef double _EULER_GAMMA = _pc.EULER_GAMMA

cdef double _X_SERIES = 1.0e-3
cdef double _X_CF = 2.5
cdef double _X_CF_DD = 20.0
cdef double _X_SWITCH = 36.0

X_SERIES = _X_SERIES
X_CF = _X_CF
X_CF_DD = _X_CF_DD
X_SWITCH = _X_SWITCH

cdef double _SPLIT = 134217729.0  # 2^27 + 1, Dekker's splitting constant

cdef int _R_KMIN = -5
cdef int _R_LEN = 18   # powers -5..12 inclusive

# ----------------------------------------------------------------------
# coefficient tables, packed into C-contiguous buffers at import
# ----------------------------------------------------------------------

def _pack_tables():
    n_kinds = len(KIND_NAMES)
    p_f = np.zeros((n_kinds, 6))
    p_len = np.zeros(n_kinds, dtype=np.int32)
    p_hi = np.zeros((n_kinds, 6))
    p_lo = np.zeros((n_kinds, 6))
    qp_len = np.zeros(n_kinds, dtype=np.int32)
    qp_hi = np.zeros((n_kinds, 6))
    qp_lo = np.zeros((n_kinds, 6))
    ql_len = np.zeros(n_kinds, dtype=np.int32)
    ql_hi = np.zeros((n_kinds, 5))
    ql_lo = np.zeros((n_kinds, 5))
    r_tab = np.zeros((n_kinds, _R_LEN))
    asy = np.zeros((n_kinds, _pc.ASY_ORDER))
    for i, name in enumerate(KIND_NAMES):
        p_len[i] = len(_pc.P[name])
        for k, c in enumerate(_pc.P[name]):
            p_f[i, k] = c
        for k, (hi, lo) in enumerate(_pc.P_DD[name]):
            p_hi[i, k] = hi
            p_lo[i, k] = lo
        qp_len[i] = len(_pc.QP_DD[name])
        for k, (hi, lo) in enumerate(_pc.QP_DD[name]):
            qp_hi[i, k] = hi
            qp_lo[i, k] = lo
        ql_len[i] = len(_pc.QL_DD[name])
        for k, (hi, lo) in enumerate(_pc.QL_DD[name]):
            ql_hi[i, k] = hi
            ql_lo[i, k] = lo
        for k, c in _pc.R[name].items():
            r_tab[i, k - _R_KMIN] = c
        for k, c in enumerate(_pc.ASY[name]):
            asy[i, k] = c
    return (p_f, p_len, p_hi, p_lo, qp_len, qp_hi, qp_lo,
            ql_len, ql_hi, ql_lo, r_tab, asy)


_TABLES = _pack_tables()

cdef double[:, ::1] _P_F = _TABLES[0]
cdef int[::1] _P_LEN = _TABLES[1]
cdef double[:, ::1] _P_HI = _TABLES[2]
cdef double[:, ::1] _P_LO = _TABLES[3]
cdef int[::1] _QP_LEN = _TABLES[4]
cdef double[:, ::1] _QP_HI = _TABLES[5]
cdef double[:, ::1] _QP_LO = _TABLES[6]
cdef int[::1] _QL_LEN = _TABLES[7]
cdef double[:, ::1] _QL_HI = _TABLES[8]
cdef double[:, ::1] _QL_LO = _TABLES[9]
cdef double[:, ::1] _R_TAB = _TABLES[10]
cdef double[:, ::1] _ASY = _TABLES[11]
cdef int _ASY_LEN = _TABLES[11].shape[1]


# ----------------------------------------------------------------------
# double-double helpers (error-free transformations)
# ----------------------------------------------------------------------

cdef inline (double, double) _two_sum(double a, double b) noexcept nogil:
    cdef double s = a + b
    cdef double bb = s - a
    return s, (a - (s - bb)) + (b - bb)


cdef inline (double, double) _two_prod(double a, double b) noexcept nogil:
    cdef double p = a * b
    cdef double ah = _SPLIT * a
    cdef double bh = _SPLIT * b
    cdef double al, bl
    ah = ah - (ah - a)
    al = a - ah
    bh = bh - (bh - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


cdef inline (double, double) _dd_add(double ah, double al,
                                     double bh, double bl) noexcept nogil:
    cdef double s, e
    s, e = _two_sum(ah, bh)
    return _two_sum(s, e + (al + bl))


cdef inline (double, double) _dd_mul(double ah, double al,
                                     double bh, double bl) noexcept nogil:
    cdef double p, e
    p, e = _two_prod(ah, bh)
    return _two_sum(p, e + (ah * bl + al * bh))


cdef inline (double, double) _dd_div(double ah, double al,
                                     double bh, double bl) noexcept nogil:
    cdef double q1 = ah / bh
    cdef double ph, pl, rh, rl
    ph, pl = _dd_mul(q1, 0.0, bh, bl)
    rh, rl = _dd_add(ah, al, -ph, -pl)
    return _two_sum(q1, (rh + rl) / bh)


# ----------------------------------------------------------------------
# Gamma(0, x)
# ----------------------------------------------------------------------

cdef double _gamma0_series_s(double x) noexcept nogil:
    cdef double s = 0.0
    cdef double term = 1.0
    cdef int k
    for k in range(1, 31):
        term = term * (-x) / k
        s -= term / k
        if fabs(term) < 1e-18:
            break
    return -_EULER_GAMMA - log(x) + s


cdef double _exp_gamma0_cf_s(double x) noexcept nogil:
    cdef double b = x + 1.0
    cdef double f = b
    cdef double c = b
    cdef double d = 0.0
    cdef double an, delta
    cdef int n
    for n in range(1, 120):
        an = -(<double> n) * (<double> n)
        b += 2.0
        d = b + an * d
        c = b + an / c
        d = 1.0 / d
        delta = c * d
        f *= delta
        if fabs(delta - 1.0) < 1e-16:
            break
    return 1.0 / f


cdef (double, double) _exp_gamma0_cf_dd_s(double x) noexcept nogil:
    cdef double fh, fl, ch, cl, dh, dl, bh, bl, th, tl, an
    cdef int n
    fh, fl = _two_sum(x, 1.0)
    ch = fh
    cl = fl
    dh = 0.0
    dl = 0.0
    bh = fh
    bl = fl
    for n in range(1, 40):
        an = -(<double> n) * (<double> n)
        bh, bl = _dd_add(bh, bl, 2.0, 0.0)
        th, tl = _dd_mul(an, 0.0, dh, dl)
        dh, dl = _dd_add(bh, bl, th, tl)
        th, tl = _dd_div(an, 0.0, ch, cl)
        ch, cl = _dd_add(bh, bl, th, tl)
        dh, dl = _dd_div(1.0, 0.0, dh, dl)
        th, tl = _dd_mul(ch, cl, dh, dl)
        fh, fl = _dd_mul(fh, fl, th, tl)
        if fabs(th - 1.0) + fabs(tl) < 1e-32:
            break
    return _dd_div(1.0, 0.0, fh, fl)


# ----------------------------------------------------------------------
# primitive family
# ----------------------------------------------------------------------

cdef double _prim_series_s(int kind, double x) noexcept nogil:
    cdef double pv = 0.0
    cdef double rv = 0.0
    cdef int k
    for k in range(_P_LEN[kind] - 1, -1, -1):
        pv = pv * x + _P_F[kind, k]
    for k in range(_R_LEN - 1, -1, -1):
        rv = rv * x + _R_TAB[kind, k]
    rv *= pow(x, <double> _R_KMIN)
    return -(_EULER_GAMMA + log(x)) * pv + rv


cdef double _prim_direct_s(int kind, double x, double gh, double gl) noexcept nogil:
    cdef double bh = 0.0, bl = 0.0
    cdef double xh = 1.0, xl = 0.0
    cdef double th, tl, ih, il
    cdef int k
    for k in range(_P_LEN[kind]):
        if _P_HI[kind, k] != 0.0 or _P_LO[kind, k] != 0.0:
            th, tl = _dd_mul(_P_HI[kind, k], _P_LO[kind, k], xh, xl)
            bh, bl = _dd_add(bh, bl, th, tl)
        xh, xl = _dd_mul(xh, xl, x, 0.0)
    bh, bl = _dd_mul(bh, bl, gh, gl)
    xh = 1.0
    xl = 0.0
    for k in range(_QP_LEN[kind]):
        if _QP_HI[kind, k] != 0.0 or _QP_LO[kind, k] != 0.0:
            th, tl = _dd_mul(_QP_HI[kind, k], _QP_LO[kind, k], xh, xl)
            bh, bl = _dd_add(bh, bl, th, tl)
        xh, xl = _dd_mul(xh, xl, x, 0.0)
    if _QL_LEN[kind] > 0:
        ih, il = _dd_div(1.0, 0.0, x, 0.0)
        xh = ih
        xl = il
        for k in range(_QL_LEN[kind]):
            if _QL_HI[kind, k] != 0.0 or _QL_LO[kind, k] != 0.0:
                th, tl = _dd_mul(_QL_HI[kind, k], _QL_LO[kind, k], xh, xl)
                bh, bl = _dd_add(bh, bl, th, tl)
            xh, xl = _dd_mul(xh, xl, ih, il)
    return exp(-x) * (bh + bl)


cdef double _prim_asy_s(int kind, double x) noexcept nogil:
    cdef double invx = 1.0 / x
    cdef double s = 0.0
    cdef double prev = 1e308
    cdef double p = invx
    cdef double ak, term
    cdef int k
    for k in range(_ASY_LEN):
        ak = _ASY[kind, k]
        if ak != 0.0:
            term = ak * p
            if fabs(term) > prev:
                s += 0.5 * term
                break
            s += term
            prev = fabs(term)
        p *= invx
    return exp(-x) * s


cdef double _primitive_s(int kind, double x) noexcept nogil:
    cdef double g0
    cdef double gh, gl
    if x < _X_SERIES:
        return _prim_series_s(kind, x)
    if x < _X_CF:
        g0 = exp(x) * _gamma0_series_s(x)
        return _prim_direct_s(kind, x, g0, 0.0)
    if x < _X_CF_DD:
        g0 = _exp_gamma0_cf_s(x)
        return _prim_direct_s(kind, x, g0, 0.0)
    if x <= _X_SWITCH:
        gh, gl = _exp_gamma0_cf_dd_s(x)
        return _prim_direct_s(kind, x, gh, gl)
    return _prim_asy_s(kind, x)


# ----------------------------------------------------------------------
# array entry points (same signatures as the NumPy backend)
# ----------------------------------------------------------------------

def gamma0(x):
    """Gamma(0, x) for x > 0, relative error <= ~2e-15 (array in, array out)."""
    arr = np.ascontiguousarray(np.asarray(x, dtype=np.float64))
    out = np.empty_like(arr)
    cdef double[::1] xi = arr.reshape(-1)
    cdef double[::1] oi = out.reshape(-1)
    cdef Py_ssize_t i, n = xi.shape[0]
    cdef double v
    with nogil:
        for i in range(n):
            v = xi[i]
            if v < 1.0:
                oi[i] = _gamma0_series_s(v)
            else:
                oi[i] = exp(-v) * _exp_gamma0_cf_s(v)
    return out


def exp_gamma0(x):
    """e^x Gamma(0, x) for x > 0 (useful where e^{-x} has underflowed)."""
    arr = np.ascontiguousarray(np.asarray(x, dtype=np.float64))
    out = np.empty_like(arr)
    cdef double[::1] xi = arr.reshape(-1)
    cdef double[::1] oi = out.reshape(-1)
    cdef Py_ssize_t i, n = xi.shape[0]
    cdef double v
    with nogil:
        for i in range(n):
            v = xi[i]
            if v < 1.0:
                oi[i] = exp(v) * _gamma0_series_s(v)
            else:
                oi[i] = _exp_gamma0_cf_s(v)
    return out


def primitive(kind, x):
    """Member ``kind`` of the d..j family at x > 0 (array in, array out)."""
    cdef int ki = KIND_NAMES.index(kind)
    arr = np.ascontiguousarray(np.asarray(x, dtype=np.float64))
    out = np.empty_like(arr)
    cdef double[::1] xi = arr.reshape(-1)
    cdef double[::1] oi = out.reshape(-1)
    cdef Py_ssize_t i, n = xi.shape[0]
    with nogil:
        for i in range(n):
            oi[i] = _primitive_s(ki, xi[i])
    return out
