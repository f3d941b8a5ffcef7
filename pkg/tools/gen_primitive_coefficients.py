#!/usr/bin/env python3
"""Generate the frozen coefficient tables in ``casimir_pws/_primcoef.py``.

The pairwise-summation energy kernels are built from a chain of seven
functions d, e, f, g, h, i, j, each of the closed form

    p(x) = P(x) * Gamma(0, x) + exp(-x) * Q(x)

with P a polynomial and Q a Laurent polynomial.  Each member is a primitive
of the previous one (e' = d, f' = e, ..., j' = i) and all vanish as
x -> +infinity.  Direct evaluation of the closed form is numerically fine at
moderate x but suffers catastrophic cancellation between the two pieces at
large x, and the energy integrands need graded small-x expansions to take
stable u -> 0 limits.  This script therefore derives and freezes, for each
member:

  * ``P``      - the polynomial multiplying Gamma(0, x), ascending powers;
  * ``R``      - the Laurent coefficients of p(x) + (gamma + ln x) * P(x),
                 i.e. the log-free part of the small-x expansion
                 (p(x) = -(gamma + ln x) * P(x) + sum_k R_k x^k);
  * ``ASY``    - the large-x coefficients a_k of p(x) ~ exp(-x) * sum_k a_k / x^k,
                 obtained by expanding the whole function so that the
                 cancellation is performed exactly in rational arithmetic;
  * ``P_DD``/``QP_DD``/``QL_DD`` - the same closed-form coefficients split
                 into double-double (hi, lo) pairs.  The compensated direct
                 evaluation cancels ~x^5/120 leading digits between the
                 P*Gamma and exp(-x)*Q pieces, so even the half-ulp rounding
                 of coefficients like 1/120 would surface as ~1e-11 relative
                 error near the asymptotic handoff; the lo words remove it.

All derivations are checked symbolically here (derivative chain, j(0) value,
vanishing of non-negative asymptotic powers), then the tables are emitted as
plain float literals.  Run from the repository root:

    python3 tools/gen_primitive_coefficients.py > src/casimir_pws/_primcoef.py
"""

from __future__ import annotations

import sympy as sp

X = sp.Symbol("x", positive=True)

R_SERIES_ORDER = 12   # highest power of x kept in the small-x tables
ASY_ORDER = 46        # number of 1/x coefficients kept in the asymptotic tables

# Closed forms: (P, Q) with p(x) = P*Gamma(0,x) + exp(-x)*Q.
CLOSED_FORMS = {
    "d": (sp.Integer(0),
          -(1/X + 4/X**2 + 20/X**3 + 48/X**4 + 48/X**5)),
    "e": (sp.Integer(1),
          4/X**2 + 12/X**3 + 12/X**4),
    "f": (X,
          -(1 + 4/X**2 + 4/X**3)),
    "g": (X**2/2 - 2,
          -X/2 + sp.Rational(1, 2) + 2/X + 2/X**2),
    "h": (X**3/6 - 2*X,
          -X**2/6 + X/6 + sp.Rational(5, 3) - 2/X),
    "i": (X**4/24 - X**2 + 2,
          -X**3/24 + X**2/24 + sp.Rational(11, 12)*X - sp.Rational(3, 4)),
    "j": (X**5/120 - X**3/3 + 2*X,
          -X**4/120 + X**3/120 + sp.Rational(19, 60)*X**2
          - sp.Rational(17, 60)*X - sp.Rational(23, 15)),
}

ORDER = "defghij"


def closed_expr(name):
    P, Q = CLOSED_FORMS[name]
    return P * sp.uppergamma(0, X) + sp.exp(-X) * Q


def check_chain():
    """Each member must be a primitive of the previous one."""
    for lo, hi in zip(ORDER[:-1], ORDER[1:]):
        diff = sp.simplify(sp.diff(closed_expr(hi), X) - closed_expr(lo))
        assert diff == 0, f"{hi}' != {lo}: residual {diff}"
    # j is the only member finite at 0; its limit is -23/15
    jlim = sp.limit(closed_expr("j"), X, 0, "+")
    assert jlim == sp.Rational(-23, 15), jlim


def series_tables(name):
    """P coefficients (ascending) and log-free Laurent coefficients R_k."""
    P, Q = CLOSED_FORMS[name]
    Ppoly = sp.Poly(P, X)
    pcoefs = [sp.Rational(c) for c in reversed(Ppoly.all_coeffs())]

    # Gamma(0,x) = -gamma - ln x + S(x),  S entire with S(0)=0
    S = sum((-1)**(k + 1) * X**k / (k * sp.factorial(k))
            for k in range(1, R_SERIES_ORDER + 8))
    R = sp.expand(P * S + sp.series(sp.exp(-X), X, 0,
                                    R_SERIES_ORDER + 8).removeO() * Q)
    R = sp.expand(R)
    kmin = -5  # deepest pole among the Q tables (member d)
    rcoefs = {}
    for k in range(kmin, R_SERIES_ORDER + 1):
        c = R.coeff(X, k)
        if c != 0:
            rcoefs[k] = sp.Rational(c)
    return pcoefs, rcoefs


def dd_pair(q):
    """Split an exact rational into a double-double (hi, lo) float pair."""
    q = sp.Rational(q)
    hi = float(q)
    lo = float(q - sp.Rational(hi))
    # hi + lo must reconstruct q to ~1e-32 relative; assert the split is sane
    assert abs(float((sp.Rational(hi) + sp.Rational(lo) - q))) <= abs(hi) * 1e-30
    return hi, lo


def q_split(name):
    """Q separated into polynomial part (ascending) and x^{-1}..x^{-5} part."""
    Q = sp.expand(CLOSED_FORMS[name][1])
    poly = [sp.Rational(Q.coeff(X, k)) for k in range(0, 6)]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    laur = [sp.Rational(Q.coeff(X, -k)) for k in range(1, 6)]
    while len(laur) > 0 and laur[-1] == 0:
        laur.pop()
    return poly, laur


def asymptotic_table(name):
    """Coefficients a_k of p(x) ~ exp(-x) * sum_{k>=1} a_k x^{-k}.

    Uses exp(x)*Gamma(0,x) ~ (1/x) * sum_m (-1)^m m! x^{-m}; the positive and
    zeroth powers must cancel exactly against Q, which is asserted.
    """
    P, Q = CLOSED_FORMS[name]
    t = sp.Symbol("t", positive=True)  # t = 1/x
    n_extra = 8
    G = t * sum((-1)**m * sp.factorial(m) * t**m
                for m in range(ASY_ORDER + n_extra))
    A = sp.expand(P.subs(X, 1/t) * G + Q.subs(X, 1/t))
    A = sp.expand(A)
    poly = sp.Poly(A, t)
    for k, c in zip(range(poly.degree(), -1, -1), poly.all_coeffs()):
        if k <= 0:
            assert c == 0, f"{name}: uncancelled x^{-k} term {c}"
    coefs = [sp.Rational(poly.coeff_monomial(t**k))
             for k in range(1, ASY_ORDER + 1)]
    return coefs


def emit():
    check_chain()
    lines = []
    lines.append('"""Frozen coefficient tables for the d..j primitive family.')
    lines.append("")
    lines.append("Generated by tools/gen_primitive_coefficients.py; do not edit by hand.")
    lines.append("See that script for the derivation and the symbolic checks run")
    lines.append("before freezing.  Layout per member name:")
    lines.append("")
    lines.append('  P[name]   : ascending coefficients of the polynomial multiplying')
    lines.append("              Gamma(0, x)")
    lines.append('  R[name]   : {power: coefficient} of the log-free Laurent part of')
    lines.append("              the small-x expansion:")
    lines.append("              p(x) = -(EULER_GAMMA + ln x) * P(x) + sum_k R_k x^k")
    lines.append('  ASY[name] : a_k with p(x) ~ exp(-x) * sum_{k>=1} a_k x^{-k}')
    lines.append('  P_DD[name]  : P coefficients as (hi, lo) double-double pairs')
    lines.append('  QP_DD[name] : polynomial part of Q, ascending, (hi, lo) pairs')
    lines.append('  QL_DD[name] : coefficients of x^-1..x^-5 in Q, (hi, lo) pairs')
    lines.append('"""')
    lines.append("")
    lines.append("EULER_GAMMA = 0.5772156649015328606")
    lines.append("")
    lines.append(f"R_SERIES_ORDER = {R_SERIES_ORDER}")
    lines.append(f"ASY_ORDER = {ASY_ORDER}")
    lines.append("")

    pmap, rmap, amap = {}, {}, {}
    for name in ORDER:
        pmap[name] = series_tables(name)[0]
        rmap[name] = series_tables(name)[1]
        amap[name] = asymptotic_table(name)

    def fmt(q):
        return repr(float(q))

    lines.append("P = {")
    for name in ORDER:
        vals = ", ".join(fmt(c) for c in pmap[name])
        lines.append(f'    "{name}": ({vals},),')
    lines.append("}")
    lines.append("")
    lines.append("R = {")
    for name in ORDER:
        items = ", ".join(f"{k}: {fmt(c)}" for k, c in sorted(rmap[name].items()))
        lines.append(f'    "{name}": {{{items}}},')
    lines.append("}")
    lines.append("")
    lines.append("ASY = {")
    for name in ORDER:
        lines.append(f'    "{name}": (')
        row = []
        for idx, c in enumerate(amap[name]):
            row.append(fmt(c))
            if len(row) == 4 or idx == len(amap[name]) - 1:
                lines.append("        " + ", ".join(row) + ",")
                row = []
        lines.append("    ),")
    lines.append("}")

    def emit_dd(label, table):
        lines.append("")
        lines.append(f"{label} = {{")
        for name in ORDER:
            pairs = [f"({fmt(hi)}, {fmt(lo)})" for hi, lo in table[name]]
            body = "(" + ", ".join(pairs) + ("," if pairs else "") + ")"
            lines.append(f'    "{name}": {body},')
        lines.append("}")

    emit_dd("P_DD", {n: [dd_pair(c) for c in pmap[n]] for n in ORDER})
    emit_dd("QP_DD", {n: [dd_pair(c) for c in q_split(n)[0]] for n in ORDER})
    emit_dd("QL_DD", {n: [dd_pair(c) for c in q_split(n)[1]] for n in ORDER})
    print("\n".join(lines))


if __name__ == "__main__":
    emit()
