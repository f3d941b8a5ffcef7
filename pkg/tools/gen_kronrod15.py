"""Generate the 15-point Kronrod / 7-point Gauss node-weight table.

The embedded pair used by ``casimir_pws.quadrature`` needs the nodes and
weights to full double precision.  Rather than trusting hand-copied
literature values, this script derives them:

* G7 nodes are the roots of the Legendre polynomial P7.
* The 8 added Kronrod nodes are the roots of the monic Stieltjes
  polynomial E8, defined by orthogonality of E8 * P7 to all polynomials
  of degree < 8 on [-1, 1] (solved exactly with sympy rationals).
* Weights follow from exactness: the 15-point rule integrates
  polynomials through degree 22, the 7-point rule through degree 13.
  By symmetry only even moments constrain the (symmetric) weights.

Everything is computed with mpmath at 50 digits, verified against the
exactness conditions, and printed as Python tuples for pasting into the
quadrature module.  Run:  python3 tools/gen_kronrod15.py
"""

import mpmath as mp
import sympy as sp

mp.mp.dps = 50

x = sp.Symbol("x")
P7 = sp.legendre(7, x)

# --- Stieltjes polynomial E8 (monic, even) -------------------------------
a6, a4, a2, a0 = sp.symbols("a6 a4 a2 a0")
E8 = x**8 + a6 * x**6 + a4 * x**4 + a2 * x**2 + a0
eqs = []
for k in (1, 3, 5, 7):
    eqs.append(sp.integrate(sp.expand(E8 * P7 * x**k), (x, -1, 1)))
sol = sp.solve(eqs, [a6, a4, a2, a0], dict=True)
assert len(sol) == 1
E8 = sp.expand(E8.subs(sol[0]))
print("# E8 =", E8)

# --- nodes ----------------------------------------------------------------
def poly_roots(expr, degree):
    coeffs = [mp.mpf(str(sp.Rational(c))) for c in sp.Poly(expr, x).all_coeffs()]
    return sorted(mp.polyroots(coeffs, maxsteps=200, extraprec=80))


g7_nodes = poly_roots(P7, 7)
e8_nodes = poly_roots(E8, 8)
k15_nodes = sorted(g7_nodes + e8_nodes)
assert all(n.imag == 0 for n in k15_nodes)
k15_nodes = [mp.re(n) for n in k15_nodes]

# --- weights by moment matching (symmetric rule, even moments) ------------
def moments(n_points):
    # integral of x^(2j) over [-1,1] = 2/(2j+1)
    return [mp.mpf(2) / (2 * j + 1) for j in range(n_points)]


def solve_weights(nodes_nonneg, include_zero, n_eq):
    # unknowns: weight per non-negative node (zero node counts once)
    m = len(nodes_nonneg)
    A = mp.matrix(n_eq, m)
    b = mp.matrix(n_eq, 1)
    mom = moments(n_eq)
    for i in range(n_eq):
        for j, t in enumerate(nodes_nonneg):
            mult = 1 if (include_zero and t == 0) else 2
            A[i, j] = mult * t ** (2 * i)
        b[i] = mom[i]
    return mp.lu_solve(A, b)


k15_nonneg = [t for t in k15_nodes if t >= 0]          # 8 nodes incl. 0
g7_nonneg = [t for t in g7_nodes if t >= 0]            # 4 nodes incl. 0
wgk = solve_weights(k15_nonneg, True, 8)
wg = solve_weights(g7_nonneg, True, 4)

# --- verification: exactness through degree 22 (K15) and 13 (G7) ----------
def rule_value(nodes_nonneg, weights, p):
    tot = mp.mpf(0)
    for t, w in zip(nodes_nonneg, weights):
        if t == 0:
            tot += w * t**p if p > 0 else w
        else:
            tot += w * (t**p + (-t) ** p)
    return tot


for p in range(0, 23):
    exact = mp.mpf(2) / (p + 1) if p % 2 == 0 else mp.mpf(0)
    err = abs(rule_value(k15_nonneg, wgk, p) - exact)
    assert err < mp.mpf("1e-45"), (p, err)
for p in range(0, 14):
    exact = mp.mpf(2) / (p + 1) if p % 2 == 0 else mp.mpf(0)
    err = abs(rule_value(g7_nonneg, wg, p) - exact)
    assert err < mp.mpf("1e-45"), (p, err)
print("# exactness verified: K15 through degree 22, G7 through degree 13")

# --- emit (descending |node|, QUADPACK ordering) ---------------------------
order = sorted(range(8), key=lambda j: -k15_nonneg[j])
print("_XGK = (")
for j in order:
    print(f"    {mp.nstr(k15_nonneg[j], 17)},")
print(")")
print("_WGK = (")
for j in order:
    print(f"    {mp.nstr(wgk[j], 17)},")
print(")")
gorder = sorted(range(4), key=lambda j: -g7_nonneg[j])
print("_WG = (")
for j in gorder:
    print(f"    {mp.nstr(wg[j], 17)},")
print(")")
