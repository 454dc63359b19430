"""Darboux invariants of curves on surfaces by exact symbolic differentiation.

Independent of the library: projections are read off the Darboux equations
(timelike surface: T' = k_g g - eps k_n n, g' = k_g T + eps tau_g n;
spacelike surface: T' = k_g g + k_n n, g' = -k_g T + tau_g n).
Prints the values pinned in test_surface_strip.cpp.
"""
import sympy as sp

t, u, v = sp.symbols("t u v", real=True)


def inner(a, b):
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a, b):
    return sp.Matrix([a[1] * b[2] - a[2] * b[1], a[0] * b[2] - a[2] * b[0], a[1] * b[0] - a[0] * b[1]])


def invariants(X, uu, vv, t0):
    Xu, Xv = X.diff(u), X.diff(v)
    N = cross(Xu, Xv).subs({u: uu, v: vv})
    x = X.subs({u: uu, v: vv})
    xd = x.diff(t)
    speed = sp.sqrt(sp.Abs(inner(xd, xd)))
    n = N / sp.sqrt(sp.Abs(inner(N, N)))
    T = xd / speed
    g = cross(n, T)
    Td = T.diff(t) / speed
    gd = g.diff(t) / speed
    vals = {s: float(e.subs(t, t0).evalf(30)) for s, e in
            {"TT": inner(T, T), "nn": inner(n, n), "Tdg": inner(Td, g), "Tdn": inner(Td, n),
             "gdn": inner(gd, n)}.items()}
    eps = round(vals["TT"])
    if round(vals["nn"]) > 0:  # timelike surface
        kg = vals["Tdg"] / (-eps)
        kn = -eps * vals["Tdn"]
        tg = eps * vals["gdn"]
    else:
        kg = vals["Tdg"]
        kn = -vals["Tdn"]
        tg = -vals["gdn"]
    return kg, kn, tg


graph_t = sp.Matrix([u, v, sp.Rational(3, 10) * sp.sin(u) + sp.Rational(1, 5) * v**2 + sp.Rational(1, 10) * u * v])
graph_s = sp.Matrix([sp.Rational(1, 4) * sp.sin(u) + sp.Rational(3, 20) * sp.cos(sp.Rational(13, 10) * v) + sp.Rational(1, 10) * u * v, u, v])
h2 = sp.Matrix([sp.cosh(u), sp.sinh(u) * sp.cos(v), sp.sinh(u) * sp.sin(v)])

cases = [
    ("timelike graph, spacelike curve", graph_t, sp.Rational(3, 10) * t + t**2 / 20, t + sp.sin(2 * t) / 10, sp.Rational(2, 5)),
    ("timelike graph, timelike curve", graph_t, t + t**2 / 10, sp.Rational(3, 10) * t + sp.cos(t) / 10, sp.Rational(9, 10)),
    ("spacelike graph", graph_s, t / 2 + t**2 / 10, sp.Rational(4, 5) * t - sp.sin(t) / 5, sp.Rational(7, 10)),
    ("hyperbolic plane wobble", h2, 1 + sp.Rational(3, 10) * sp.sin(t), t, sp.Rational(1, 2)),
]
for name, X, uu, vv, t0 in cases:
    kg, kn, tg = invariants(X, uu, vv, t0)
    print(f"{name} at t = {float(t0)}: k_g = {kg!r}, k_n = {kn!r}, tau_g = {tg!r}")
