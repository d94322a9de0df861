"""Independent reference values for the unit tests.

Computes, with exact rational arithmetic (sympy), the quantities that the C++
tests compare against. Run `python3 tests/oracles/oracle.py` to regenerate;
the printed values are frozen into tests/unit/*.cpp.
"""
from fractions import Fraction as Q

import sympy as sp


def heis_mul(p, q):
    n = (len(p) - 1) // 2
    out = [p[k] + q[k] for k in range(2 * n)]
    t = p[-1] + q[-1]
    for j in range(n):
        x, y = p[2 * j], p[2 * j + 1]
        xp, yp = q[2 * j], q[2 * j + 1]
        t += 2 * (xp * y - x * yp)
    return out + [t]


def heisenberg():
    print("mul (1,0,0)*(0,1,0) =", heis_mul([1, 0, 0], [0, 1, 0]))
    print("inv (1,2,5) =", [-1, -2, -5], "check", heis_mul([1, 2, 5], [-1, -2, -5]))
    p = [Q(3), Q(-1), Q(2), Q(5), Q(7, 2)]
    q = [Q(-2), Q(4), Q(1, 3), Q(-1), Q(1, 5)]
    print("mul n=2 sample =", [str(v) for v in heis_mul(p, q)])
    s = sp.symbols("s")
    f, g = sp.cos(s), sp.sin(s)
    print("circle lift h(2pi) =", sp.integrate(2 * (sp.diff(f, s) * g - f * sp.diff(g, s)), (s, 0, 2 * sp.pi)))


def lemma():
    d, l, a, b, m, v, lam = sp.symbols("delta ell alpha beta mu nu lam")
    t = sp.symbols("t")
    den = d * (a + b) - 9 * l
    A = (d * (a + b) - 2 * l) / d**3
    B = (-d * (2 * a + b) + 3 * l) / d**2
    D = 7 * (6 * d * l * (m - v) + d**2 * (a * v - b * m) - 15 * lam) / (2 * d**4 * den)
    E = (d * l * (33 * v - 51 * m) + d**2 * (a * (m - 6 * v) + b * (8 * m + v)) + 105 * lam) / (d**3 * den)
    F = -(d * l * (24 * v - 78 * m) + d**2 * (4 * a * m + 11 * b * m - 5 * a * v + 2 * b * v) + 105 * lam) / (2 * d**2 * den)
    x = A * t**3 + B * t**2 + a * t
    y = D * t**4 + E * t**3 + F * t**2 + m * t
    vals = {d: sp.Rational(1, 20), l: sp.Rational(1, 25), a: sp.Rational(1), b: sp.Rational(7, 10),
            m: sp.Rational(1, 50), v: sp.Rational(-1, 40), lam: sp.Rational(1, 100000)}
    coeffs = [sp.nsimplify(c.subs(vals)) for c in (A, B, D, E, F)]
    print("poly case A,B,D,E,F =", [sp.N(c, 20) for c in coeffs])
    xs, ys = x.subs(vals), y.subs(vals)
    area = sp.integrate(2 * (sp.diff(xs, t) * ys - xs * sp.diff(ys, t)), (t, 0, vals[d]))
    print("poly case area =", area, "x(delta) =", xs.subs(t, vals[d]), "y(delta) =", ys.subs(t, vals[d]))

    # circle branch: loop area and radius for a sample parameter set
    cvals = {d: sp.Rational(1, 10), l: sp.Rational(1, 1000), m: sp.Rational(1, 200), v: sp.Rational(-1, 300),
             lam: sp.Rational(-3, 100000)}
    H = (lam - d * l * (m - v) / 15).subs(cvals)
    R = sp.sqrt(sp.Abs(H)) / (2 * sp.sqrt(sp.pi))
    print("circle case H =", H, sp.N(H, 20), "R =", sp.N(R, 20))
    tau = -108 * sp.pi / d**3 * t**3 + 162 * sp.pi / d**2 * t**2 - 72 * sp.pi / d * t + 10 * sp.pi
    print("tau(d/3), tau(2d/3) =", sp.simplify(tau.subs(t, d / 3)), sp.simplify(tau.subs(t, 2 * d / 3)))
    print("tau'(d/3), tau'(2d/3) =", sp.simplify(sp.diff(tau, t).subs(t, d / 3)), sp.simplify(sp.diff(tau, t).subs(t, 2 * d / 3)))


def big_m():
    # single gap (0, 1), gamma_1 linear from (0,0) to (3,4)
    chord = (Q(3) ** 2 + Q(4) ** 2) ** 0.5
    print("big M =", 1 + max(chord, chord, chord))


def counterexample():
    for n in (0, 1, 10):
        print("ratio", n, Q(32, 3) * Q(4, 3) ** n, float(Q(32, 3) * Q(4, 3) ** n))
    # brute force Whitney modulus of the truncated set at scale 2^-(k+2)
    levels = 12
    pts = []
    for k in range(levels):
        c, dd = 1 - Q(1, 2**k), 1 - Q(3, 4) / 2**k
        pts += [(c, Q(1, 3**k)), (dd, Q(1, 3**k))]
    pts.append((Q(1), Q(0)))
    for k in (0, 5, 9):
        t = Q(1, 2 ** (k + 2))
        best = Q(0)
        for i in range(len(pts)):
            for j in range(len(pts)):
                if i == j:
                    continue
                dist = abs(pts[j][0] - pts[i][0])
                if dist <= t:
                    best = max(best, abs(pts[j][1] - pts[i][1]) / dist)
        print("whitney", k, best, float(best), "bound", float(4 * Q(2, 3) ** k))


if __name__ == "__main__":
    heisenberg()
    lemma()
    big_m()
    counterexample()
