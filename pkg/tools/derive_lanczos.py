#!/usr/bin/env python3
"""Derive and validate the rational-approximation coefficients used by the
complex gamma implementation in ``heunconn.special``.

The approximation has the classic shifted form

    Gamma(z) = sqrt(2*pi) * t**(z - 1/2) * exp(-t) * A(z - 1),
    t = z + g - 1/2,
    A(x) = c[0] + sum_{k=1}^{N-1} c[k] / (x + k),

valid for Re z >= 1/2.  The coefficients are obtained here by collocation:
A(x) is forced to reproduce Gamma(x + 1) = x! exactly at the integer nodes
x = 0 .. N-1, which pins the N unknowns via a linear system solved at high
precision with mpmath.  The resulting approximation is then measured against
mpmath.gamma on a complex grid; the (g, N) pair and the frozen coefficient
table below are accepted only if the worst relative error on the grid is
comfortably below 1e-14.

Run:  python3 tools/derive_lanczos.py
"""

from mpmath import mp, mpf, mpc, gamma, sqrt, exp, pi, fabs

mp.dps = 60


def derive(g, N):
    """Solve the collocation system for coefficients c[0..N-1]."""
    # Target values F(x) = Gamma(x+1) * exp(x+g+1/2) * (x+g+1/2)**-(x+1/2) / sqrt(2 pi)
    rows = []
    rhs = []
    for j in range(N):
        x = mpf(j)
        t = x + g + mpf(1) / 2
        f = gamma(x + 1) * exp(t) * t ** (-(x + mpf(1) / 2)) / sqrt(2 * pi)
        rows.append([mpf(1)] + [1 / (x + k) for k in range(1, N)])
        rhs.append(f)
    # Gaussian elimination at mp precision.
    n = N
    a = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: fabs(a[r][col]))
        a[col], a[piv] = a[piv], a[col]
        for r in range(col + 1, n):
            m = a[r][col] / a[col][col]
            for c in range(col, n + 1):
                a[r][c] -= m * a[col][c]
    coef = [mpf(0)] * n
    for r in range(n - 1, -1, -1):
        s = a[r][n] - sum(a[r][c] * coef[c] for c in range(r + 1, n))
        coef[r] = s / a[r][r]
    return coef


def approx_gamma(z, g, coef):
    x = z - 1
    t = x + g + mpf(1) / 2
    s = coef[0]
    for k in range(1, len(coef)):
        s += coef[k] / (x + k)
    return sqrt(2 * pi) * t ** (x + mpf(1) / 2) * exp(-t) * s


def max_rel_error(g, coef):
    worst = mpf(0)
    argmax = None
    for re in [0.5, 0.75, 1.0, 1.5, 2.5, 4.0, 7.0, 12.0, 20.0, 35.0, 50.0]:
        for im in [0.0, 0.25, 1.0, 3.0, 8.0, 15.0, 30.0, 50.0]:
            z = mpc(re, im)
            exact = gamma(z)
            err = fabs((approx_gamma(z, g, coef) - exact) / exact)
            if err > worst:
                worst, argmax = err, z
    return worst, argmax


def main():
    for g, N in [(mpf(7), 9), (mpf(8), 10), (mpf(9), 11)]:
        coef = derive(g, N)
        worst, argmax = max_rel_error(g, coef)
        print(f"g={g}, N={N}: max rel err {worst} at z={argmax}")
        if worst < mpf("5e-15"):
            print("ACCEPTED; frozen table:")
            print(f"_LANCZOS_G = {float(g)!r}")
            print("_LANCZOS_COEF = (")
            for c in coef:
                print(f"    {float(c)!r},")
            print(")")
            break


if __name__ == "__main__":
    main()
