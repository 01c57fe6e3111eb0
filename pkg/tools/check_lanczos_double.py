#!/usr/bin/env python3
"""Measure double-precision accuracy of candidate gamma approximations.

Compares, against mpmath at 40 dps, three evaluation strategies for the
shifted rational approximation derived in derive_lanczos.py:

  pf   - partial-fraction sum  c0 + sum c_k/(x+k), evaluated in binary64
  rat  - equivalent single rational N(x)/D(x) with D(x) = prod (x+k),
         both expanded to monomial coefficients at high precision and
         evaluated by Horner in binary64

for (g, N) = (7, 9) and (9, 11).  Prints worst relative error over a grid
covering 0.5 <= Re z <= 50, |Im z| <= 50.
"""

import cmath
from mpmath import mp, mpf, mpc, gamma as mpgamma, sqrt, exp, pi, fabs

import importlib.util
import pathlib

spec = importlib.util.spec_from_file_location(
    "derive_lanczos", pathlib.Path(__file__).with_name("derive_lanczos.py"))
dl = importlib.util.module_from_spec(spec)
spec.loader.exec_module(dl)

mp.dps = 60


def poly_from_roots(roots):
    p = [mpf(1)]
    for r in roots:
        q = [mpf(0)] * (len(p) + 1)
        for i, a in enumerate(p):
            q[i] += a * r
            q[i + 1] += a
        p = q
    return p  # ascending powers


def rational_coeffs(coef):
    N = len(coef)
    den = poly_from_roots([mpf(k) for k in range(1, N)])
    num = [mpf(0)] * N
    # c0 * D(x)
    for i, a in enumerate(den):
        num[i] += coef[0] * a
    for k in range(1, N):
        part = poly_from_roots([mpf(j) for j in range(1, N) if j != k])
        for i, a in enumerate(part):
            num[i] += coef[k] * a
    return num, den


def horner(p, x):
    s = 0j
    for a in reversed(p):
        s = s * x + a
    return s


def eval_pf(z, g, coef):
    x = z - 1.0
    t = x + g + 0.5
    s = coef[0]
    for k in range(1, len(coef)):
        s += coef[k] / (x + k)
    return cmath.sqrt(2 * cmath.pi) * t ** (x + 0.5) * cmath.exp(-t) * s


def eval_rat(z, g, num, den):
    x = z - 1.0
    t = x + g + 0.5
    s = horner(num, x) / horner(den, x)
    return cmath.sqrt(2 * cmath.pi) * t ** (x + 0.5) * cmath.exp(-t) * s


def grid():
    for re in [0.5, 0.6, 1.0, 1.5, 2.0, 3.5, 5.0, 8.0, 13.0, 21.0, 34.0, 50.0]:
        for im in [0.0, 0.1, 0.5, 1.5, 4.0, 9.0, 16.0, 28.0, 50.0]:
            yield complex(re, im)
            if im:
                yield complex(re, -im)


def worst(evalf):
    w, arg = 0.0, None
    for z in grid():
        exact = mpgamma(mpc(z.real, z.imag))
        got = evalf(z)
        err = float(fabs((mpc(got.real, got.imag) - exact) / exact))
        if err > w:
            w, arg = err, z
    return w, arg


for g, N in [(7, 9), (9, 11)]:
    coef = dl.derive(mpf(g), N)
    cf = [float(c) for c in coef]
    num, den = rational_coeffs(coef)
    numf = [float(c) for c in num]
    denf = [float(c) for c in den]
    wpf = worst(lambda z: eval_pf(z, float(g), cf))
    wrt = worst(lambda z: eval_rat(z, float(g), numf, denf))
    print(f"g={g} N={N}: pf worst {wpf}, rational worst {wrt}")
    print("   num coeff signs:", ["+" if c > 0 else "-" for c in numf])
