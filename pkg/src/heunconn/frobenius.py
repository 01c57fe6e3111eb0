"""Local series solutions at the singular points 0 and 1, and their evaluation.

For each family the normal-form equation ``psi'' + P(z) psi = 0`` is cleared
of denominators, ``D(z) psi'' + Q(z) psi = 0`` with polynomial ``D, Q``, and
``D`` has a double root at the expansion point ``p``.  Writing ``w = z - p``
and ``D = w^2 E(w)``, the normalized local solution

* at 0:  ``psi = z^rho (1 + sum_{k>=1} c_k z^k)``, ``rho = 1/2 - s*theta0``;
* at 1:  ``psi = (1-z)^rho (1 + sum_{k>=1} c_k (z-1)^k)``, ``rho = 1/2 - s*theta1``

(sign ``s = +1`` or ``-1``) has coefficients from the single recurrence

``e_0 n (n + 2 rho - 1) c_n = - sum_{j>=1} [E_j (rho+n-j)(rho+n-j-1) + Q_j] c_{n-j}``.

Powers of ``z`` and ``1-z`` are principal-branch, so solutions are analytic on
the plane cut along ``(-inf, 0]`` and ``[1, +inf)`` intersected with the disc
of convergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .equations import EquationSpec, validate
from .errors import DomainError, RadiusError, ResonantExponents, TailError
from .precision import p_power

__all__ = [
    "FrobeniusSolution",
    "frobenius_series",
    "evaluate",
    "evaluate_deriv",
    "wronskian",
    "ode_residual",
    "potential",
    "convergence_radius",
]

_INDICIAL_TOL = 1e-10


def _padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0.0
        y = b[i] if i < len(b) else 0.0
        out.append(x + y)
    return out


def _pmul(a: list, b: list) -> list:
    out = [0.0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0.0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _pscale(a: list, s: Any) -> list:
    return [s * x for x in a]


def _pshift(a: list, h: Any) -> list:
    """Coefficients of p(w + h) given those of p(z), by synthetic Horner."""
    out: list = [0.0]
    for c in reversed(a):
        out = _padd(_pmul(out, [h, 1.0]), [c])
    return out


def _family_polys(spec: EquationSpec) -> tuple[list, list]:
    """Return (D, Q) with D psi'' + Q psi = 0 equivalent to the normal form."""
    t0, t1 = spec.theta0, spec.theta1
    z = [0.0, 1.0]
    zm1 = [-1.0, 1.0]
    z2 = _pmul(z, z)
    zm12 = _pmul(zm1, zm1)
    a0 = 0.25 - t0 * t0
    a1 = 0.25 - t1 * t1
    if spec.family == "HYP":
        ti = spec.theta_inf_hyp
        ch = t0 * t0 + t1 * t1 - ti * ti - 0.25
        d = _pmul(z2, zm12)
        q = _padd(
            _padd(_pscale(zm12, a0), _pscale(z2, a1)),
            _pscale(_pmul(z, zm1), ch),
        )
        return d, q
    if spec.family == "RCHE":
        om, lam = spec.omega, spec.lam
        c0 = t0 * t0 + t1 * t1 - om * om - 0.25
        d = _pmul(z2, zm12)
        # U(z) = c0 - lam z enters over z(z-1)
        u = [c0, -lam]
        q = _padd(
            _padd(_pscale(zm12, a0), _pscale(z2, a1)),
            _pmul(u, _pmul(z, zm1)),
        )
        return d, q
    if spec.family == "CHE":
        om, lam, ts = spec.omega, spec.lam, spec.theta_star
        c0 = t0 * t0 + t1 * t1 - om * om - 0.25
        d = _pmul(z2, zm12)
        q = _padd(
            _padd(_pscale(zm12, a0), _pscale(z2, a1)),
            _pscale(_pmul(z, zm1), c0),
        )
        q = _padd(q, _pscale(d, -lam * lam / 4.0))
        q = _padd(q, _pscale(_pmul(z, zm12), -lam * ts))
        return d, q
    # HE
    om, lam = spec.omega, spec.lam
    tt, ti = spec.theta_t, spec.theta_inf
    t = 1.0 / lam
    zmt = [-t, 1.0]
    zmt2 = _pmul(zmt, zmt)
    at = 0.25 - tt * tt
    c1 = t0 * t0 + t1 * t1 + tt * tt - ti * ti - 0.5
    c2 = (t - 1.0) * (om * om + tt * tt - ti * ti - 0.25)
    d = _pmul(_pmul(z2, zm12), zmt2)
    q = _padd(_pscale(_pmul(zm12, zmt2), a0), _pscale(_pmul(z2, zmt2), a1))
    q = _padd(q, _pscale(_pmul(z2, zm12), at))
    q = _padd(q, _pscale(_pmul(_pmul(z, zm1), zmt2), c1))
    q = _padd(q, _pscale(_pmul(_pmul(z, zm1), zmt), c2))
    return d, q


def potential(spec: EquationSpec, z: Any) -> Any:
    """Normal-form potential P(z), evaluated directly from its partial
    fractions (not via the cleared polynomials)."""
    t0, t1 = spec.theta0, spec.theta1
    a0 = 0.25 - t0 * t0
    a1 = 0.25 - t1 * t1
    if spec.family == "HYP":
        ti = spec.theta_inf_hyp
        ch = t0 * t0 + t1 * t1 - ti * ti - 0.25
        return a0 / (z * z) + a1 / ((z - 1) * (z - 1)) + ch / (z * (z - 1))
    if spec.family == "RCHE":
        om, lam = spec.omega, spec.lam
        c0 = t0 * t0 + t1 * t1 - om * om - 0.25
        return a0 / (z * z) + a1 / ((z - 1) * (z - 1)) + (c0 - lam * z) / (z * (z - 1))
    if spec.family == "CHE":
        om, lam, ts = spec.omega, spec.lam, spec.theta_star
        c0 = t0 * t0 + t1 * t1 - om * om - 0.25
        return (
            a0 / (z * z)
            + a1 / ((z - 1) * (z - 1))
            + c0 / (z * (z - 1))
            - lam * lam / 4.0
            - lam * ts / z
        )
    om, lam = spec.omega, spec.lam
    tt, ti = spec.theta_t, spec.theta_inf
    t = 1.0 / lam
    at = 0.25 - tt * tt
    c1 = t0 * t0 + t1 * t1 + tt * tt - ti * ti - 0.5
    c2 = (t - 1.0) * (om * om + tt * tt - ti * ti - 0.25)
    return (
        a0 / (z * z)
        + a1 / ((z - 1) * (z - 1))
        + at / ((z - t) * (z - t))
        + c1 / (z * (z - 1))
        + c2 / (z * (z - 1) * (z - t))
    )


@dataclass(frozen=True)
class FrobeniusSolution:
    """Truncated local solution: prefactor exponent and series coefficients.

    ``coeffs[k]`` multiplies ``(z - point)^k``; ``coeffs[0] = 1``.  The
    prefactor is ``z^exponent`` at ``point = 0`` and ``(1-z)^exponent`` at
    ``point = 1``.
    """

    spec: EquationSpec
    point: int
    sign: int
    exponent: Any
    coeffs: tuple
    K: int


def frobenius_series(spec: EquationSpec, point: int, sign: int, K: int) -> FrobeniusSolution:
    """Coefficients of the normalized local solution at ``point`` (0 or 1)
    with exponent ``1/2 - sign*theta`` truncated at order ``K``.

    Raises :class:`ResonantExponents` when a recurrence denominator
    ``n (n - 2 sign theta)`` vanishes for some ``1 <= n <= K`` (integer
    exponent difference, excluded by :func:`validate` but re-checked here).
    """
    validate(spec)
    if point not in (0, 1):
        raise DomainError(f"expansion point must be 0 or 1, got {point!r}")
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    if K < 1:
        raise DomainError("K must be at least 1")
    theta = spec.theta0 if point == 0 else spec.theta1
    rho = 0.5 - sign * theta
    d, q = _family_polys(spec)
    if point == 1:
        d = _pshift(d, 1.0)
        q = _pshift(q, 1.0)
    scale = max(abs(c) for c in d)
    if not (abs(d[0]) <= 1e-10 * scale and abs(d[1]) <= 1e-10 * scale):
        raise DomainError("cleared equation lacks the double root at the expansion point")
    e = d[2:]
    qw = list(q)
    # Indicial consistency: e0 rho (rho - 1) + q0 = 0.
    ind = e[0] * rho * (rho - 1) + qw[0]
    if abs(ind) > _INDICIAL_TOL * max(1.0, abs(qw[0])):
        raise DomainError(f"indicial equation violated: residual {abs(ind):.3e}")
    jmax = max(len(e), len(qw)) - 1
    ej = e + [0.0] * (jmax + 1 - len(e))
    qj = qw + [0.0] * (jmax + 1 - len(qw))
    c = [1.0 + 0 * rho]
    for n in range(1, K + 1):
        den_factor = n + 2 * rho - 1  # = n - 2 sign theta
        if abs(den_factor) < _INDICIAL_TOL:
            raise ResonantExponents(
                f"integer exponent difference at point {point}: n = {n} matches 2*theta"
            )
        den = e[0] * n * den_factor
        s = 0.0 * rho
        for j in range(1, min(n, jmax) + 1):
            rr = rho + n - j
            s = s + (ej[j] * rr * (rr - 1) + qj[j]) * c[n - j]
        c.append(-s / den)
    return FrobeniusSolution(
        spec=spec, point=point, sign=sign, exponent=rho, coeffs=tuple(c), K=K
    )


def convergence_radius(spec: EquationSpec, point: int) -> float:
    """Distance from the expansion point to the nearest other finite
    singularity (1 for every family except HE, where the point t = 1/lam can
    be closer to 1)."""
    if point not in (0, 1):
        raise DomainError(f"expansion point must be 0 or 1, got {point!r}")
    if spec.family != "HE":
        return 1.0
    t = 1.0 / complex(spec.lam)
    other = abs(t) if point == 0 else abs(t - 1.0)
    return min(1.0, other)


def _series_and_derivs(sol: FrobeniusSolution, w: Any) -> tuple:
    """Horner sums S(w), w S'(w), w^2 S''(w) of the truncated series."""
    s0 = 0.0 * w
    t1 = 0.0 * w
    t2 = 0.0 * w
    for k in range(sol.K, -1, -1):
        ck = sol.coeffs[k]
        s0 = s0 * w + ck
        t1 = t1 * w + k * ck
        t2 = t2 * w + (k * (k - 1)) * ck
    return s0, t1, t2


def _check_radius_and_tail(sol: FrobeniusSolution, z: Any, tol: Optional[float]) -> Any:
    w = z - sol.point
    r = convergence_radius(sol.spec, sol.point)
    if abs(w) >= r:
        raise RadiusError(
            f"|z - {sol.point}| = {abs(w):.6g} is outside the convergence radius {r:.6g}"
        )
    if tol is not None:
        last = abs(sol.coeffs[sol.K]) * abs(w) ** sol.K
        if last > tol:
            raise TailError(
                f"last retained term {last:.3e} exceeds requested tolerance {tol:.1e}"
            )
    return w


def _prefactor_base(sol: FrobeniusSolution, z: Any) -> Any:
    """Base of the principal-branch prefactor: z at point 0, 1-z at point 1."""
    return z if sol.point == 0 else 1.0 - z


def evaluate(sol: FrobeniusSolution, z: Any, tol: Optional[float] = None) -> Any:
    """Value of the truncated local solution at z (principal branches).

    Raises :class:`RadiusError` outside the open disc of convergence and, when
    ``tol`` is given, :class:`TailError` if the last retained term exceeds it.
    """
    w = _check_radius_and_tail(sol, z, tol)
    s0, _, _ = _series_and_derivs(sol, w)
    return p_power(_prefactor_base(sol, z), sol.exponent) * s0


def evaluate_deriv(sol: FrobeniusSolution, z: Any, tol: Optional[float] = None) -> Any:
    """d/dz of the truncated local solution at z."""
    w = _check_radius_and_tail(sol, z, tol)
    s0, t1, _ = _series_and_derivs(sol, w)
    rho = sol.exponent
    b = _prefactor_base(sol, z)
    inner = rho * s0 + t1  # = rho S + w S'(w)
    if sol.point == 0:
        return p_power(b, rho - 1) * inner
    return -p_power(b, rho - 1) * inner


def wronskian(sol_a: FrobeniusSolution, sol_b: FrobeniusSolution, z: Any) -> Any:
    """W(a, b)(z) = a(z) b'(z) - a'(z) b(z)."""
    return evaluate(sol_a, z) * evaluate_deriv(sol_b, z) - evaluate_deriv(sol_a, z) * evaluate(
        sol_b, z
    )


def ode_residual(spec: EquationSpec, sol: FrobeniusSolution, z: Any) -> Any:
    """Residual ``psi'' + P(z) psi`` of the truncated solution at z."""
    w = _check_radius_and_tail(sol, z, None)
    s0, t1, t2 = _series_and_derivs(sol, w)
    rho = sol.exponent
    b = _prefactor_base(sol, z)
    # Both points reduce to the same form in the Horner sums t1 = w S' and
    # t2 = w^2 S'' (the w -> -w flips cancel in the second derivative).
    psi2 = p_power(b, rho - 2) * (rho * (rho - 1) * s0 + 2 * rho * t1 + t2)
    psi = p_power(b, rho) * s0
    return psi2 + potential(spec, z) * psi
