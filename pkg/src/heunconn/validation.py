"""Cross-method and cross-module consistency harness.

Each ``verify_*`` operation measures a residual that is small only when
several independent code paths agree (series evaluation vs connection
matrix, one-parameter family limits, reflected-equation solutions), so a
pass certifies the pipeline end to end rather than any single formula.
``full_report`` aggregates every check applicable to a spec's family;
parameter degeneracies surface as failed entries, never as crashes.
"""

from __future__ import annotations

import cmath
import time
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .connection import (
    ConnectionMatrix,
    connection_matrix,
    det_residual,
    extract_sigma,
    tail_determinant_limit,
)
from .equations import EquationSpec, che_spec, he_spec, validate
from .errors import DomainError, FamilyFieldError, HeunConnError, ReflectionMismatch
from .frobenius import (
    convergence_radius,
    evaluate,
    frobenius_series,
    ode_residual,
    potential,
)
from .perturbative import (
    c1_closed_he,
    c1_closed_rche,
    c2_closed_rche,
    c_coefficients,
    sigma1_closed,
)
from .richardson import extrapolate

__all__ = [
    "CheckResult",
    "ValidationReport",
    "CheckConfig",
    "verify_connection_identity",
    "verify_che_as_he_limit",
    "verify_reflection",
    "full_report",
]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one consistency check."""

    name: str
    passed: bool
    residual: float
    tol: float
    runtime: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return (
            f"{status}  {self.name}: residual {self.residual:.3e} "
            f"vs tol {self.tol:.1e} in {self.runtime:.2f}s{extra}"
        )


@dataclass(frozen=True)
class ValidationReport:
    """Aggregated check results for one spec."""

    spec: EquationSpec
    checks: tuple = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> str:
        head = f"validation report for {self.spec.family} spec: " + (
            "ALL PASS" if self.passed else "FAILURES PRESENT"
        )
        return "\n".join([head] + [c.line() for c in self.checks])

    def as_dict(self) -> dict:
        return {
            "family": self.spec.family,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "residual": c.residual,
                    "tol": c.tol,
                    "runtime": c.runtime,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


@dataclass(frozen=True)
class CheckConfig:
    """Tolerances and knobs for ``full_report``; defaults are the measured
    precision floors of each route at double precision."""

    z_list: tuple = (0.3, 0.5, 0.7)
    K: int = 400
    tol_identity: float = 1e-9
    tol_det: float = 1e-10
    tol_method: float = 1e-8
    tol_ss: float = 1e-6
    tol_monodromy: float = 1e-8
    tol_closed: float = 1e-8
    tol_limit: float = 1e-3
    Lambda: float = 1e4
    tol_reflection: float = 1e-8
    tol_tail: float = 1e-8
    matrix_tol: float = 1e-10
    include_slow: bool = True


def _timed(name: str, tol: float, fn) -> CheckResult:
    start = time.perf_counter()
    try:
        residual, detail = fn()
    except HeunConnError as exc:
        return CheckResult(
            name,
            False,
            float("nan"),
            tol,
            time.perf_counter() - start,
            f"{type(exc).__name__}: {exc}",
        )
    return CheckResult(
        name, bool(residual < tol), float(residual), tol, time.perf_counter() - start, detail
    )


def verify_connection_identity(
    spec: EquationSpec,
    z_list: Sequence[float] = (0.3, 0.5, 0.7),
    K: int = 400,
    tol: float = 1e-9,
    matrix: Optional[ConnectionMatrix] = None,
    matrix_tol: float = 1e-10,
) -> CheckResult:
    """Evaluate both Frobenius bases at interior points and compare
    ``psi0_eps`` against ``sum_eps' C[eps eps'] psi1_eps'`` entrywise.

    The residual is relative to ``|psi0_eps|``; the matrix defaults to the
    continued-fraction route.
    """
    validate(spec)

    def run():
        mat = (
            matrix
            if matrix is not None
            else connection_matrix(spec, method="cf", tol=matrix_tol)
        )
        sols0 = {s: frobenius_series(spec, 0, 1 if s == "+" else -1, K) for s in ("+", "-")}
        sols1 = {s: frobenius_series(spec, 1, 1 if s == "+" else -1, K) for s in ("+", "-")}
        r0 = convergence_radius(spec, 0)
        r1 = convergence_radius(spec, 1)
        worst = 0.0
        for z in z_list:
            if not (0.0 < z < 1.0) or abs(z) >= r0 or abs(1 - z) >= r1:
                raise DomainError(
                    f"probe point {z} lies outside both series' convergence domains"
                )
            for eps in ("+", "-"):
                lhs = evaluate(sols0[eps], z)
                rhs = mat[eps + "+"] * evaluate(sols1["+"], z) + mat[
                    eps + "-"
                ] * evaluate(sols1["-"], z)
                worst = max(worst, abs(lhs - rhs) / abs(lhs))
        return worst, f"max over {len(z_list)} points x 2 signs, K={K}"

    return _timed("connection_identity", tol, run)


def che_to_he_spec(spec: EquationSpec, Lambda: float) -> EquationSpec:
    """The HE spec whose large-``Lambda`` limit reproduces a CHE spec:
    ``theta_t = (Lambda + theta_star)/2``, ``theta_inf = (Lambda - theta_star)/2``,
    ``lam_he = lam_che / Lambda``."""
    if spec.family != "CHE":
        raise FamilyFieldError(f"limit check starts from a CHE spec, got {spec.family}")
    validate(spec)
    if Lambda < 1e3:
        raise DomainError(f"Lambda must be at least 1e3 for the limit regime, got {Lambda}")
    lam_he = spec.lam / Lambda
    if abs(lam_he) >= 1.0:
        raise DomainError("induced coupling must satisfy |lam/Lambda| < 1")
    return he_spec(
        spec.theta0,
        spec.theta1,
        omega=spec.omega,
        theta_t=(Lambda + spec.theta_star) / 2.0,
        theta_inf=(Lambda - spec.theta_star) / 2.0,
        lam=lam_he,
    )


def verify_che_as_he_limit(
    spec: EquationSpec,
    Lambda: float = 1e4,
    tol: float = 1e-3,
    method: str = "wronskian",
    matrix_tol: float = 1e-10,
) -> CheckResult:
    """Compare the CHE connection matrix against the HE matrix at large
    ``Lambda``; the entrywise relative difference should be O(1/Lambda).

    The HE matrix is computed by the Wronskian route by default: its series
    evaluation is insensitive to the large parameters, whereas the
    continued-fraction ladder would need depths beyond ``Lambda`` to reach
    its asymptotic regime.
    """

    def run():
        che_mat = connection_matrix(spec, method="cf", tol=matrix_tol)
        he_sp = che_to_he_spec(spec, Lambda)
        he_mat = connection_matrix(he_sp, method=method, tol=matrix_tol)
        worst = 0.0
        for key in ("++", "+-", "-+", "--"):
            worst = max(worst, abs(che_mat[key] - he_mat[key]) / abs(che_mat[key]))
        return worst, f"Lambda={Lambda:g}, HE route={method}"

    return _timed("che_as_he_limit", tol, run)


def reflected_spec(spec: EquationSpec) -> EquationSpec:
    """Parameters of the equation satisfied by ``psi(1 - z)``.

    Swapping the regular points 0 and 1 exchanges ``theta0`` and ``theta1``
    and flips the coupling; completing the partial fractions shifts the
    spectral parameter: ``omega**2 -> omega**2 + lam`` (RCHE) or
    ``omega**2 -> omega**2 - lam*theta_star`` (CHE).  The transform is
    certified numerically by the caller, not trusted.
    """
    validate(spec)
    if spec.family == "RCHE":
        om2 = spec.omega**2 + spec.lam
        return replace(
            spec, theta0=spec.theta1, theta1=spec.theta0, lam=-spec.lam, omega=cmath.sqrt(om2)
        )
    if spec.family == "CHE":
        om2 = spec.omega**2 - spec.lam * spec.theta_star
        return replace(
            spec, theta0=spec.theta1, theta1=spec.theta0, lam=-spec.lam, omega=cmath.sqrt(om2)
        )
    raise FamilyFieldError(f"reflection transform covers RCHE and CHE, got {spec.family}")


def verify_reflection(
    spec: EquationSpec,
    tol: float = 1e-8,
    strict: bool = False,
    matrix_tol: float = 1e-10,
) -> CheckResult:
    """Certify the z -> 1-z transform end to end.

    Three residuals, reported as their max: the reflected potential equals
    the original at mirrored points; reflected Frobenius solutions satisfy
    the original equation's mirrored normal form (via their own
    ode-residual); and the reflected connection matrix equals the inverse of
    the original.  With ``strict`` a failure raises
    :class:`ReflectionMismatch` instead of returning a failed result.
    """

    def run():
        refl = reflected_spec(spec)
        pot_res = 0.0
        for w in (0.2, 0.45, 0.8):
            a = potential(refl, w)
            b = potential(spec, 1.0 - w)
            pot_res = max(pot_res, abs(a - b) / max(1.0, abs(b)))
        ode_res = 0.0
        for point, sign in ((0, 1), (1, -1)):
            sol = frobenius_series(refl, point, sign, 220)
            z0 = 0.35 if point == 0 else 0.65
            ode_res = max(ode_res, abs(ode_residual(refl, sol, z0)))
        mat = connection_matrix(spec, method="cf", tol=matrix_tol)
        mat_r = connection_matrix(refl, method="cf", tol=matrix_tol)
        a, b = mat["++"], mat["+-"]
        c, d = mat["-+"], mat["--"]
        det = a * d - b * c
        inv = {"++": d / det, "+-": -b / det, "-+": -c / det, "--": a / det}
        mat_res = max(abs(mat_r[k] - inv[k]) / abs(inv[k]) for k in inv)
        worst = max(pot_res, ode_res, mat_res)
        return worst, (
            f"potential {pot_res:.1e}, ode {ode_res:.1e}, matrix-vs-inverse {mat_res:.1e}"
        )

    result = _timed("reflection", tol, run)
    if strict and not result.passed:
        raise ReflectionMismatch(
            f"reflection check failed: residual {result.residual:.3e} "
            f"above {tol:.1e} ({result.detail})"
        )
    return result


def _check_determinant(spec: EquationSpec, tol: float, matrix_tol: float) -> CheckResult:
    def run():
        mat = connection_matrix(spec, method="cf", tol=matrix_tol)
        return det_residual(mat), "cf route"

    return _timed("determinant", tol, run)


def _check_method_agreement(
    spec: EquationSpec, other: str, tol: float, matrix_tol: float
) -> CheckResult:
    def run():
        base = connection_matrix(spec, method="cf", tol=matrix_tol)
        alt = connection_matrix(spec, method=other, tol=matrix_tol)
        worst = max(abs(base[k] - alt[k]) / abs(base[k]) for k in ("++", "+-", "-+", "--"))
        return worst, "entrywise vs cf"

    return _timed(f"method_agreement_{other}", tol, run)


def _check_monodromy(spec: EquationSpec, tol: float, matrix_tol: float) -> CheckResult:
    def run():
        mat = connection_matrix(spec, method="cf", tol=matrix_tol)
        sigma = extract_sigma(mat, tol=tol)
        # extract_sigma already enforces both product relations at tol;
        # re-measure the worse of the two for the report.
        t0, t1 = mat.spec.theta0, mat.spec.theta1
        a, b = mat["++"], mat["+-"]
        c, d = mat["-+"], mat["--"]
        s0, s1 = cmath.pi * 2 * t0, cmath.pi * 2 * t1
        denom = cmath.sin(s0) * cmath.sin(s1)
        scale = max(abs(a * d), abs(b * c))
        p1 = a * d + (t0 / t1) * cmath.cos(cmath.pi * (t1 - t0 + sigma)) * cmath.cos(
            cmath.pi * (t1 - t0 - sigma)
        ) / denom
        p2 = b * c + (t0 / t1) * cmath.cos(cmath.pi * (t1 + t0 + sigma)) * cmath.cos(
            cmath.pi * (t1 + t0 - sigma)
        ) / denom
        res = max(abs(p1), abs(p2)) / scale
        return res, f"sigma={sigma:.12g}"

    return _timed("monodromy_products", tol, run)


def _check_sigma_slope(spec: EquationSpec, tol: float, matrix_tol: float) -> CheckResult:
    def run():
        target = sigma1_closed(spec)
        lams = (0.02, 0.04, 0.08)
        slopes = []
        for lam in lams:
            sp = replace(spec, lam=lam)
            mat = connection_matrix(sp, method="cf", tol=matrix_tol)
            sigma = extract_sigma(mat)
            slopes.append((sigma - spec.omega) / lam)
        slope0, _ = extrapolate(list(lams), slopes)
        res = abs(slope0 - target) / abs(target)
        return res, f"extrapolated slope {slope0.real:.8g} vs closed {target.real:.8g}"

    return _timed("sigma_slope_vs_closed", tol, run)


def _check_series_closed(spec: EquationSpec, tol: float) -> CheckResult:
    def run():
        if spec.family == "RCHE":
            cs = c_coefficients(spec, 2)
            refs = (c1_closed_rche(spec), c2_closed_rche(spec))
        else:
            cs = c_coefficients(spec, 1)
            refs = (c1_closed_he(spec),)
        worst = max(
            abs(got - ref) / max(1.0, abs(ref)) for got, ref in zip(cs, refs)
        )
        return worst, f"{len(refs)} closed-form coefficient(s)"

    return _timed("series_vs_closed_forms", tol, run)


def _check_tail_determinant(spec: EquationSpec, tol: float) -> CheckResult:
    def run():
        val, _err = tail_determinant_limit(spec, N=10000)
        target = 1.0 / (1.0 - spec.lam) if spec.family == "HE" else 1.0
        res = abs(val - target) / abs(target)
        return res, f"limit {val.real:.10g} vs closed {target:.10g}"

    return _timed("tail_determinant", tol, run)


def full_report(spec: EquationSpec, config: Optional[CheckConfig] = None) -> ValidationReport:
    """Run every check applicable to the spec's family and aggregate.

    Failures (including parameter degeneracies raised as library errors)
    become failed entries; the call itself does not raise.
    """
    validate(spec)
    if config is None:
        config = CheckConfig()
    mtol = config.matrix_tol
    checks: list[CheckResult] = []
    checks.append(
        verify_connection_identity(
            spec, z_list=config.z_list, K=config.K, tol=config.tol_identity,
            matrix_tol=mtol,
        )
    )
    checks.append(_check_determinant(spec, config.tol_det, mtol))
    for other in ("recurrence", "wronskian"):
        checks.append(_check_method_agreement(spec, other, config.tol_method, mtol))
    if abs(2.0 * complex(spec.theta1).real) < 4.0:
        checks.append(_check_method_agreement(spec, "ss", config.tol_ss, mtol))
    checks.append(_check_monodromy(spec, config.tol_monodromy, mtol))
    if spec.family == "HE" and config.include_slow:
        checks.append(_check_sigma_slope(spec, config.tol_limit, mtol))
    if spec.family in ("RCHE", "HE"):
        checks.append(_check_series_closed(spec, config.tol_closed))
    if spec.family == "CHE" and config.include_slow:
        checks.append(
            verify_che_as_he_limit(
                spec, Lambda=config.Lambda, tol=config.tol_limit, matrix_tol=mtol
            )
        )
    if spec.family in ("RCHE", "CHE"):
        checks.append(
            verify_reflection(spec, tol=config.tol_reflection, matrix_tol=mtol)
        )
    if spec.family != "HYP" and config.include_slow:
        checks.append(_check_tail_determinant(spec, config.tol_tail))
    return ValidationReport(spec=spec, checks=tuple(checks))
