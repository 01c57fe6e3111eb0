"""Connection coefficients between the local solution bases at 0 and 1.

The normalized solutions satisfy ``psi0_e(z) = sum_e' C(e theta0, e' theta1)
psi1_e'(z)`` with a single two-parameter function C; the 2x2 matrix over the
sign choices has ``det C = -theta0/theta1``.  Four independent computational
routes are implemented:

* ``cf``          — backward continued-fraction evaluation of the factors
  ``eta_k`` with ``ln a_inf = sum_k ln eta_k`` (plus ``-ln(1-lam)`` for HE),
  ladder-extrapolated in the truncation order;
* ``recurrence``  — forward iteration of the rescaled three-term recurrence
  ``a_k`` with the same ladder extrapolation of the limit;
* ``ss``          — large-order asymptotics of the series coefficients,
  ``C = pref * Gamma(2 theta1) * lim_k k^(1-2 theta1) u_k``, evaluated in
  high-precision arithmetic;
* ``wronskian``   — overlap of the truncated local series at a midpoint probe,
  ``C_{e e'} = -W(psi0_e, psi1_{-e'}) / (2 e' theta1)``.

The first three produce the scalar ``C(theta0, theta1)``; matrix entries come
from sign-flipped parameter sets.  All four agree within stated tolerances and
mutually certify each other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Any, Optional

import mpmath as mp

from .equations import (
    EquationSpec,
    alpha_beta,
    canonical_recurrence_step,
    validate,
)
from .errors import (
    BranchAmbiguity,
    CFBreakdown,
    DetCheckFailed,
    DomainError,
    MonodromyInconsistent,
    NonConvergence,
    TailError,
)
from .frobenius import frobenius_series, wronskian
from .precision import (
    DOUBLE,
    HIGH,
    is_mp,
    p_exp,
    p_log,
    p_power,
    spec_to_precision,
    to_complex,
)
from .richardson import extrapolate, geometric_ladder
from .special import gamma, log_gamma

__all__ = [
    "ConnectionMatrix",
    "METHODS",
    "fusion_cl",
    "eta_tail",
    "log_a_infinity_cf",
    "a_infinity_recurrence",
    "connection_scalar",
    "connection_matrix",
    "wronskian_connection",
    "schafke_schmidt_connection",
    "extract_sigma",
    "tail_determinant_limit",
    "det_residual",
]

METHODS = ("cf", "recurrence", "ss", "wronskian")

_LAMBDA_GATE = 0.9
_MAX_DEPTH = 2**20
_LEVELS = 5


@dataclass(frozen=True)
class ConnectionMatrix:
    """2x2 connection matrix over the sign choices at 0 (rows) and 1 (cols).

    ``entries`` maps the keys ``"++", "+-", "-+", "--"`` (row sign then column
    sign) to complex values; ``depth_or_K`` records the truncation the method
    settled on; ``err_estimate`` is an a-posteriori bound on the entrywise
    error; ``precision`` is the arithmetic backend that produced it.
    """

    entries: dict
    spec: EquationSpec
    method: str
    depth_or_K: int
    err_estimate: float
    precision: str = DOUBLE

    def __getitem__(self, key: str) -> complex:
        return self.entries[key]

    def det(self) -> complex:
        return (
            self.entries["++"] * self.entries["--"]
            - self.entries["+-"] * self.entries["-+"]
        )


def det_residual(matrix: ConnectionMatrix) -> float:
    """|det C + theta0/theta1| — zero in exact arithmetic."""
    sp = matrix.spec
    return abs(matrix.det() + complex(sp.theta0) / complex(sp.theta1))


def fusion_cl(
    theta0: Any, theta1: Any, theta_inf: Any, precision: Optional[str] = None
) -> Any:
    """Gamma-ratio connection factor

    ``Gamma(1-2 theta0) Gamma(2 theta1) / [Gamma(1/2+theta1-theta0+theta_inf)
    Gamma(1/2+theta1-theta0-theta_inf)]``,

    evaluated in log-gamma form so moderate parameters never overflow.
    Raises :class:`PoleError` when any gamma argument is within 1e-12 of a
    pole (e.g. ``theta1 -> 0``).
    """
    a = 0.5 + theta1 - theta0
    s = (
        log_gamma(1 - 2 * theta0, precision)
        + log_gamma(2 * theta1, precision)
        - log_gamma(a + theta_inf, precision)
        - log_gamma(a - theta_inf, precision)
    )
    if isinstance(s, (mp.mpf, mp.mpc)):
        return mp.exp(s)
    return cmath.exp(s)


def _check_lambda_gate(spec: EquationSpec, allow_large_coupling: bool) -> None:
    if spec.family in ("RCHE", "CHE") and abs(spec.lam) > _LAMBDA_GATE:
        if not allow_large_coupling:
            raise DomainError(
                f"|lam| = {abs(spec.lam):.4g} exceeds the series gate {_LAMBDA_GATE}; "
                "pass allow_large_coupling=True to override"
            )


def _seed_buffer(lam_abs: float) -> int:
    """Backward-sweep start offset so the unit-seed error is below 1e-18.

    The backward error contracts at least like |lam| per level once the
    coefficients have saturated, so ``|lam|**B < 1e-18`` suffices.
    """
    if lam_abs <= 0.0:
        return 1
    if lam_abs >= 1.0:
        return 4000
    b = int(math.ceil(-18.0 / math.log10(lam_abs))) + 8
    return min(4000, max(24, b))


def _eta_sweep(spec: EquationSpec, k_top: int, buffer: int) -> list:
    """Backward pass of ``eta_k = 1 - lam alpha_{k-1} - lam beta_k / eta_{k+1}``
    from a unit seed at ``k_top + buffer``; returns ``[eta_1, ..., eta_k_top]``.
    """
    lam = spec.lam
    watch_branch = abs(lam) > 0.3
    one = 1.0 + 0 * spec.theta0
    eta = one
    out = [one] * k_top
    for k in range(k_top + buffer, 0, -1):
        if abs(eta) < 1e-14:
            raise CFBreakdown(f"continued-fraction denominator vanished at k = {k + 1}")
        al_prev, _ = alpha_beta(spec, k - 1)
        _, be = alpha_beta(spec, k)
        eta = 1 - lam * al_prev - lam * be / eta
        if watch_branch and complex(eta).real <= 0.0:
            raise BranchAmbiguity(
                f"eta_{k} = {complex(eta):.6g} left the right half-plane; "
                "logarithm branch tracking is ambiguous"
            )
        if k <= k_top:
            out[k - 1] = eta
    return out


def eta_tail(spec: EquationSpec, k_start: int, depth: int) -> Any:
    """Continued-fraction factor ``eta_{k_start}`` evaluated with ``depth``
    levels below the start (unit seed at ``k_start + depth``)."""
    validate(spec)
    if k_start < 1 or depth < 0:
        raise DomainError("need k_start >= 1 and depth >= 0")
    lam = spec.lam
    one = 1.0 + 0 * spec.theta0
    eta = one
    for k in range(k_start + depth, k_start - 1, -1):
        if abs(eta) < 1e-14:
            raise CFBreakdown(f"continued-fraction denominator vanished at k = {k + 1}")
        al_prev, _ = alpha_beta(spec, k - 1)
        _, be = alpha_beta(spec, k)
        eta = 1 - lam * al_prev - lam * be / eta
    return eta


def _ladder_limit_of_partial_sums(
    terms: list, k_max: int
) -> tuple[Any, float]:
    """Extrapolate partial sums of ``terms[k-1] = f(k)`` over the geometric
    ladder ending at ``k_max``."""
    nodes = geometric_ladder(k_max, _LEVELS)
    sums = []
    acc = 0.0
    it = iter(nodes)
    nxt = next(it)
    for k in range(1, k_max + 1):
        acc = acc + terms[k - 1]
        if k == nxt:
            sums.append(acc)
            nxt = next(it, None)
    return extrapolate([1.0 / n for n in nodes], sums)


def log_a_infinity_cf(
    spec: EquationSpec,
    tol: float = 1e-10,
    max_depth: int = _MAX_DEPTH,
    allow_large_coupling: bool = False,
) -> tuple[Any, int, float]:
    """``ln a_inf`` by the continued-fraction route.

    Sums ``ln eta_k`` with ladder extrapolation of the truncated sums, doubling
    the truncation until two successive extrapolations agree within ``tol``
    (plus the unit-seed bound); for HE the exact shift ``-ln(1-lam)`` is added.
    Returns ``(value, depth, err_estimate)``; raises :class:`NonConvergence`
    past ``max_depth`` and :class:`DomainError` at the coupling gate.
    """
    validate(spec)
    _check_lambda_gate(spec, allow_large_coupling)
    lam = spec.lam
    if lam == 0:
        return 0.0, 0, 0.0
    lam_abs = abs(lam)
    buffer = _seed_buffer(lam_abs)
    seed_err = lam_abs**buffer if lam_abs < 1 else 1.0
    k_max = 2048
    prev = None
    while True:
        etas = _eta_sweep(spec, k_max, buffer)
        logs = [p_log(e) for e in etas]
        val, err = _ladder_limit_of_partial_sums(logs, k_max)
        total_err = float(err) + seed_err
        if prev is not None and abs(val - prev) < tol and total_err < 10 * tol:
            break
        if 2 * k_max > max_depth:
            raise NonConvergence(
                f"continued-fraction sum did not stabilise to {tol:.1e} "
                f"within depth {max_depth}"
            )
        prev = val
        k_max *= 2
    if spec.family == "HE":
        val = val - p_log(1 - lam)
    return val, k_max, total_err


def a_infinity_recurrence(
    spec: EquationSpec,
    K: int,
    tol: Optional[float] = None,
    allow_large_coupling: bool = False,
) -> tuple[Any, float]:
    """Raw forward iterate ``a_K`` of the rescaled recurrence with the
    half-way error estimate ``|a_K - a_{K/2}|``.

    With ``tol`` given, an estimate above it raises :class:`NonConvergence`.
    """
    validate(spec)
    _check_lambda_gate(spec, allow_large_coupling)
    if K < 2:
        raise DomainError("K must be at least 2")
    a_km1 = 0.0
    a_k = 1.0 + 0 * spec.theta0
    half = None
    for k in range(K):
        al, be = alpha_beta(spec, k)
        a_k, a_km1 = a_k - spec.lam * (al * a_k + be * a_km1), a_k
        if k + 1 == K // 2:
            half = a_k
    err = abs(a_k - half)
    if tol is not None and err > tol:
        raise NonConvergence(
            f"|a_K - a_K/2| = {err:.3e} exceeds requested tolerance {tol:.1e}"
        )
    return a_k, err


def _recurrence_limit(
    spec: EquationSpec,
    tol: float,
    max_K: int = _MAX_DEPTH,
    allow_large_coupling: bool = False,
) -> tuple[Any, int, float]:
    """Ladder-extrapolated limit of the rescaled iterates ``a_k``."""
    validate(spec)
    _check_lambda_gate(spec, allow_large_coupling)
    if spec.lam == 0:
        return 1.0, 0, 0.0
    k_max = 4096
    prev = None
    while True:
        nodes = geometric_ladder(k_max, _LEVELS)
        node_vals = []
        a_km1 = 0.0
        a_k = 1.0 + 0 * spec.theta0
        it = iter(nodes)
        nxt = next(it)
        for k in range(k_max):
            al, be = alpha_beta(spec, k)
            a_k, a_km1 = a_k - spec.lam * (al * a_k + be * a_km1), a_k
            if k + 1 == nxt:
                node_vals.append(a_k)
                nxt = next(it, None)
        val, err = extrapolate([1.0 / n for n in nodes], node_vals)
        if prev is not None and abs(val - prev) < tol and err < 10 * tol:
            break
        if 2 * k_max > max_K:
            raise NonConvergence(
                f"recurrence limit did not stabilise to {tol:.1e} within K = {max_K}"
            )
        prev = val
        k_max *= 2
    return val, k_max, err


def _assembly_prefactor(spec: EquationSpec) -> Any:
    """Family factor multiplying ``F_cl * a_inf`` in the connection scalar."""
    if spec.family == "CHE":
        return cmath.exp(complex(spec.lam) / 2.0)
    if spec.family == "HE":
        return p_power(1.0 - complex(spec.lam), 0.5 - complex(spec.theta_t))
    return 1.0


def _third_parameter(spec: EquationSpec) -> Any:
    return spec.theta_inf_hyp if spec.family == "HYP" else spec.omega


def _scalar_with_depth(
    spec: EquationSpec,
    method: str,
    tol: float,
    allow_large_coupling: bool,
    max_depth: int = _MAX_DEPTH,
) -> tuple[complex, float, int]:
    validate(spec)
    method = method.lower()
    work_precision = HIGH if is_mp(spec.theta0) else DOUBLE
    pref = fusion_cl(spec.theta0, spec.theta1, _third_parameter(spec), work_precision)
    if spec.family == "HYP" or spec.lam == 0:
        return to_complex(pref), 5e-15 * abs(pref), 0
    pref = pref * _assembly_prefactor(spec)
    if method == "cf":
        log_a, depth, err_l = log_a_infinity_cf(
            spec, tol=tol, max_depth=max_depth, allow_large_coupling=allow_large_coupling
        )
        val = pref * p_exp(log_a)
        return to_complex(val), float(abs(val)) * (err_l + 1e-14), depth
    if method == "recurrence":
        a_inf, depth, err_a = _recurrence_limit(
            spec, tol=tol, max_K=max_depth, allow_large_coupling=allow_large_coupling
        )
        val = pref * a_inf
        return to_complex(val), float(abs(pref)) * (float(err_a) + 1e-14), depth
    raise DomainError(
        f"connection_scalar supports methods 'cf' and 'recurrence', got {method!r}"
    )


def connection_scalar(
    spec: EquationSpec,
    method: str = "cf",
    tol: float = 1e-10,
    allow_large_coupling: bool = False,
    max_depth: int = _MAX_DEPTH,
) -> tuple[complex, float]:
    """Connection scalar ``C(theta0, theta1)`` by the ``cf`` or ``recurrence``
    route (for HYP the coupling vanishes and the gamma-ratio factor is exact).

    Returns ``(value, err_estimate)``.
    """
    val, err, _ = _scalar_with_depth(spec, method, tol, allow_large_coupling, max_depth)
    return val, err


def _flip_spec(spec: EquationSpec, s0: int, s1: int) -> EquationSpec:
    return replace(spec, theta0=s0 * spec.theta0, theta1=s1 * spec.theta1)


def schafke_schmidt_connection(
    spec: EquationSpec,
    K: int = 16384,
    levels: int = 4,
) -> complex:
    """Connection scalar from the large-order behaviour of the series
    coefficients: ``C = pref * Gamma(2 theta1) * lim_k k^(1-2 theta1) u_k``.

    The forward recurrence for ``u_k`` runs in high-precision arithmetic (the
    subdominant component grows like ``k^(4 |Re theta1|)`` relative to the
    limit, so binary64 iterates would contaminate the ladder); the limit is
    extrapolated over the geometric ladder ``K/2^j``.  Requires
    ``|Re 2 theta1| < 4``.
    """
    validate(spec)
    th1 = complex(spec.theta1)
    if abs(2 * th1.real) >= 4.0:
        raise DomainError(
            f"large-order route needs |Re 2 theta1| < 4, got {2 * th1.real:.3g}"
        )
    if K < 2 ** (levels - 1) or K % 2 ** (levels - 1) != 0:
        raise DomainError("K must be divisible by 2**(levels-1)")
    dps = max(30, 20 + int(4 * abs(th1.real) * math.log10(max(K, 10))) + 10)
    with mp.workdps(dps):
        msp = spec_to_precision(spec, HIGH)
        nodes = geometric_ladder(K, levels)
        expo = 1 - 2 * msp.theta1
        gam = gamma(2 * msp.theta1, HIGH)
        pref = _assembly_prefactor(spec)
        u_km1 = mp.mpf(0)
        u_k = mp.mpf(1)
        vals = []
        it = iter(nodes)
        nxt = next(it)
        for k in range(K):
            u_k, u_km1 = canonical_recurrence_step(msp, k, u_k, u_km1), u_k
            if k + 1 == nxt:
                vals.append(mp.power(k + 1, expo) * u_k)
                nxt = next(it, None)
        limit, err = extrapolate(
            [mp.mpf(1) / n for n in nodes], vals, require_contraction=True
        )
        out = to_complex(gam * limit) * pref
    return out


def wronskian_connection(
    spec: EquationSpec,
    z_probe: complex = 0.5,
    K: Optional[int] = None,
    series_tol: float = 1e-15,
) -> ConnectionMatrix:
    """All four connection entries from Wronskians of the truncated local
    solutions at a probe point:

    ``C_{e+} = -W(psi0_e, psi1_-)/(2 theta1)``,
    ``C_{e-} = +W(psi0_e, psi1_+)/(2 theta1)``.

    With ``K=None`` the truncation grows geometrically (capped at 10^4) until
    the last retained terms at the probe are below ``series_tol``.
    """
    validate(spec)
    r = max(abs(complex(z_probe)), abs(1.0 - complex(z_probe)))
    if K is None:
        K = 64
        while True:
            sols = [frobenius_series(spec, pt, sg, K) for pt in (0, 1) for sg in (1, -1)]
            worst = max(abs(s.coeffs[K]) * r**K for s in sols)
            if worst < series_tol:
                break
            if K >= 10000:
                raise TailError(
                    f"series tail {worst:.3e} at probe still above {series_tol:.1e} "
                    f"at the K = 10^4 cap"
                )
            K *= 2
    else:
        sols = [frobenius_series(spec, pt, sg, K) for pt in (0, 1) for sg in (1, -1)]
    s0p, s0m, s1p, s1m = sols
    t1 = spec.theta1
    entries = {}
    for row_sign, s0 in (("+", s0p), ("-", s0m)):
        w_minus = wronskian(s0, s1m, z_probe)
        w_plus = wronskian(s0, s1p, z_probe)
        entries[row_sign + "+"] = to_complex(-w_minus / (2 * t1))
        entries[row_sign + "-"] = to_complex(w_plus / (2 * t1))
    # Self-Wronskian defects measure the truncation quality.
    w00 = wronskian(s0p, s0m, z_probe)
    w11 = wronskian(s1p, s1m, z_probe)
    err = abs(w00 - 2 * spec.theta0) + abs(w11 + 2 * spec.theta1) + 1e-14
    return ConnectionMatrix(
        entries=entries,
        spec=spec,
        method="wronskian",
        depth_or_K=K,
        err_estimate=float(err),
    )


def connection_matrix(
    spec: EquationSpec,
    method: str = "cf",
    tol: float = 1e-10,
    allow_large_coupling: bool = False,
    det_tol_factor: float = 100.0,
    max_depth: int = _MAX_DEPTH,
) -> ConnectionMatrix:
    """2x2 connection matrix by any route, with the determinant identity
    ``det C = -theta0/theta1`` enforced at ``det_tol_factor * tol``
    (:class:`DetCheckFailed` beyond)."""
    validate(spec)
    method = method.lower()
    if method not in METHODS:
        raise DomainError(f"method must be one of {METHODS}, got {method!r}")
    if method == "wronskian":
        matrix = wronskian_connection(spec)
    else:
        entries = {}
        worst = 0.0
        depth = 0
        precision = HIGH if is_mp(spec.theta0) else DOUBLE
        for s0, row in ((1, "+"), (-1, "-")):
            for s1, col in ((1, "+"), (-1, "-")):
                fspec = validate(_flip_spec(spec, s0, s1))
                if method == "ss":
                    val = schafke_schmidt_connection(fspec)
                    err = 1e-8 * max(1.0, abs(val))
                    precision = HIGH
                    depth = max(depth, 16384)
                else:
                    val, err, d = _scalar_with_depth(
                        fspec, method, tol, allow_large_coupling, max_depth
                    )
                    depth = max(depth, d)
                entries[row + col] = val
                worst = max(worst, err)
        matrix = ConnectionMatrix(
            entries=entries,
            spec=spec,
            method=method,
            depth_or_K=depth,
            err_estimate=worst,
            precision=precision,
        )
    resid = det_residual(matrix)
    # The determinant can only be certified to the accuracy of the method
    # that produced the entries.
    det_gate = det_tol_factor * max(tol, matrix.err_estimate)
    if resid > det_gate:
        raise DetCheckFailed(
            f"|det C + theta0/theta1| = {resid:.3e} exceeds {det_gate:.1e}"
        )
    return matrix


def extract_sigma(matrix: ConnectionMatrix, tol: float = 1e-8) -> complex:
    """Composite-monodromy exponent sigma from the connection entries.

    Uses ``cos 2 pi sigma = [bc cos 2pi(theta0-theta1) - ad cos 2pi(theta0+theta1)]
    / (ad - bc)`` with ``(a,b,c,d) = (C_++, C_+-, C_-+, C_--)``, fixes the
    branch to ``Re sigma in [0, 1)`` with ``Im sigma >= 0`` as tie-break, and
    cross-checks both product relations

    ``C_++ C_-- = -(theta0/theta1) cos pi(theta1-theta0+sigma)
    cos pi(theta1-theta0-sigma) / (sin 2pi theta0 sin 2pi theta1)``

    (and the same with ``theta1+theta0`` for ``C_+- C_-+``); a relative
    violation beyond ``tol`` raises :class:`MonodromyInconsistent`.
    """
    sp = matrix.spec
    t0, t1 = complex(sp.theta0), complex(sp.theta1)
    a = matrix["++"]
    b = matrix["+-"]
    c = matrix["-+"]
    d = matrix["--"]
    det = a * d - b * c
    two_pi = 2.0 * math.pi
    cos_diff = cmath.cos(two_pi * (t0 - t1))
    cos_sum = cmath.cos(two_pi * (t0 + t1))
    cos_2pi_sigma = (b * c * cos_diff - a * d * cos_sum) / det
    sigma = cmath.acos(cos_2pi_sigma) / two_pi
    if sigma.imag < 0.0:
        sigma = 1.0 - sigma
    sigma = complex(sigma.real % 1.0, sigma.imag)
    denom = cmath.sin(two_pi * t0) * cmath.sin(two_pi * t1)
    scale = max(abs(a * d), abs(b * c), 1e-300)
    for prod, base in ((a * d, t1 - t0), (b * c, t1 + t0)):
        rhs = (
            -(t0 / t1)
            * cmath.cos(math.pi * (base + sigma))
            * cmath.cos(math.pi * (base - sigma))
            / denom
        )
        if abs(prod - rhs) > tol * scale:
            raise MonodromyInconsistent(
                f"product relation violated: |{prod:.8g} - {rhs:.8g}| "
                f"= {abs(prod - rhs):.3e} > {tol:.1e} * {scale:.3g}"
            )
    return sigma


def tail_determinant_limit(
    spec: EquationSpec,
    N: int = 10000,
    levels: int = 4,
) -> tuple[complex, float]:
    """Limit of the tail determinants ``D_{N+1}`` of the semi-infinite
    tridiagonal system as ``N -> infinity``.

    ``D_{N+1}`` is the determinant of the system restricted to rows ``k > N``;
    its truncations obey ``P_m = (1 - lam alpha_{N+m-1}) P_{m-1}
    - lam beta_{N+m-1} P_{m-2}`` and converge geometrically in ``m``
    (characteristic roots 1 and ``lam``), so a fixed row count suffices; the
    residual ``N``-dependence is algebraic and is removed over the ladder
    ``{N/2^j}``.  For HE the limit is ``1/(1-lam)``; for RCHE/CHE it is 1.
    """
    validate(spec)
    lam = spec.lam
    if lam == 0:
        return 1.0 + 0j, 0.0
    lam_abs = min(abs(lam), 0.95)
    rows = max(96, int(52.0 / -math.log10(lam_abs)) + 64) if lam_abs > 0 else 96
    if N < 2 ** (levels - 1) or N % 2 ** (levels - 1) != 0:
        raise DomainError("N must be divisible by 2**(levels-1)")
    nodes = geometric_ladder(N, levels)
    vals = []
    for n_j in nodes:
        p_mm2 = 1.0 + 0 * spec.theta0
        al, _ = alpha_beta(spec, n_j)
        p_mm1 = 1 - lam * al
        for m in range(2, rows + 1):
            al, be = alpha_beta(spec, n_j + m - 1)
            p_mm1, p_mm2 = (1 - lam * al) * p_mm1 - lam * be * p_mm2, p_mm1
        vals.append(p_mm1)
    limit, err = extrapolate([1.0 / n for n in nodes], vals)
    return to_complex(limit), float(err)
