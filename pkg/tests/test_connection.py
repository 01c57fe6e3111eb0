"""Connection amplitudes and matrices: four routes, guards, and invariants."""

from __future__ import annotations

import pytest

import oracles
from conftest import matrix_rel_diff, oracle_matrix, rel_diff
from heunconn import (
    METHODS,
    BranchAmbiguity,
    DomainError,
    NonConvergence,
    a_infinity_recurrence,
    connection_matrix,
    connection_scalar,
    det_residual,
    eta_tail,
    extract_sigma,
    extrapolate,
    fusion_cl,
    geometric_ladder,
    he_spec,
    log_a_infinity_cf,
    rche_spec,
    schafke_schmidt_connection,
    tail_determinant_limit,
)

RUNS = {
    "HYP": oracles.RUN_HYP,
    "RCHE": oracles.RUN_RCHE,
    "CHE": oracles.RUN_CHE,
    "HE": oracles.RUN_HE,
}
EXAMPLE_FIXTURES = {
    "HYP": "hyp_example",
    "RCHE": "rche_example",
    "CHE": "che_example",
    "HE": "he_example",
}
# Frozen-value agreement observed well below these bounds; the bounds leave
# an order of magnitude of slack for platform-dependent rounding.
METHOD_TOL = {"cf": 1e-11, "recurrence": 1e-11, "wronskian": 1e-11, "ss": 1e-12}


class TestFusionFormula:
    @pytest.mark.parametrize("key", sorted(oracles.FCL_SPOTS))
    def test_spot(self, key):
        t0, t1, ti = (float(p) for p in key.split("|"))
        want = oracles.cplx(oracles.FCL_SPOTS[key])
        assert rel_diff(fusion_cl(t0, t1, ti), want) <= 1e-13

    def test_complex_arguments(self):
        v = fusion_cl(0.1 + 0.02j, 0.2 - 0.01j, 0.3)
        assert v == v  # finite, no NaN


class TestMatrixRoutes:
    def test_method_names(self):
        assert METHODS == ("cf", "recurrence", "ss", "wronskian")

    @pytest.mark.parametrize("family", ["HYP", "RCHE", "CHE", "HE"])
    @pytest.mark.parametrize("method", ["cf", "recurrence", "ss", "wronskian"])
    def test_matrix_matches_frozen(self, request, family, method):
        spec = request.getfixturevalue(EXAMPLE_FIXTURES[family])
        mat = connection_matrix(spec, method=method)
        ref = oracle_matrix(RUNS[family])
        assert matrix_rel_diff(mat.entries, ref) <= METHOD_TOL[method]
        assert mat.method == method
        assert det_residual(mat) <= 1e-10

    def test_scalar_is_plus_plus_entry(self, rche_example):
        val, err = connection_scalar(rche_example)
        mat = connection_matrix(rche_example)
        assert rel_diff(val, mat["++"]) <= 1e-13
        assert err < 1e-8

    def test_determinant_value(self, he_example):
        mat = connection_matrix(he_example)
        want = -he_example.theta0 / he_example.theta1
        assert rel_diff(mat.det(), want) <= 1e-10

    def test_recurrence_truncation_tail_is_first_order(self, che_example):
        # The raw truncated value carries an O(1/K) tail: doubling K should
        # roughly halve the distance to the extrapolated limit.
        ks = geometric_ladder(8192, 4)
        vals = [a_infinity_recurrence(che_example, k)[0] for k in ks]
        limit, _ = extrapolate([1.0 / k for k in ks], vals)
        d_small, d_big = abs(vals[0] - limit), abs(vals[-1] - limit)
        assert 6.0 <= d_small / d_big <= 10.0  # 2^3 = 8 up to higher orders

    def test_ss_standalone_matches_cf(self, rche_example):
        ss = schafke_schmidt_connection(rche_example)
        val, _ = connection_scalar(rche_example, method="cf")
        assert rel_diff(ss, val) <= 1e-10


class TestContinuedFraction:
    def test_log_amplitude_exponentiates(self, rche_example):
        import cmath

        log_a, depth, err = log_a_infinity_cf(rche_example)
        ks = geometric_ladder(16384, 4)
        vals = [a_infinity_recurrence(rche_example, k)[0] for k in ks]
        a_inf, _ = extrapolate([1.0 / k for k in ks], vals)
        assert rel_diff(cmath.exp(log_a), a_inf) <= 1e-10
        assert depth >= 16
        assert err < 1e-10

    def test_eta_tail_approaches_one(self, rche_example):
        assert abs(eta_tail(rche_example, 10**6, 8) - 1.0) <= 1e-6

    def test_hyp_log_amplitude_is_zero(self, hyp_example):
        log_a, _, _ = log_a_infinity_cf(hyp_example)
        assert abs(log_a) <= 1e-14


class TestSigma:
    @pytest.mark.parametrize("lam_key", sorted(oracles.SIGMA_HE))
    def test_extract_sigma_matches_frozen(self, lam_key):
        d = oracles.RUN_HE
        spec = he_spec(
            float(d["theta0"]),
            float(d["theta1"]),
            float(d["theta_t"]),
            float(d["theta_inf"]),
            float(d["omega"]),
            float(lam_key),
        )
        sigma = extract_sigma(connection_matrix(spec))
        want = oracles.cplx(oracles.SIGMA_HE[lam_key])
        assert rel_diff(sigma, want) <= 1e-11


class TestGuardsAndLimits:
    def test_coupling_gate(self):
        with pytest.raises(DomainError):
            connection_scalar(rche_spec(0.1, 0.2, 0.3, 0.95))

    def test_branch_guard_near_amplitude_zero(self):
        # For these parameters the amplitude crosses zero below lam = 0.95,
        # so even with the gate overridden the log-branch guard must fire.
        with pytest.raises(BranchAmbiguity):
            connection_scalar(
                rche_spec(0.1, 0.2, 0.3, 0.95), allow_large_coupling=True
            )

    def test_coupling_override_when_branch_is_safe(self):
        spec = he_spec(0.11, 0.27, 0.33, 0.41, 0.37, 0.92)
        val, err = connection_scalar(spec, allow_large_coupling=True)
        assert err < 1e-8 and abs(val) > 0.01

    def test_nonconvergence_at_tiny_depth(self, rche_example):
        with pytest.raises(NonConvergence):
            connection_scalar(rche_example, max_depth=64)

    def test_ss_theta1_gate(self):
        with pytest.raises(DomainError):
            schafke_schmidt_connection(he_spec(0.11, 2.1, 0.33, 0.41, 0.37, 0.1))

    def test_tail_determinant_he(self, he_example):
        D, err = tail_determinant_limit(he_example, N=10000)
        assert rel_diff(D, 1.0 / (1.0 - he_example.lam)) <= 1e-8

    def test_tail_determinant_rche_is_one(self, rche_example):
        D, _ = tail_determinant_limit(rche_example, N=10000)
        assert rel_diff(D, 1.0) <= 1e-8
