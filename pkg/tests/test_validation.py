"""Self-check layer: identity/reflection/limit checks and the full report."""

from __future__ import annotations

import dataclasses

import pytest

from heunconn import (
    CheckConfig,
    DomainError,
    FamilyFieldError,
    ReflectionMismatch,
    connection_matrix,
    full_report,
    rche_spec,
    verify_che_as_he_limit,
    verify_connection_identity,
    verify_reflection,
)
from heunconn.validation import che_to_he_spec, reflected_spec

FAST = CheckConfig(include_slow=False)


class TestConnectionIdentity:
    def test_passes_on_example(self, rche_example):
        r = verify_connection_identity(rche_example)
        assert r.passed and r.residual <= 1e-9

    def test_fails_on_corrupted_matrix(self, rche_example):
        mat = connection_matrix(rche_example)
        bad = dataclasses.replace(
            mat, entries={**mat.entries, "++": mat.entries["++"] * 1.01}
        )
        r = verify_connection_identity(rche_example, matrix=bad)
        assert not r.passed and r.residual > 1e-4

    def test_points_outside_radius_fail_cleanly(self, rche_example):
        r = verify_connection_identity(rche_example, z_list=(0.5, 1.5))
        assert not r.passed
        assert "DomainError" in r.detail


class TestReflection:
    def test_rche_parameter_map(self, rche_example):
        ref = reflected_spec(rche_example)
        assert ref.theta0 == rche_example.theta1
        assert ref.theta1 == rche_example.theta0
        assert ref.lam == -rche_example.lam
        want = rche_example.omega**2 + rche_example.lam
        assert abs(ref.omega**2 - want) <= 1e-14

    def test_che_parameter_map(self, che_example):
        ref = reflected_spec(che_example)
        assert ref.theta_star == che_example.theta_star
        want = che_example.omega**2 - che_example.lam * che_example.theta_star
        assert abs(ref.omega**2 - want) <= 1e-14

    @pytest.mark.parametrize("fixture", ["rche_example", "che_example"])
    def test_reflection_check_passes(self, request, fixture):
        spec = request.getfixturevalue(fixture)
        r = verify_reflection(spec)
        assert r.passed and r.residual <= 1e-8

    def test_strict_mode_raises_at_impossible_tolerance(self, rche_example):
        with pytest.raises(ReflectionMismatch):
            verify_reflection(rche_example, tol=1e-18, strict=True)

    def test_unsupported_family(self, he_example):
        with pytest.raises(FamilyFieldError):
            reflected_spec(he_example)


class TestLargeParameterLimit:
    def test_che_matches_rescaled_he(self, che_example):
        r = verify_che_as_he_limit(che_example, Lambda=1e4)
        assert r.passed and r.residual <= 1e-3

    def test_lambda_gate(self, che_example):
        with pytest.raises(DomainError):
            che_to_he_spec(che_example, 100.0)

    def test_family_gate(self, rche_example):
        with pytest.raises(FamilyFieldError):
            che_to_he_spec(rche_example, 1e4)

    def test_mapped_spec_parameters(self, che_example):
        Lam = 1e4
        he = che_to_he_spec(che_example, Lam)
        assert he.family == "HE"
        assert abs(he.theta_t - (Lam + che_example.theta_star) / 2) <= 1e-12
        assert abs(he.theta_inf - (Lam - che_example.theta_star) / 2) <= 1e-12
        assert abs(he.lam - che_example.lam / Lam) <= 1e-18


class TestFullReport:
    @pytest.mark.parametrize(
        "fixture", ["hyp_example", "rche_example", "che_example", "he_example"]
    )
    def test_all_pass_fast(self, request, fixture):
        spec = request.getfixturevalue(fixture)
        rep = full_report(spec, FAST)
        assert rep.passed, rep.summary()

    def test_check_roster_rche(self, rche_example):
        rep = full_report(rche_example, FAST)
        names = [c.name for c in rep.checks]
        assert names == [
            "connection_identity",
            "determinant",
            "method_agreement_recurrence",
            "method_agreement_wronskian",
            "method_agreement_ss",
            "monodromy_products",
            "series_vs_closed_forms",
            "reflection",
        ]

    def test_summary_and_dict(self, hyp_example):
        rep = full_report(hyp_example, FAST)
        text = rep.summary()
        assert "ALL PASS" in text.splitlines()[0]
        assert all("PASS" in line for line in text.splitlines()[1:])
        d = rep.as_dict()
        assert d["passed"] is True
        assert len(d["checks"]) == len(rep.checks)

    def test_degenerate_coupling_fails_cleanly(self):
        # omega at a closed-form resonance: the report must mark the
        # affected check failed (naming the error) without crashing.
        spec = rche_spec(0.1, 0.2, 0.5 - 1e-13, 0.1)
        rep = full_report(spec, FAST)
        assert not rep.passed
        bad = [c for c in rep.checks if not c.passed]
        assert bad
        assert any("ParameterResonance" in c.detail for c in bad)
