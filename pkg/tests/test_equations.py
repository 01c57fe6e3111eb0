"""Family specs, field validation, and the three-term recurrence data."""

from __future__ import annotations

from dataclasses import replace

import pytest

from heunconn import (
    FAMILIES,
    AccessoryResonance,
    DomainError,
    FamilyFieldError,
    ResonantExponents,
    alpha_beta,
    canonical_recurrence_step,
    che_spec,
    he_spec,
    hyp_spec,
    rche_spec,
    rescaled_a,
    u_lambda0_sequence,
    validate,
)


class TestConstructorsAndValidate:
    def test_families_tuple(self):
        assert FAMILIES == ("HYP", "RCHE", "CHE", "HE")

    def test_constructors_validate(self, hyp_example, rche_example, che_example, he_example):
        for spec in (hyp_example, rche_example, che_example, he_example):
            assert validate(spec) is spec
        assert hyp_example.family == "HYP"
        assert rche_example.family == "RCHE"
        assert che_example.family == "CHE"
        assert he_example.family == "HE"

    @pytest.mark.parametrize("theta0", [0.5, 1.0, -0.5, 0.0])
    def test_resonant_theta0(self, theta0):
        with pytest.raises(ResonantExponents):
            rche_spec(theta0, 0.2, 0.3, 0.1)

    def test_resonant_theta1(self):
        with pytest.raises(ResonantExponents):
            rche_spec(0.1, 1.0, 0.3, 0.1)

    def test_he_coupling_bound(self):
        with pytest.raises(DomainError):
            he_spec(0.11, 0.27, 0.33, 0.41, 0.37, 1.0)
        # RCHE carries no such bound at construction time.
        rche_spec(0.1, 0.2, 0.3, 1.0)

    def test_missing_field(self, rche_example):
        with pytest.raises(FamilyFieldError):
            validate(replace(rche_example, omega=None))

    def test_extraneous_field(self, rche_example):
        with pytest.raises(FamilyFieldError):
            validate(replace(rche_example, theta_star=0.25))

    def test_hyp_has_no_coupling(self, hyp_example):
        with pytest.raises(FamilyFieldError):
            validate(replace(hyp_example, lam=0.1))

    def test_unknown_family(self, rche_example):
        with pytest.raises(FamilyFieldError):
            validate(replace(rche_example, family="XYZ"))


class TestRecurrenceData:
    def test_u_sequence_anchor(self, rche_example):
        # u_1 = Q_0 / (1 - 2 theta0) with Q_0 = (1/2 - 0.1 + 0.2)^2 - 0.3^2
        #     = 0.27 / 0.8 = 0.3375 (hand computation).
        u = u_lambda0_sequence(rche_example, 4)
        assert u[0] == 1.0
        assert abs(u[1] - 0.3375) <= 1e-15

    def test_u_sequence_family_independent(self, rche_example, che_example):
        # The coupling-free canonical sequence depends only on theta0, theta1.
        u_r = u_lambda0_sequence(rche_example, 6)
        u_c = u_lambda0_sequence(che_example, 6)
        assert u_r == pytest.approx(u_c, rel=1e-14)

    def test_canonical_step_matches_sequence_at_zero_coupling(self, hyp_example):
        u = u_lambda0_sequence(hyp_example, 8)
        for k in range(1, 7):
            nxt = canonical_recurrence_step(hyp_example, k, u[k], u[k - 1])
            assert abs(nxt - u[k + 1]) <= 1e-13 * max(1.0, abs(u[k + 1]))

    def test_canonical_step_reproduces_rescaled_a(self, he_example):
        # Iterating the full recurrence from (u_0, u_{-1}) = (1, 0) and
        # dividing by the coupling-free sequence must give rescaled_a.
        K = 12
        u0 = u_lambda0_sequence(he_example, K)
        a_ref = rescaled_a(he_example, K)
        u_prev, u_cur = 0.0, 1.0
        for k in range(K):
            u_prev, u_cur = u_cur, canonical_recurrence_step(
                he_example, k, u_cur, u_prev
            )
            ratio = u_cur / u0[k + 1]
            assert abs(ratio - a_ref[k + 1]) <= 1e-12 * max(1.0, abs(ratio))

    def test_beta_anchor(self, rche_example):
        # beta_1 frozen from an independent hand evaluation of the
        # coefficient formula at (theta0, theta1, omega) = (0.1, 0.2, 0.3).
        alpha, beta = alpha_beta(rche_example, 1)
        assert alpha == 0.0
        assert abs(beta - 1.1995801469485672) <= 1e-15

    def test_rche_alpha_vanishes(self, rche_example):
        assert all(alpha_beta(rche_example, k)[0] == 0.0 for k in range(1, 12))

    def test_he_alpha_nonzero(self, he_example):
        assert abs(alpha_beta(he_example, 1)[0]) > 0.1

    def test_rescaled_a_anchor(self, rche_example):
        # a_2 = 1 - lam * beta_1 (alpha = 0 for this family; hand check).
        a = rescaled_a(rche_example, 4)
        assert a[0] == 1.0 and a[1] == 1.0
        assert abs(a[2] - (1.0 - 0.1 * 1.1995801469485672)) <= 1e-15

    def test_hyp_rescaled_a_is_constant(self, hyp_example):
        assert rescaled_a(hyp_example, 10) == [1.0] * 11

    def test_rescaled_a_converges(self, he_example):
        # The normalized coefficient ratio approaches a finite nonzero limit.
        a = rescaled_a(he_example, 400)
        assert abs(a[-1] - a[-2]) < abs(a[20] - a[19])
        assert 0.1 < abs(a[-1]) < 10.0

    def test_accessory_resonance(self):
        # (1/2 - theta0 + theta1)^2 = omega^2 kills the k = 1 denominator.
        spec = rche_spec(0.1, 0.2, 0.6, 0.1)
        with pytest.raises(AccessoryResonance):
            alpha_beta(spec, 1)
