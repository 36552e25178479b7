import math

import numpy as np
import pytest

from squeezefall import (
    FisherReport,
    MeasurementSpec,
    ProbeParams,
    SqueezeSpec,
    cfi_generaldyne,
    fisher_report,
    freefall_family,
    measurement_covariance,
    optimal_phase,
    qfi_closed_form,
    qfi_gaussian_oracle,
    qfi_vacuum,
    ratio_R,
    rqfi,
    rqfi_asymptote,
    saturation_time,
    sensitivity,
)

NAT = ProbeParams.natural()
CORRELATED = SqueezeSpec(0.5, math.pi / 4)
ANTICORRELATED = SqueezeSpec(0.5, 3 * math.pi / 4)

# Cold-atom parameters of the worked sensitivity example.
CS = ProbeParams(m=2.21e-25, sigma0=30e-9)


class TestMeasurementSpec:
    def test_exact_kinds_take_no_s(self):
        with pytest.raises(ValueError):
            MeasurementSpec("position", s=0.5)

    def test_generaldyne_needs_finite_positive_s(self):
        for bad in (None, 0.0, -1.0, math.inf):
            with pytest.raises(ValueError):
                MeasurementSpec("generaldyne", s=bad)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            MeasurementSpec("homodyne")

    def test_heterodyne_is_unit_s(self):
        assert MeasurementSpec.heterodyne() == MeasurementSpec.generaldyne(1.0)

    def test_ancilla_covariance_is_minimum_uncertainty(self):
        vm = measurement_covariance(MeasurementSpec.generaldyne(3.0), CS)
        assert vm[0, 0] == pytest.approx(3.0 * CS.sigma0**2, rel=1e-15)
        assert np.linalg.det(vm) == pytest.approx(CS.hbar**2 / 4.0, rel=1e-12)
        with pytest.raises(ValueError):
            measurement_covariance(MeasurementSpec.momentum(), CS)


class TestQfiClosedForm:
    def test_vacuum_value(self):
        assert qfi_closed_form(SqueezeSpec(0.0), NAT, 1.0) == pytest.approx(4.25, rel=1e-14)

    def test_correlated_value(self):
        # term by term: cosh(1)/4 + 2 sinh(1) + 4 cosh(1)
        expected = math.cosh(1.0) / 4.0 + 2.0 * math.sinh(1.0) + 4.0 * math.cosh(1.0)
        assert expected == pytest.approx(8.908495085252389, rel=1e-15)
        assert qfi_closed_form(CORRELATED, NAT, 1.0) == pytest.approx(expected, rel=1e-13)

    def test_anticorrelated_value_stays_positive(self):
        expected = math.cosh(1.0) / 4.0 - 2.0 * math.sinh(1.0) + 4.0 * math.cosh(1.0)
        got = qfi_closed_form(ANTICORRELATED, NAT, 1.0)
        assert got == pytest.approx(expected, rel=1e-13)
        assert got == pytest.approx(4.207690310677185, rel=1e-13)
        taus = np.geomspace(1e-3, 1e3, 200)
        assert np.all(qfi_closed_form(ANTICORRELATED, NAT, taus) > 0.0)

    def test_vacuum_limit_matches_closed_expression(self):
        rng = np.random.default_rng(3)
        taus = rng.uniform(1e-3, 20.0, size=50)
        f = qfi_closed_form(SqueezeSpec(0.0), NAT, taus)
        np.testing.assert_allclose(f, taus**4 / 4.0 + 4.0 * taus**2, rtol=1e-12)
        np.testing.assert_allclose(f, qfi_vacuum(NAT, taus), rtol=1e-15)

    def test_vacuum_qfi_at_zero_time(self):
        assert qfi_vacuum(NAT, 0.0) == 0.0


class TestGaussianOracle:
    def test_vacuum_value(self):
        fam = freefall_family(SqueezeSpec(0.0), NAT)
        assert qfi_gaussian_oracle(fam, NAT, 1.0) == pytest.approx(4.25, rel=1e-13)

    def test_cross_checks_closed_form(self):
        fam = freefall_family(CORRELATED, NAT)
        assert qfi_gaussian_oracle(fam, NAT, 1.0) == pytest.approx(
            qfi_closed_form(CORRELATED, NAT, 1.0), rel=1e-12
        )

    def test_finite_difference_mode_agrees(self):
        spec = SqueezeSpec(0.8, 2.3)
        fam = freefall_family(spec, NAT)
        for tau in (0.2, 1.0, 4.0):
            analytic = qfi_gaussian_oracle(fam, NAT, tau, mode="analytic")
            fd = qfi_gaussian_oracle(fam, NAT, tau, mode="fd", dg=1e-6 * NAT.g)
            assert fd == pytest.approx(analytic, rel=1e-5)

    def test_covariance_term_is_zero(self):
        # g enters the means only, so the fd covariance derivative vanishes
        # and fd mode reduces to the displacement term exactly.
        fam = freefall_family(CORRELATED, NAT)
        fd = qfi_gaussian_oracle(fam, NAT, 2.0, mode="fd")
        assert fd == pytest.approx(qfi_closed_form(CORRELATED, NAT, 2.0), rel=1e-9)

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            qfi_gaussian_oracle(freefall_family(CORRELATED, NAT), NAT, 1.0, mode="exact")


class TestRqfi:
    def test_vacuum_is_unity(self):
        taus = np.geomspace(1e-3, 1e3, 25)
        np.testing.assert_allclose(rqfi(SqueezeSpec(0.0), NAT, taus), 1.0, rtol=1e-14)

    def test_correlated_value(self):
        assert rqfi(CORRELATED, NAT, 1.0) == pytest.approx(8.908495085252389 / 4.25, rel=1e-13)

    def test_short_time_momentum_squeezing(self):
        q = rqfi(SqueezeSpec(0.5, math.pi / 2), NAT, 1e-4 * NAT.tau0)
        assert q == pytest.approx(math.e, rel=0.01)

    def test_correlated_peak_value(self):
        # Q(theta=pi/4) = cosh 2r + 8 sinh(2r) tau/(tau^2 + 16), peaking at tau = 4
        assert rqfi(CORRELATED, NAT, 4.0) == pytest.approx(math.e, rel=1e-13)

    def test_undefined_at_zero(self):
        with pytest.raises(ValueError):
            rqfi(CORRELATED, NAT, 0.0)


def test_cubic_term_sign_tracks_correlation():
    # Q(theta) - Q(pi - theta) isolates the term odd in gamma, so its sign
    # follows sin(2 theta) at fixed small tau.
    tau = 0.1
    for theta in (0.3, 0.6, 1.2, 2.0, 2.8):
        diff = rqfi(SqueezeSpec(0.5, theta), NAT, tau) - rqfi(SqueezeSpec(0.5, math.pi - theta), NAT, tau)
        assert math.copysign(1.0, diff) == math.copysign(1.0, math.sin(2 * theta))


class TestRqfiAsymptote:
    @pytest.mark.parametrize(
        "theta,regime,expected",
        [
            (0.0, "short", math.exp(-1.0)),
            (0.0, "long", math.e),
            (math.pi / 2, "short", math.e),
            (math.pi / 2, "long", math.exp(-1.0)),
            (math.pi / 4, "short", math.cosh(1.0)),
            (math.pi / 4, "long", math.cosh(1.0)),
        ],
    )
    def test_exact_limits_at_half_squeezing(self, theta, regime, expected):
        assert rqfi_asymptote(SqueezeSpec(0.5, theta), regime) == pytest.approx(expected, rel=1e-12)

    def test_limits_match_numeric_rqfi(self):
        for theta in (0.0, 0.6, math.pi / 4, 2.0, 3.0):
            spec = SqueezeSpec(0.5, theta)
            assert rqfi(spec, NAT, 1e-6) == pytest.approx(rqfi_asymptote(spec, "short"), rel=1e-4)
            assert rqfi(spec, NAT, 1e6) == pytest.approx(rqfi_asymptote(spec, "long"), rel=1e-4)

    def test_rejects_unknown_regime(self):
        with pytest.raises(ValueError):
            rqfi_asymptote(CORRELATED, "medium")


class TestSensitivity:
    def test_vacuum_value(self):
        assert sensitivity(SqueezeSpec(0.0), NAT, 1.0) == pytest.approx(math.sqrt(1.0 / 4.25), rel=1e-14)

    def test_cold_atom_example(self):
        eta = sensitivity(SqueezeSpec(0.5, 0.0), CS, 0.5)
        assert eta == pytest.approx(1.0e-7, rel=0.05)

    def test_unsqueezed_probe_is_worse_by_sqrt_e(self):
        eta_sq = sensitivity(SqueezeSpec(0.5, 0.0), CS, 0.5)
        eta_vac = sensitivity(SqueezeSpec(0.0), CS, 0.5)
        assert eta_vac == pytest.approx(1.7e-7, rel=0.05)
        assert eta_vac / eta_sq == pytest.approx(math.exp(0.5), rel=1e-2)

    def test_undefined_at_zero(self):
        with pytest.raises(ValueError):
            sensitivity(CORRELATED, NAT, 0.0)


class TestCfiGeneraldyne:
    def test_momentum_closed_form_on_grid(self):
        meas = MeasurementSpec.momentum()
        for r in (0.0, 0.5, 1.0):
            for theta in (0.0, 0.9, 2.4):
                spec = SqueezeSpec(r, theta)
                gamma = math.sinh(2 * r) * math.sin(2 * theta)
                sig2 = (math.cosh(2 * r) - math.sinh(2 * r) * math.cos(2 * theta))
                for tau in (0.3, 1.0, 5.0):
                    expected = 4.0 * sig2 * tau**2 / (1.0 + gamma**2)
                    assert cfi_generaldyne(spec, NAT, tau, meas) == pytest.approx(expected, rel=1e-13)

    def test_position_vacuum_value(self):
        assert cfi_generaldyne(SqueezeSpec(0.0), NAT, 1.0, MeasurementSpec.position()) == pytest.approx(0.2, rel=1e-14)

    def test_momentum_correlated_value(self):
        got = cfi_generaldyne(CORRELATED, NAT, 1.0, MeasurementSpec.momentum())
        assert got == pytest.approx(4.0 / math.cosh(1.0), rel=1e-13)

    def test_heterodyne_vacuum_value(self):
        got = cfi_generaldyne(SqueezeSpec(0.0), NAT, 1.0, MeasurementSpec.heterodyne())
        assert got == pytest.approx(2.0, rel=1e-13)

    @pytest.mark.parametrize("r,theta", [(0.0, 0.0), (0.5, math.pi / 4), (0.8, 2.9)])
    def test_limit_consistency(self, r, theta):
        # The s -> 0 convergence is not uniform in tau: the momentum channel
        # leaks information h2^2/Vt22 ~ s (m tau)^2 into the outcome pair,
        # which relative to the position information scales like s/tau^2.
        # The 1e-5 band therefore needs tau of order tau0 or larger.
        spec = SqueezeSpec(r, theta)
        for tau in (0.5, 2.0):
            near_momentum = cfi_generaldyne(spec, NAT, tau, MeasurementSpec.generaldyne(1e6))
            momentum = cfi_generaldyne(spec, NAT, tau, MeasurementSpec.momentum())
            assert near_momentum == pytest.approx(momentum, rel=1e-5)
        for tau in (5.0, 10.0):
            near_position = cfi_generaldyne(spec, NAT, tau, MeasurementSpec.generaldyne(1e-6))
            position = cfi_generaldyne(spec, NAT, tau, MeasurementSpec.position())
            assert near_position == pytest.approx(position, rel=1e-5)

    def test_zero_at_zero_time(self):
        assert cfi_generaldyne(CORRELATED, NAT, 0.0, MeasurementSpec.momentum()) == 0.0

    def test_ordering_holds_in_si_units(self):
        # the dimensionless-s ancilla must keep I <= F at laboratory scales
        measurements = [MeasurementSpec.generaldyne(s) for s in (1e-3, 1.0, 1e3)]
        measurements += [MeasurementSpec.position(), MeasurementSpec.momentum()]
        for theta in (0.0, math.pi / 4, 2.4):
            spec = SqueezeSpec(0.5, theta)
            for tau in (1e-7, 1e-3, 0.5):
                f = qfi_closed_form(spec, CS, tau)
                for meas in measurements:
                    i = cfi_generaldyne(spec, CS, tau, meas)
                    assert 0.0 <= i <= f * (1.0 + 1e-10)


class TestRatioR:
    def test_momentum_vacuum_value(self):
        got = ratio_R(SqueezeSpec(0.0), NAT, 1.0, MeasurementSpec.momentum())
        assert got == pytest.approx(4.0 / 4.25, rel=1e-13)

    def test_momentum_saturates_at_saturation_time(self):
        tau_star = saturation_time(ANTICORRELATED, NAT)
        assert ratio_R(ANTICORRELATED, NAT, tau_star, MeasurementSpec.momentum()) == pytest.approx(1.0, abs=1e-10)

    def test_position_ratio_dies_at_long_times(self):
        assert ratio_R(SqueezeSpec(0.0), NAT, 1e3 * NAT.tau0, MeasurementSpec.position()) < 1e-2

    def test_undefined_at_zero(self):
        with pytest.raises(ValueError):
            ratio_R(CORRELATED, NAT, 0.0, MeasurementSpec.momentum())


class TestSaturationTime:
    def test_none_without_squeezing(self):
        assert saturation_time(SqueezeSpec(0.0), NAT) is None

    def test_none_for_positive_correlation(self):
        assert saturation_time(CORRELATED, NAT) is None

    def test_anticorrelated_value(self):
        # -4 gamma sigma^2/(1+gamma^2) at theta=3pi/4 collapses to 4 tanh(2r)
        tau_star = saturation_time(ANTICORRELATED, NAT)
        assert tau_star == pytest.approx(4.0 * math.tanh(1.0), rel=1e-13)
        assert tau_star == pytest.approx(3.0463766238230596, rel=1e-13)

    def test_gap_is_perfect_square(self):
        # for gamma < 0 the QFI-CFI gap vanishes only at tau_star; for
        # gamma > 0 it stays strictly positive
        taus = np.linspace(0.05, 5.0, 120)
        meas = MeasurementSpec.momentum()
        gap_anti = qfi_closed_form(ANTICORRELATED, NAT, taus) - cfi_generaldyne(ANTICORRELATED, NAT, taus, meas)
        assert gap_anti.min() >= -1e-10
        gap_corr = qfi_closed_form(CORRELATED, NAT, taus) - cfi_generaldyne(CORRELATED, NAT, taus, meas)
        assert np.all(gap_corr > 0.0)


class TestOptimalPhase:
    def test_flat_objective_breaks_tie_at_zero(self):
        theta, rmax = optimal_phase(0.0, NAT, 1.0, MeasurementSpec.momentum())
        assert theta == 0.0
        assert rmax == pytest.approx(4.0 / 4.25, rel=1e-12)

    def test_momentum_recovers_saturating_phase(self):
        tau_star = saturation_time(ANTICORRELATED, NAT)
        theta, rmax = optimal_phase(0.5, NAT, tau_star, MeasurementSpec.momentum())
        assert theta == pytest.approx(3 * math.pi / 4, abs=1e-4)
        assert rmax == pytest.approx(1.0, abs=1e-8)
        # the saturating phase solves 4|gamma| sigma^2/(1+gamma^2) = tau with
        # negative correlation
        assert math.sin(2 * theta) < 0.0

    def test_heterodyne_never_saturates(self):
        for tau in (0.5, 1.5, 3.0):
            _, rmax = optimal_phase(0.5, NAT, tau, MeasurementSpec.heterodyne())
            assert rmax < 1.0

    def test_undefined_at_zero(self):
        with pytest.raises(ValueError):
            optimal_phase(0.5, NAT, 0.0, MeasurementSpec.momentum())


class TestFisherReport:
    def test_bundle_consistency(self):
        rep = fisher_report(ANTICORRELATED, NAT, 2.0, MeasurementSpec.momentum())
        assert rep.F_g == pytest.approx(qfi_closed_form(ANTICORRELATED, NAT, 2.0), rel=1e-15)
        assert rep.Q == pytest.approx(rep.F_g / rep.F_vac, rel=1e-15)
        assert rep.R == pytest.approx(rep.I_g / rep.F_g, rel=1e-15)
        assert rep.eta == pytest.approx(math.sqrt(2.0 / rep.F_g), rel=1e-15)
        assert 0.0 <= rep.R <= 1.0 + 1e-10

    def test_validation(self):
        with pytest.raises(ValueError):
            FisherReport(tau=1.0, F_g=1.0, F_vac=1.0, Q=1.0, I_g=2.0, R=2.0, eta=1.0)
