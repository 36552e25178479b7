import math

import numpy as np
import pytest

from squeezefall import (
    EstimationResult,
    ExperimentPlan,
    GaussianState,
    MeasurementSpec,
    ProbeParams,
    SqueezeSpec,
    cramer_rao_check,
    estimate_g,
    evolved_squeezed_state,
    measurement_covariance,
    qfi_closed_form,
    sample_outcomes,
    saturation_time,
)

NAT = ProbeParams.natural()
SEED = 7


class TestSampleOutcomes:
    def test_deterministic_for_fixed_seed(self):
        state = evolved_squeezed_state(SqueezeSpec(0.3, 1.0), NAT, 1.0)
        a = sample_outcomes(state, MeasurementSpec.momentum(), 1000, 42)
        b = sample_outcomes(state, MeasurementSpec.momentum(), 1000, 42)
        np.testing.assert_array_equal(a, b)

    def test_degenerate_momentum_variance(self):
        # not a physical pure state; injected to pin the V22 -> 0 limit
        state = GaussianState(mean=[0.5, -3.0], cov=[[1.0, 0.0], [0.0, 0.0]])
        out = sample_outcomes(state, MeasurementSpec.momentum(), 100, 0)
        np.testing.assert_array_equal(out, np.full(100, -3.0))

    def test_momentum_sample_mean_within_clt_band(self):
        state = evolved_squeezed_state(SqueezeSpec(0.0), NAT, 1.0)
        n = 1_000_000
        out = sample_outcomes(state, MeasurementSpec.momentum(), n, SEED)
        band = 3.0 * math.sqrt(state.cov[1, 1] / n)
        assert abs(out.mean() - (-9.81)) < band

    def test_generaldyne_shape_and_covariance(self):
        state = evolved_squeezed_state(SqueezeSpec(0.5, 2.5), NAT, 1.0)
        meas = MeasurementSpec.generaldyne(2.0)
        out = sample_outcomes(state, meas, 200_000, SEED, NAT)
        assert out.shape == (200_000, 2)
        expected = state.cov + measurement_covariance(meas, NAT)
        np.testing.assert_allclose(np.cov(out.T), expected, rtol=2e-2, atol=1e-2)

    def test_generaldyne_requires_params(self):
        state = evolved_squeezed_state(SqueezeSpec(0.0), NAT, 1.0)
        with pytest.raises(ValueError):
            sample_outcomes(state, MeasurementSpec.heterodyne(), 10, 0)


class TestEstimateG:
    def test_momentum_exact_on_noiseless_outcomes(self):
        outcomes = np.full(10, -NAT.m * 9.81 * 2.0)
        assert estimate_g(outcomes, MeasurementSpec.momentum(), 2.0, NAT) == pytest.approx(9.81, rel=1e-15)

    def test_position_exact_on_noiseless_outcomes(self):
        outcomes = np.full(10, -9.81 * 4.0 / 2.0)
        assert estimate_g(outcomes, MeasurementSpec.position(), 2.0, NAT) == pytest.approx(9.81, rel=1e-15)

    def test_momentum_arithmetic(self):
        outcomes = np.array([-19.0, -21.0])  # sample mean -20, m=1, tau=2
        assert estimate_g(outcomes, MeasurementSpec.momentum(), 2.0, NAT) == pytest.approx(10.0, rel=1e-15)

    def test_generaldyne_exact_on_noiseless_outcomes(self):
        tau, g = 2.0, 9.81
        h = np.array([-0.5 * tau**2, -NAT.m * tau])
        state = evolved_squeezed_state(SqueezeSpec(0.4, 2.0), NAT, tau)
        cov = state.cov + measurement_covariance(MeasurementSpec.heterodyne(), NAT)
        outcomes = np.tile(g * h, (5, 1))
        got = estimate_g(outcomes, MeasurementSpec.heterodyne(), tau, NAT, cov)
        assert got == pytest.approx(g, rel=1e-12)

    def test_guards(self):
        with pytest.raises(ValueError):
            estimate_g(np.array([]), MeasurementSpec.momentum(), 1.0, NAT)
        with pytest.raises(ValueError):
            estimate_g(np.array([1.0]), MeasurementSpec.momentum(), 0.0, NAT)
        with pytest.raises(ValueError):
            estimate_g(np.ones((3, 2)), MeasurementSpec.heterodyne(), 1.0, NAT)


class TestExperimentPlan:
    def test_validation(self):
        with pytest.raises(ValueError):
            ExperimentPlan(SqueezeSpec(0.0), NAT, 1.0, MeasurementSpec.momentum(), 1, 10, 0)
        with pytest.raises(ValueError):
            ExperimentPlan(SqueezeSpec(0.0), NAT, 1.0, MeasurementSpec.momentum(), 10, 0, 0)
        with pytest.raises(ValueError):
            ExperimentPlan(SqueezeSpec(0.0), NAT, 0.0, MeasurementSpec.momentum(), 10, 10, 0)


class TestCramerRaoCheck:
    def test_deterministic(self):
        plan = ExperimentPlan(SqueezeSpec(0.0), NAT, 1.0, MeasurementSpec.momentum(), 500, 20, SEED)
        assert cramer_rao_check(plan) == cramer_rao_check(plan)

    def test_efficiency_at_saturation_point(self):
        spec = SqueezeSpec(0.5, 3 * math.pi / 4)
        tau_star = saturation_time(spec, NAT)
        plan = ExperimentPlan(spec, NAT, tau_star, MeasurementSpec.momentum(), 100_000, 200, SEED)
        res = cramer_rao_check(plan)
        assert 0.8 <= res.normalized_var <= 1.2
        # R = 1 here, so the CFI bound coincides with the QFI bound
        f = qfi_closed_form(spec, NAT, tau_star)
        assert res.crb * plan.n * f == pytest.approx(1.0, abs=1e-8)

    def test_vacuum_momentum_unbiased_and_efficient(self):
        plan = ExperimentPlan(SqueezeSpec(0.0), NAT, 1.0, MeasurementSpec.momentum(), 10_000, 200, SEED)
        res = cramer_rao_check(plan)
        assert 0.8 <= res.normalized_var <= 1.2
        assert abs(res.g_hat_mean - NAT.g) < 4.0 * math.sqrt(res.g_hat_var / plan.experiments)

    def test_generaldyne_plan_runs(self):
        plan = ExperimentPlan(SqueezeSpec(0.5, 2.5), NAT, 1.5, MeasurementSpec.heterodyne(), 5_000, 100, SEED)
        res = cramer_rao_check(plan)
        assert 0.7 <= res.normalized_var <= 1.3
        assert abs(res.g_hat_mean - NAT.g) < 4.0 * math.sqrt(res.g_hat_var / plan.experiments)

    def test_variance_scales_inversely_with_n(self):
        kwargs = dict(spec=SqueezeSpec(0.0), params=NAT, tau=1.0, meas=MeasurementSpec.momentum(), experiments=200, seed=SEED)
        small = cramer_rao_check(ExperimentPlan(n=10_000, **kwargs))
        big = cramer_rao_check(ExperimentPlan(n=20_000, **kwargs))
        assert big.g_hat_var / small.g_hat_var == pytest.approx(0.5, abs=0.1 * 0.5)

    def test_momentum_beats_position_at_long_times(self):
        kwargs = dict(spec=SqueezeSpec(0.0), params=NAT, tau=5.0, n=5_000, experiments=100, seed=SEED)
        mom = cramer_rao_check(ExperimentPlan(meas=MeasurementSpec.momentum(), **kwargs))
        pos = cramer_rao_check(ExperimentPlan(meas=MeasurementSpec.position(), **kwargs))
        assert mom.g_hat_var < pos.g_hat_var

    def test_single_experiment_rejected(self):
        plan = ExperimentPlan(SqueezeSpec(0.0), NAT, 1.0, MeasurementSpec.momentum(), 10, 1, 0)
        with pytest.raises(ValueError):
            cramer_rao_check(plan)

    def test_unbiased_for_most_seeds(self):
        hits = 0
        for seed in range(20):
            plan = ExperimentPlan(SqueezeSpec(0.5, 2.5), NAT, 1.0, MeasurementSpec.momentum(), 2_000, 100, seed)
            res = cramer_rao_check(plan)
            if abs(res.g_hat_mean - NAT.g) < 4.0 * math.sqrt(res.g_hat_var / plan.experiments):
                hits += 1
        assert hits >= 19  # >= 95% of seeds


def test_estimation_result_validation():
    with pytest.raises(ValueError):
        EstimationResult(g_hat_mean=9.8, g_hat_var=1.0, crb=1.0, normalized_var=0.0)
