"""Monte-Carlo check of the Cramer-Rao bound.

Simulates measurement outcomes on the evolved probe, estimates g with the
closed-form linear estimator of each measurement, and compares the empirical
estimator variance across repeated experiments with the bound 1/(n I_g).
The linear estimators are unbiased and efficient for this Gaussian location
model, so the normalized variance concentrates around 1.

Each experiment draws its generator from (seed, experiment index) through a
numpy SeedSequence, making runs reproducible and trivially parallelizable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .dynamics import evolved_squeezed_state
from .fisher import MeasurementSpec, cfi_generaldyne, measurement_covariance
from .states import GaussianState, ProbeParams, SqueezeSpec


@dataclass(frozen=True)
class ExperimentPlan:
    """n trials per experiment, repeated `experiments` times from `seed`."""

    spec: SqueezeSpec
    params: ProbeParams
    tau: float
    meas: MeasurementSpec
    n: int
    experiments: int
    seed: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need n >= 2 trials, got {self.n}")
        if self.experiments < 1:
            raise ValueError(f"need >= 1 experiments, got {self.experiments}")
        if not (self.tau > 0.0):
            raise ValueError("estimation requires tau > 0")


@dataclass(frozen=True)
class EstimationResult:
    g_hat_mean: float
    g_hat_var: float
    crb: float
    normalized_var: float

    def __post_init__(self) -> None:
        if not (self.normalized_var > 0.0):
            raise ValueError("normalized variance must be positive")


def sample_outcomes(
    state: GaussianState,
    meas: MeasurementSpec,
    n: int,
    seed,
    params: Optional[ProbeParams] = None,
) -> np.ndarray:
    """Draw n measurement outcomes from the Gaussian outcome law.

    position  -> shape (n,) draws from Normal(<z>, V11)
    momentum  -> shape (n,) draws from Normal(<p>, V22)
    generaldyne -> shape (n, 2) draws from Normal(mean, V + V_m); needs
                   `params` to build the ancilla covariance.

    `seed` is anything np.random.default_rng accepts (int, SeedSequence,
    Generator); a fixed seed reproduces the outcomes bit for bit.
    """
    if n < 1:
        raise ValueError(f"need n >= 1 outcomes, got {n}")
    rng = np.random.default_rng(seed)
    v = state.cov
    if meas.kind == "position":
        return rng.normal(state.mean[0], np.sqrt(v[0, 0]), size=n)
    if meas.kind == "momentum":
        return rng.normal(state.mean[1], np.sqrt(v[1, 1]), size=n)
    if params is None:
        raise ValueError("generaldyne sampling needs params for the ancilla covariance")
    vt = v + measurement_covariance(meas, params)
    chol = np.linalg.cholesky(vt)
    return state.mean + rng.standard_normal((n, 2)) @ chol.T


def estimate_g(
    outcomes: np.ndarray,
    meas: MeasurementSpec,
    tau: float,
    params: ProbeParams,
    outcome_cov: Optional[np.ndarray] = None,
) -> float:
    """Closed-form linear estimate of g from outcomes of a zero-mean probe.

    momentum  : g_hat = -mean(outcomes) / (m tau)
    position  : g_hat = -2 mean(outcomes) / tau^2
    generaldyne : generalized least squares on the 2-d outcome mean with
                  weight outcome_cov^-1 (pass outcome_cov = V(tau) + V_m).

    Linear in Gaussian outcomes with known coefficients, hence unbiased; the
    GLS weight makes the general-dyne estimator efficient as well.
    """
    outcomes = np.asarray(outcomes, dtype=float)
    if outcomes.size == 0:
        raise ValueError("no outcomes to estimate from")
    if not (tau > 0.0):
        raise ValueError("estimation requires tau > 0")
    if meas.kind == "momentum":
        return float(-outcomes.mean() / (params.m * tau))
    if meas.kind == "position":
        return float(-2.0 * outcomes.mean() / tau**2)
    if outcome_cov is None:
        raise ValueError("generaldyne estimation needs outcome_cov = V(tau) + V_m")
    h = np.array([-0.5 * tau**2, -params.m * tau])
    w = np.linalg.inv(np.asarray(outcome_cov, dtype=float))
    xbar = outcomes.mean(axis=0)
    return float((h @ w @ xbar) / (h @ w @ h))


def cramer_rao_check(plan: ExperimentPlan) -> EstimationResult:
    """Run the planned experiments and compare Var(g_hat) with 1/(n I_g)."""
    if plan.experiments < 2:
        raise ValueError("an empirical variance needs >= 2 experiments")
    state = evolved_squeezed_state(plan.spec, plan.params, plan.tau)
    i_g = float(cfi_generaldyne(plan.spec, plan.params, plan.tau, plan.meas))
    crb = 1.0 / (plan.n * i_g)

    outcome_cov = None
    if plan.meas.kind == "generaldyne":
        outcome_cov = state.cov + measurement_covariance(plan.meas, plan.params)

    estimates = np.empty(plan.experiments)
    for k in range(plan.experiments):
        seq = np.random.SeedSequence(entropy=plan.seed, spawn_key=(k,))
        outcomes = sample_outcomes(state, plan.meas, plan.n, seq, plan.params)
        estimates[k] = estimate_g(outcomes, plan.meas, plan.tau, plan.params, outcome_cov)

    g_hat_var = float(estimates.var(ddof=1))
    return EstimationResult(
        g_hat_mean=float(estimates.mean()),
        g_hat_var=g_hat_var,
        crb=crb,
        normalized_var=g_hat_var / crb,
    )
