"""Free fall of a Gaussian probe in the uniform potential U(z) = m g z.

A linear potential only displaces the means; the covariance evolves exactly
as for a free particle, V -> S V S^T with S = [[1, tau/m], [0, 1]].  Both
maps are symplectic, so det V (and hence purity) is conserved and the
covariance never depends on g.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import GaussianState, ProbeParams, SqueezeSpec, make_squeezed_vacuum


@dataclass(frozen=True)
class EvolutionSpec:
    """Interrogation time tau >= 0 together with the probe parameters."""

    tau: float
    params: ProbeParams

    def __post_init__(self) -> None:
        if not (self.tau >= 0.0):
            raise ValueError(f"tau must be >= 0, got {self.tau}")


def evolve(state: GaussianState, spec: EvolutionSpec) -> GaussianState:
    """Evolve a state through free fall for a time tau.

    mean -> (<z> + <p> tau/m - g tau^2/2, <p> - m g tau)
    V11  -> V11 + 2 V12 tau/m + V22 tau^2/m^2
    V12  -> V12 + V22 tau/m
    V22  -> V22
    """
    tau = spec.tau
    m = spec.params.m
    g = spec.params.g
    z0, p0 = state.mean
    v = state.cov
    mean = np.array([z0 + p0 * tau / m - 0.5 * g * tau**2, p0 - m * g * tau])
    v11 = v[0, 0] + 2.0 * v[0, 1] * tau / m + v[1, 1] * (tau / m) ** 2
    v12 = v[0, 1] + v[1, 1] * tau / m
    cov = np.array([[v11, v12], [v12, v[1, 1]]])
    return GaussianState(mean=mean, cov=cov)


def mean_sensitivity(spec: EvolutionSpec) -> np.ndarray:
    """d(mean)/dg = (-tau^2/2, -m tau); independent of the state and of g."""
    return np.array([-0.5 * spec.tau**2, -spec.params.m * spec.tau])


def evolved_squeezed_state(spec: SqueezeSpec, params: ProbeParams, tau: float) -> GaussianState:
    """Squeezed vacuum after a free fall of duration tau."""
    return evolve(make_squeezed_vacuum(spec, params), EvolutionSpec(tau, params))
