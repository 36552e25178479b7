"""Single-mode Gaussian probe states in (z, p) phase space.

A probe is described by its mean vector and a 2x2 covariance matrix in the
standard convention V_ij = <{d_i, d_j}>/2 - <d_i><d_j>, with d = (z, p).
Pure minimum-uncertainty states satisfy det V = hbar^2/4 (the saturated
Schroedinger-Robertson bound).

The squeezed-vacuum constructor is parameterized by a squeezing amplitude r
and a squeezing phase theta.  theta = 0 squeezes the position quadrature,
theta = pi/2 the momentum quadrature, and intermediate angles tilt the
uncertainty ellipse, creating a position-momentum correlation
gamma = sinh(2r) sin(2theta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# CODATA reduced Planck constant, J s
HBAR = 1.054571817e-34


class InvalidStateError(ValueError):
    """A phase-space matrix does not describe a usable Gaussian state."""


@dataclass(frozen=True)
class SqueezeSpec:
    """Squeezing amplitude r >= 0 and phase theta (radians).

    The state depends on theta only through 2*theta, so theta is stored
    reduced to [0, pi).
    """

    r: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        if not (self.r >= 0.0):
            raise ValueError(f"squeezing amplitude must be >= 0, got {self.r}")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "theta", float(self.theta) % math.pi)


@dataclass(frozen=True)
class ProbeParams:
    """Physical constants of the probe and the field it falls in.

    m      -- mass (kg)
    sigma0 -- vacuum position standard deviation (m)
    hbar   -- reduced Planck constant (J s)
    g      -- gravitational acceleration (m/s^2); sign encodes direction
    """

    m: float
    sigma0: float
    hbar: float = HBAR
    g: float = 9.81

    def __post_init__(self) -> None:
        if not (self.m > 0.0):
            raise ValueError(f"mass must be positive, got {self.m}")
        if not (self.sigma0 > 0.0):
            raise ValueError(f"sigma0 must be positive, got {self.sigma0}")
        if not (self.hbar > 0.0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")

    @property
    def tau0(self) -> float:
        """Characteristic timescale m*sigma0^2/hbar separating the short- and
        long-time regimes."""
        return self.m * self.sigma0**2 / self.hbar

    @classmethod
    def natural(cls, g: float = 9.81) -> "ProbeParams":
        """Dimensionless parameter set m = sigma0 = hbar = 1 used for the
        trend figures; g stays a free parameter."""
        return cls(m=1.0, sigma0=1.0, hbar=1.0, g=g)


@dataclass(frozen=True)
class GaussianState:
    """Mean vector (<z>, <p>) and standard covariance matrix V.

    V units: V11 in m^2, V12 in J s, V22 in kg^2 m^2/s^2.  Construction only
    enforces shape and symmetry; physicality (det V >= hbar^2/4) is a property
    of how the state was produced and is checked by the operations that
    require it.
    """

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self) -> None:
        mean = np.array(self.mean, dtype=float).reshape(2)
        cov = np.array(self.cov, dtype=float).reshape(2, 2)
        if not np.allclose(cov, cov.T, rtol=1e-12, atol=0.0):
            raise InvalidStateError("covariance matrix must be symmetric")
        cov = 0.5 * (cov + cov.T)
        mean.flags.writeable = False
        cov.flags.writeable = False
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)


def correlation_gamma(spec: SqueezeSpec) -> float:
    """Position-momentum correlation gamma = sinh(2r) sin(2theta).

    Negative for theta in (pi/2, pi); zero whenever the squeezing axis is
    aligned with a canonical quadrature.
    """
    return math.sinh(2.0 * spec.r) * math.sin(2.0 * spec.theta)


def sigma_of(spec: SqueezeSpec, sigma0: float) -> float:
    """Initial position standard deviation
    sigma = sigma0 * sqrt(cosh(2r) - sinh(2r) cos(2theta)).

    Always positive since cosh(2r) >= |sinh(2r)|.
    """
    if not (sigma0 > 0.0):
        raise ValueError(f"sigma0 must be positive, got {sigma0}")
    two_r = 2.0 * spec.r
    return sigma0 * math.sqrt(math.cosh(two_r) - math.sinh(two_r) * math.cos(2.0 * spec.theta))


def make_squeezed_vacuum(spec: SqueezeSpec, params: ProbeParams) -> GaussianState:
    """Squeezed vacuum at zero mean.

    V11 = sigma^2, V12 = hbar*gamma/2, V22 = hbar^2 (1 + gamma^2)/(4 sigma^2);
    det V = hbar^2/4 exactly for every (r, theta).
    """
    gamma = correlation_gamma(spec)
    sig2 = sigma_of(spec, params.sigma0) ** 2
    hbar = params.hbar
    cov = np.array(
        [
            [sig2, 0.5 * hbar * gamma],
            [0.5 * hbar * gamma, hbar**2 * (1.0 + gamma**2) / (4.0 * sig2)],
        ]
    )
    return GaussianState(mean=np.zeros(2), cov=cov)


def sr_uncertainty(state: GaussianState) -> float:
    """det V, the Schroedinger-Robertson invariant; hbar^2/4 for pure states."""
    v = state.cov
    return float(v[0, 0] * v[1, 1] - v[0, 1] ** 2)


def doubled_covariance(state: GaussianState) -> np.ndarray:
    """Covariance in the doubled convention
    sigma_ij = <d_i d_j + d_j d_i> - 2 <d_i><d_j> = 2 V_ij."""
    return 2.0 * state.cov


def wigner(state: GaussianState, z, p):
    """Wigner density W(z, p) of a Gaussian state.

    W = exp(-delta^T V^-1 delta / 2) / (2 pi sqrt(det V)) with
    delta = (z - <z>, p - <p>).  Normalized so that the integral over phase
    space is 1; the peak value for a pure state is 1/(pi hbar).

    z and p may be scalars or broadcastable arrays.  Raises InvalidStateError
    for singular covariance (det V <= 0).
    """
    v = state.cov
    det = v[0, 0] * v[1, 1] - v[0, 1] ** 2
    if det <= 0.0:
        raise InvalidStateError(f"covariance matrix is singular (det = {det})")
    dz = np.asarray(z, dtype=float) - state.mean[0]
    dp = np.asarray(p, dtype=float) - state.mean[1]
    quad = (v[1, 1] * dz**2 - 2.0 * v[0, 1] * dz * dp + v[0, 0] * dp**2) / det
    return np.exp(-0.5 * quad) / (2.0 * math.pi * math.sqrt(det))
