"""Quantum and classical Fisher information for estimating g.

For the free-falling probe only the means carry g, so both the QFI and every
general-dyne CFI reduce to a displacement term h^T C^-1 h with
h = d(mean)/dg = (-tau^2/2, -m tau) and C the relevant covariance:

  QFI  : C = V(tau), the evolved state covariance;
  CFI  : C = V(tau) + V_m, where V_m = diag(s sigma0^2, hbar^2/(4 s sigma0^2))
         is the minimum-uncertainty covariance of the general-dyne ancilla.

The trace terms of the generic Gaussian formulas vanish identically here
(dV/dg = 0); the oracle evaluates them anyway as a guard against convention
mistakes.  s -> 0 is an ideal position measurement, s -> infinity an ideal
momentum measurement, s = 1 heterodyne; the two limits are implemented as
exact closed forms rather than numeric limits.

Closed-form functions accept tau as a scalar or ndarray and evaluate
elementwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .dynamics import EvolutionSpec, evolve, mean_sensitivity
from .states import (
    GaussianState,
    InvalidStateError,
    ProbeParams,
    SqueezeSpec,
    correlation_gamma,
    make_squeezed_vacuum,
    sigma_of,
)

_KINDS = ("position", "momentum", "generaldyne")


@dataclass(frozen=True)
class MeasurementSpec:
    """A general-dyne measurement, or one of its exact limits.

    kind is "position", "momentum", or "generaldyne"; s (> 0, dimensionless)
    is required exactly when kind is "generaldyne".
    """

    kind: str
    s: Optional[float] = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown measurement kind {self.kind!r}")
        if self.kind == "generaldyne":
            if self.s is None or not (self.s > 0.0) or math.isinf(self.s):
                raise ValueError("generaldyne requires a finite parameter s > 0")
            object.__setattr__(self, "s", float(self.s))
        elif self.s is not None:
            raise ValueError(f"s is only meaningful for generaldyne, got kind={self.kind!r}")

    @classmethod
    def position(cls) -> "MeasurementSpec":
        return cls("position")

    @classmethod
    def momentum(cls) -> "MeasurementSpec":
        return cls("momentum")

    @classmethod
    def generaldyne(cls, s: float) -> "MeasurementSpec":
        return cls("generaldyne", s)

    @classmethod
    def heterodyne(cls) -> "MeasurementSpec":
        return cls("generaldyne", 1.0)


@dataclass(frozen=True)
class FisherReport:
    """All figures of merit at one (tau, r, theta, s) point."""

    tau: float
    F_g: float
    F_vac: float
    Q: float
    I_g: float
    R: float
    eta: float

    def __post_init__(self) -> None:
        if not (self.F_g > 0.0 and self.I_g >= 0.0):
            raise ValueError("Fisher informations must satisfy F_g > 0, I_g >= 0")
        if not (-1e-10 <= self.R <= 1.0 + 1e-10):
            raise ValueError(f"CFI/QFI ratio out of range: R = {self.R}")


def measurement_covariance(meas: MeasurementSpec, params: ProbeParams) -> np.ndarray:
    """Ancilla covariance V_m = diag(s sigma0^2, hbar^2/(4 s sigma0^2)).

    Minimum uncertainty (det V_m = hbar^2/4), squeezed by s relative to the
    vacuum width.  Only defined for finite s; the position/momentum kinds are
    singular limits without a finite 2x2 ancilla.
    """
    if meas.kind != "generaldyne":
        raise ValueError(f"no finite ancilla covariance for kind={meas.kind!r}")
    u = meas.s * params.sigma0**2
    return np.array([[u, 0.0], [0.0, params.hbar**2 / (4.0 * u)]])


def _state_coeffs(spec: SqueezeSpec, params: ProbeParams):
    """(gamma, sigma^2, V22) of the initial squeezed vacuum."""
    gamma = correlation_gamma(spec)
    sig2 = sigma_of(spec, params.sigma0) ** 2
    v22 = params.hbar**2 * (1.0 + gamma**2) / (4.0 * sig2)
    return gamma, sig2, v22


def qfi_closed_form(spec: SqueezeSpec, params: ProbeParams, tau):
    """QFI for g:

    F_g = (1 + gamma^2) tau^4 / (4 sigma^2)
        + 2 gamma (m/hbar) tau^3
        + 4 sigma^2 (m/hbar)^2 tau^2

    Strictly positive for tau > 0 (the discriminant of the quadratic in tau
    is -4 m^2/hbar^2 < 0), even when gamma < 0 flips the cubic term.
    """
    gamma, sig2, _ = _state_coeffs(spec, params)
    moh = params.m / params.hbar
    a = (1.0 + gamma**2) / (4.0 * sig2)
    b = 2.0 * gamma * moh
    c = 4.0 * sig2 * moh**2
    return ((a * tau + b) * tau + c) * tau * tau


def qfi_vacuum(params: ProbeParams, tau):
    """Vacuum-probe QFI tau^4/(4 sigma0^2) + 4 tau0^2 tau^2 / sigma0^2, the
    shot-noise reference."""
    s02 = params.sigma0**2
    return tau**4 / (4.0 * s02) + 4.0 * params.tau0**2 * tau**2 / s02


def rqfi(spec: SqueezeSpec, params: ProbeParams, tau):
    """Relative QFI Q = F_g / F_g^vac; Q > 1 marks a squeezing advantage.

    Undefined at tau = 0 where both informations vanish.
    """
    if np.any(np.asarray(tau) <= 0.0):
        raise ValueError("rqfi is undefined at tau <= 0")
    return qfi_closed_form(spec, params, tau) / qfi_vacuum(params, tau)


def rqfi_asymptote(spec: SqueezeSpec, regime: str) -> float:
    """Exact limits of the relative QFI.

    short : lim_{tau->0}   Q = sigma^2/sigma0^2
    long  : lim_{tau->inf} Q = (1 + gamma^2) sigma0^2/sigma^2

    At theta = 0 these give (e^-2r, e^2r), at theta = pi/2 (e^2r, e^-2r),
    and at theta = pi/4 both limits equal cosh(2r).
    """
    gamma = correlation_gamma(spec)
    ratio = sigma_of(spec, 1.0) ** 2  # sigma^2/sigma0^2
    if regime == "short":
        return ratio
    if regime == "long":
        return (1.0 + gamma**2) / ratio
    raise ValueError(f"regime must be 'short' or 'long', got {regime!r}")


def sensitivity(spec: SqueezeSpec, params: ProbeParams, tau):
    """Time-normalized sensitivity eta = sqrt(tau / F_g), in m s^-2 / sqrt(Hz)."""
    if np.any(np.asarray(tau) <= 0.0):
        raise ValueError("sensitivity is undefined at tau <= 0")
    return np.sqrt(tau / qfi_closed_form(spec, params, tau))


def _evolved_cov_poly(spec: SqueezeSpec, params: ProbeParams, tau):
    """Entries of V(tau) as polynomials in tau (elementwise)."""
    gamma, sig2, v22 = _state_coeffs(spec, params)
    hbar, m = params.hbar, params.m
    v12_0 = 0.5 * hbar * gamma
    v11 = sig2 + 2.0 * v12_0 * tau / m + v22 * (tau / m) ** 2
    v12 = v12_0 + v22 * tau / m
    return v11, v12, v22


def cfi_generaldyne(spec: SqueezeSpec, params: ProbeParams, tau, meas: MeasurementSpec):
    """CFI of a general-dyne measurement on the evolved probe.

    The outcome law is Gaussian with g-independent covariance
    Vt = V(tau) + V_m, so I_g = h^T Vt^-1 h with h = (-tau^2/2, -m tau).
    Exact limits:

    position : I = (tau^2/2)^2 / V11(tau)
    momentum : I = (m tau)^2 / V22 = 4 sigma^2 m^2 tau^2 / (hbar^2 (1+gamma^2))
    """
    m = params.m
    v11, v12, v22 = _evolved_cov_poly(spec, params, tau)
    h1 = -0.5 * tau**2
    h2 = -m * tau
    if meas.kind == "position":
        return h1**2 / v11
    if meas.kind == "momentum":
        return h2**2 / v22
    vm = measurement_covariance(meas, params)
    t11 = v11 + vm[0, 0]
    t22 = v22 + vm[1, 1]
    det = t11 * t22 - v12**2
    return (h1**2 * t22 - 2.0 * h1 * h2 * v12 + h2**2 * t11) / det


def ratio_R(spec: SqueezeSpec, params: ProbeParams, tau, meas: MeasurementSpec):
    """R = I_g / F_g in [0, 1]; R = 1 means the measurement saturates the
    quantum bound.  Undefined at tau = 0."""
    if np.any(np.asarray(tau) <= 0.0):
        raise ValueError("ratio_R is undefined at tau <= 0")
    return cfi_generaldyne(spec, params, tau, meas) / qfi_closed_form(spec, params, tau)


def saturation_time(spec: SqueezeSpec, params: ProbeParams) -> Optional[float]:
    """Time at which a momentum measurement saturates the QFI, if any.

    F_g - I_momentum = tau^2 * (1+gamma^2)/(4 sigma^2) * (tau - tau_*)^2 with
    tau_* = -4 gamma m sigma^2 / (hbar (1 + gamma^2)): a perfect square, so
    the gap has a (unique, double) root at tau_* > 0 exactly when gamma < 0,
    i.e. theta in (pi/2, pi).  Returns None for gamma >= 0.
    """
    gamma, sig2, _ = _state_coeffs(spec, params)
    if gamma >= 0.0:
        return None
    return -4.0 * gamma * params.m * sig2 / (params.hbar * (1.0 + gamma**2))


def fisher_report(spec: SqueezeSpec, params: ProbeParams, tau: float, meas: MeasurementSpec) -> FisherReport:
    """Evaluate every figure of merit at one point (tau > 0)."""
    f = float(qfi_closed_form(spec, params, tau))
    fvac = float(qfi_vacuum(params, tau))
    i = float(cfi_generaldyne(spec, params, tau, meas))
    return FisherReport(
        tau=float(tau),
        F_g=f,
        F_vac=fvac,
        Q=f / fvac,
        I_g=i,
        R=i / f,
        eta=math.sqrt(tau / f),
    )


def qfi_gaussian_oracle(
    state_at: Callable[[float, float], GaussianState],
    params: ProbeParams,
    tau: float,
    mode: str = "analytic",
    dg: Optional[float] = None,
) -> float:
    """Generic pure-Gaussian QFI evaluated on a state family.

    state_at(tau, g) must return the evolved GaussianState for acceleration
    g.  The QFI is Tr[(V^-1 dV/dg)^2]/4 + (d mean/dg)^T V^-1 (d mean/dg),
    with V taken at the true g of `params`.

    mode="analytic" uses the exact derivatives of the free-fall family
    (d mean/dg from mean_sensitivity, dV/dg = 0); mode="fd" differentiates
    the family by central differences with step dg (default 1e-6 * max(|g|,
    1)) as an independent cross-check.
    """
    g = params.g
    state = state_at(tau, g)
    v = state.cov
    det = v[0, 0] * v[1, 1] - v[0, 1] ** 2
    if det <= 0.0:
        raise InvalidStateError(f"covariance matrix is singular (det = {det})")

    if mode == "analytic":
        dd = mean_sensitivity(EvolutionSpec(tau, params))
        dv = np.zeros((2, 2))
    elif mode == "fd":
        if dg is None:
            dg = 1e-6 * max(abs(g), 1.0)
        sp = state_at(tau, g + dg)
        sm = state_at(tau, g - dg)
        dd = (sp.mean - sm.mean) / (2.0 * dg)
        dv = (sp.cov - sm.cov) / (2.0 * dg)
    else:
        raise ValueError(f"mode must be 'analytic' or 'fd', got {mode!r}")

    # 2x2 inverse written out; the trace term vanishes identically for the
    # free-fall family but is kept for generic covariance derivatives.
    vinv = np.array([[v[1, 1], -v[0, 1]], [-v[0, 1], v[0, 0]]]) / det
    trace_term = 0.25 * np.trace((vinv @ dv) @ (vinv @ dv))
    displacement_term = dd @ vinv @ dd
    return float(trace_term + displacement_term)


def freefall_family(spec: SqueezeSpec, params: ProbeParams) -> Callable[[float, float], GaussianState]:
    """State family (tau, g) -> evolved squeezed vacuum, for the oracle.

    The initial state carries no g dependence, so it is built once per
    family.
    """
    state0 = make_squeezed_vacuum(spec, params)

    def state_at(tau: float, g: float) -> GaussianState:
        p = params if g == params.g else replace(params, g=g)
        return evolve(state0, EvolutionSpec(tau, p))

    return state_at


def _golden_max(f: Callable[[float], float], lo: float, hi: float, tol: float):
    """Golden-section maximization on [lo, hi]; returns (x, f(x)).

    Interval form (not three-point bracket) so plateaus and boundary maxima
    shrink gracefully instead of raising.
    """
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def optimal_phase(r: float, params: ProbeParams, tau: float, meas: MeasurementSpec, n_coarse: int = 256):
    """Squeezing phase maximizing R = I_g/F_g at fixed (r, tau, meas).

    Coarse scan of n_coarse equispaced angles in [0, pi) followed by a
    golden-section refinement to 1e-6 rad; R is pi-periodic in theta, so the
    refinement bracket may wrap.  Ties (a theta-independent R, e.g. r = 0)
    resolve to theta = 0.  Returns (theta_opt, R_max).
    """
    if not (tau > 0.0):
        raise ValueError("optimal_phase is undefined at tau <= 0")
    if not (r >= 0.0):
        raise ValueError(f"squeezing amplitude must be >= 0, got {r}")

    def objective(theta: float) -> float:
        return float(ratio_R(SqueezeSpec(r, theta % math.pi), params, tau, meas))

    thetas = np.linspace(0.0, math.pi, n_coarse, endpoint=False)
    values = np.array([objective(t) for t in thetas])
    if values.max() - values.min() <= 1e-14 * max(abs(values.max()), 1e-300):
        return 0.0, float(values[0])

    i = int(np.argmax(values))
    step = math.pi / n_coarse
    theta_opt, r_max = _golden_max(objective, float(thetas[i]) - step, float(thetas[i]) + step, 1e-6)
    theta_opt %= math.pi
    if math.pi - theta_opt < 1e-9:
        theta_opt = 0.0
    return float(theta_opt), float(r_max)
