"""Closed forms as printed in the source literature, transcribed verbatim.

These expressions are kept character-for-character -- including suspected
misprints and convention slips -- solely so the audit can quantify how far
each printed form sits from the library's phase-space derivations.  Nothing
here is used by the library proper.

Known findings reproduced by the audit:

* the printed position and momentum CFI limits agree with the generic
  general-dyne CFI to rounding error;
* the printed evolved-covariance entries agree only when sigma = sigma0;
* the printed finite-s CFI and the printed heterodyne CFI mix terms of
  different dimensions and disagree with the generic formula;
* the tabulated long-time relative-QFI limit for the correlated phase
  (cosh^2 2r) disagrees with the exact limit cosh 2r;
* the relative-QFI series have correct general tau^0..tau^2 (and 1/tau^0..
  1/tau^3) coefficients but sign/power slips in the tau^3 term and in the
  printed special cases.
"""

from __future__ import annotations

import math

from .states import ProbeParams, SqueezeSpec, correlation_gamma, sigma_of

SHORT_TABLE_PRINTED = {
    "theta=0": lambda r: math.exp(-2.0 * r),
    "theta=pi/2": lambda r: math.exp(2.0 * r),
    "theta=pi/4": lambda r: math.cosh(2.0 * r),
}

LONG_TABLE_PRINTED = {
    "theta=0": lambda r: math.exp(2.0 * r),
    "theta=pi/2": lambda r: math.exp(-2.0 * r),
    "theta=pi/4": lambda r: math.cosh(2.0 * r) ** 2,
}


def _gsig(spec: SqueezeSpec, params: ProbeParams):
    return correlation_gamma(spec), sigma_of(spec, params.sigma0) ** 2


def doubled_cov_zz_printed(spec: SqueezeSpec, params: ProbeParams, tau: float) -> float:
    """sigma_11(tau) = sigma^2 (gamma^2+1)/2 * tau^2/tau0^2
    + 2 sigma^2 gamma tau/tau0 + 2 sigma^2."""
    gamma, sig2 = _gsig(spec, params)
    t0 = params.tau0
    return 0.5 * sig2 * (gamma**2 + 1.0) * tau**2 / t0**2 + 2.0 * sig2 * gamma * tau / t0 + 2.0 * sig2


def doubled_cov_pp_printed(spec: SqueezeSpec, params: ProbeParams, tau: float) -> float:
    """sigma_22 = (gamma^2+1)/2 * m^2 sigma^2 / tau0^2 (time independent)."""
    gamma, sig2 = _gsig(spec, params)
    return 0.5 * (gamma**2 + 1.0) * params.m**2 * sig2 / params.tau0**2


def doubled_cov_zp_printed(spec: SqueezeSpec, params: ProbeParams, tau: float) -> float:
    """sigma_12(tau) = hbar (gamma^2+1)/2 * tau/tau0 + gamma hbar."""
    gamma, _ = _gsig(spec, params)
    hbar = params.hbar
    return 0.5 * hbar * (gamma**2 + 1.0) * tau / params.tau0 + gamma * hbar


def cfi_position_printed(spec: SqueezeSpec, params: ProbeParams, tau: float) -> float:
    """Printed s -> 0 CFI limit (this one checks out)."""
    gamma, sig2 = _gsig(spec, params)
    m, hbar = params.m, params.hbar
    den = hbar**2 * gamma**2 * tau**2 + 4.0 * hbar * gamma * m * sig2 * tau + 4.0 * m**2 * sig2**2 + tau**2 * hbar**2
    return tau**4 * m**2 * sig2 / den


def cfi_momentum_printed(spec: SqueezeSpec, params: ProbeParams, tau: float) -> float:
    """Printed s -> infinity CFI limit (this one checks out)."""
    gamma, sig2 = _gsig(spec, params)
    return 4.0 * tau**2 * params.m**2 * sig2 / (params.hbar**2 * (gamma**2 + 1.0))


def cfi_generaldyne_printed(spec: SqueezeSpec, params: ProbeParams, tau: float, s: float) -> float:
    """Printed finite-s CFI; mixes dimensions (e.g. a bare s tau^3 term) and
    repeats 4 m^2 s sigma^2 in the denominator, exactly as printed."""
    gamma, sig2 = _gsig(spec, params)
    m, hbar = params.m, params.hbar
    num = (
        8.0 * tau**2 * s * sig2 * m**4 * (2.0 * sig2 + s)
        + 16.0 * hbar * gamma * m**3 * s * sig2
        + s * tau**3
        + tau**3 * m**2 * (hbar**2 * (gamma**2 + 1.0) * s + 2.0 * sig2)
    )
    den = (
        2.0 * hbar**2 * s**2 * m**2 * (gamma**2 + 1.0)
        + 4.0 * m**2 * s * sig2
        + 8.0 * m**2 * sig2**2
        + 4.0 * m**2 * s * sig2
        + 8.0 * hbar * gamma * m * tau * sig2
        + 2.0 * tau**2 * hbar**2 * (gamma**2 + 1.0)
    )
    return num / den


def cfi_heterodyne_printed(spec: SqueezeSpec, params: ProbeParams, tau: float) -> float:
    """Printed s = 1 CFI; the denominator's gamma term carries a literal
    4 * 2 coefficient, kept as 8."""
    gamma, sig2 = _gsig(spec, params)
    m, hbar = params.m, params.hbar
    num = (
        4.0 * tau**2 * (2.0 * sig2**2 + sig2) * m**4
        + 4.0 * tau**3 * sig2 * hbar * gamma * m**3
        + tau**4 * (0.5 * hbar**2 * (gamma**2 + 1.0) + sig2) * m**2
    )
    den = (
        (gamma**2 + 2.0 * sig2 + 1.0) * m * hbar**2
        + 4.0 * m * sig2**2
        + 2.0 * m * sig2
        + 8.0 * hbar * gamma * m * sig2 * tau
        + tau**2 * hbar**2 * (gamma**2 + 1.0)
    )
    return num / den


def rqfi_short_series_printed(spec: SqueezeSpec, params: ProbeParams, tau: float) -> float:
    """Printed small-tau series of the relative QFI, through tau^3."""
    r, theta = spec.r, spec.theta
    sin2t, cos2t = math.sin(2.0 * theta), math.cos(2.0 * theta)
    sh = math.sinh(2.0 * r)
    t0 = params.tau0
    return (
        sigma_of(spec, 1.0) ** 2
        + sh * sin2t * tau / (2.0 * t0)
        + sh * cos2t * tau**2 / (8.0 * t0**2)
        + sh * sin2t * tau**3 / (32.0 * t0**3)
    )


def rqfi_long_series_printed(spec: SqueezeSpec, params: ProbeParams, tau: float) -> float:
    """Printed large-tau series of the relative QFI, through 1/tau^3."""
    r, theta = spec.r, spec.theta
    sin2t, cos2t = math.sin(2.0 * theta), math.cos(2.0 * theta)
    sh = math.sinh(2.0 * r)
    t0 = params.tau0
    return (
        (sh**2 * sin2t**2 + 1.0) / sigma_of(spec, 1.0) ** 2
        + 8.0 * sh * sin2t * t0 / tau
        - 32.0 * sh * cos2t * t0**2 / tau**2
        - 128.0 * sh * sin2t * t0**3 / tau**3
    )


def rqfi_short_series_case_printed(case: str, r: float, params: ProbeParams, tau: float) -> float:
    """Printed small-tau specializations (note the sign/power slips relative
    to the printed general series)."""
    sh = math.sinh(2.0 * r)
    t0 = params.tau0
    if case == "theta=0":
        return math.exp(-2.0 * r) + sh * tau**2 / (8.0 * t0**2)
    if case == "theta=pi/2":
        return math.exp(2.0 * r) - sh * tau**2 / (8.0 * t0**2)
    if case == "theta=pi/4":
        return math.cosh(2.0 * r) - sh * tau / (2.0 * t0**2) + sh * tau**3 / (32.0 * t0**3)
    raise ValueError(f"unknown case {case!r}")


def rqfi_long_series_case_printed(case: str, r: float, params: ProbeParams, tau: float) -> float:
    """Printed large-tau specializations."""
    sh = math.sinh(2.0 * r)
    t0 = params.tau0
    if case == "theta=0":
        return math.exp(2.0 * r) - 32.0 * sh * t0**2 / tau
    if case == "theta=pi/2":
        return math.exp(-2.0 * r) + 32.0 * sh * t0**2 / tau
    if case == "theta=pi/4":
        return math.cosh(2.0 * r) ** 2 + 8.0 * sh * t0 / tau - 128.0 * sh * t0**3 / tau**3
    raise ValueError(f"unknown case {case!r}")
