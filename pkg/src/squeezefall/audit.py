"""Compare the library's derivations against printed closed forms.

For every transcribed expression in `printed`, the audit evaluates both the
library value and the printed value over a fixed grid and reports, per
formula, the maximum relative deviation and the grid point attaining it.
The audit only reports; it never feeds back into the library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import printed
from .dynamics import evolved_squeezed_state
from .fisher import MeasurementSpec, cfi_generaldyne, rqfi, rqfi_asymptote
from .states import ProbeParams, SqueezeSpec, doubled_covariance

R_GRID = (0.4, 0.5, 0.6)
THETA_GRID = tuple(k * math.pi / 8.0 for k in range(8))
TAU_GRID = (0.2, 0.5, 1.0, 2.0, 5.0)  # units of tau0
S_GRID = (0.1, 1.0, 10.0)
TAU_SHORT = (0.01, 0.02, 0.05)  # units of tau0
TAU_LONG = (20.0, 50.0, 100.0)  # units of tau0

# Squeezing amplitude used for the tabulated-asymptote rows.
TABLE_R = 0.5

_CASE_THETAS = {"theta=0": 0.0, "theta=pi/2": math.pi / 2.0, "theta=pi/4": math.pi / 4.0}


@dataclass(frozen=True)
class AuditRow:
    formula: str
    grid_point: str
    library_value: float
    printed_value: float
    rel_dev: float


def _rel_dev(lib: float, prt: float) -> float:
    """Deviation of the printed value relative to the library value."""
    return abs(lib - prt) / max(abs(lib), 1e-300)


def _worst(formula: str, entries) -> AuditRow:
    """entries: iterable of (grid_point, library_value, printed_value)."""
    best = None
    for point, lib, prt in entries:
        dev = _rel_dev(lib, prt)
        if best is None or dev > best.rel_dev:
            best = AuditRow(formula, point, lib, prt, dev)
    if best is None:
        raise ValueError(f"empty audit grid for {formula}")
    return best


def _cov_entries(params: ProbeParams, printed_fn, index):
    i, j = index
    for r in R_GRID:
        for theta in THETA_GRID:
            spec = SqueezeSpec(r, theta)
            for tt in TAU_GRID:
                tau = tt * params.tau0
                state = evolved_squeezed_state(spec, params, tau)
                lib = float(doubled_covariance(state)[i, j])
                yield _point(tau=tau, r=r, theta=theta), lib, printed_fn(spec, params, tau)


def _cfi_entries(params: ProbeParams, meas_of, printed_fn, s_values=(None,)):
    for r in R_GRID:
        for theta in THETA_GRID:
            spec = SqueezeSpec(r, theta)
            for tt in TAU_GRID:
                tau = tt * params.tau0
                for s in s_values:
                    lib = float(cfi_generaldyne(spec, params, tau, meas_of(s)))
                    prt = printed_fn(spec, params, tau) if s is None else printed_fn(spec, params, tau, s)
                    yield _point(tau=tau, r=r, theta=theta, s=s), lib, prt


def _series_entries(params: ProbeParams, tau_units, printed_fn):
    for r in R_GRID:
        for theta in THETA_GRID:
            spec = SqueezeSpec(r, theta)
            for tt in tau_units:
                tau = tt * params.tau0
                lib = float(rqfi(spec, params, tau))
                yield _point(tau=tau, r=r, theta=theta), lib, printed_fn(spec, params, tau)


def _series_case_entries(params: ProbeParams, tau_units, case, printed_case_fn):
    theta = _CASE_THETAS[case]
    for r in R_GRID:
        spec = SqueezeSpec(r, theta)
        for tt in tau_units:
            tau = tt * params.tau0
            lib = float(rqfi(spec, params, tau))
            yield _point(tau=tau, r=r, theta=theta), lib, printed_case_fn(case, r, params, tau)


def _point(**kv) -> str:
    parts = []
    for key, value in kv.items():
        if value is None:
            continue
        parts.append(f"{key}={value:.6g}")
    return ";".join(parts)


def run_audit(params: ProbeParams | None = None) -> list[AuditRow]:
    """One row per printed formula: its worst relative deviation from the
    library over the default grid, and where it happens."""
    if params is None:
        params = ProbeParams.natural()
    rows = [
        _worst("cov_zz_printed", _cov_entries(params, printed.doubled_cov_zz_printed, (0, 0))),
        _worst("cov_zp_printed", _cov_entries(params, printed.doubled_cov_zp_printed, (0, 1))),
        _worst("cov_pp_printed", _cov_entries(params, printed.doubled_cov_pp_printed, (1, 1))),
        _worst(
            "cfi_position_printed",
            _cfi_entries(params, lambda s: MeasurementSpec.position(), printed.cfi_position_printed),
        ),
        _worst(
            "cfi_momentum_printed",
            _cfi_entries(params, lambda s: MeasurementSpec.momentum(), printed.cfi_momentum_printed),
        ),
        _worst(
            "cfi_heterodyne_printed",
            _cfi_entries(params, lambda s: MeasurementSpec.heterodyne(), printed.cfi_heterodyne_printed),
        ),
        _worst(
            "cfi_generaldyne_printed",
            _cfi_entries(params, MeasurementSpec.generaldyne, printed.cfi_generaldyne_printed, S_GRID),
        ),
    ]

    for case, theta in _CASE_THETAS.items():
        spec = SqueezeSpec(TABLE_R, theta)
        rows.append(
            AuditRow(
                f"rqfi_table_short[{case}]",
                _point(r=TABLE_R, theta=theta),
                rqfi_asymptote(spec, "short"),
                printed.SHORT_TABLE_PRINTED[case](TABLE_R),
                _rel_dev(rqfi_asymptote(spec, "short"), printed.SHORT_TABLE_PRINTED[case](TABLE_R)),
            )
        )
        rows.append(
            AuditRow(
                f"rqfi_table_long[{case}]",
                _point(r=TABLE_R, theta=theta),
                rqfi_asymptote(spec, "long"),
                printed.LONG_TABLE_PRINTED[case](TABLE_R),
                _rel_dev(rqfi_asymptote(spec, "long"), printed.LONG_TABLE_PRINTED[case](TABLE_R)),
            )
        )

    rows.append(_worst("rqfi_short_series_printed", _series_entries(params, TAU_SHORT, printed.rqfi_short_series_printed)))
    rows.append(_worst("rqfi_long_series_printed", _series_entries(params, TAU_LONG, printed.rqfi_long_series_printed)))
    for case in _CASE_THETAS:
        rows.append(
            _worst(
                f"rqfi_short_series_printed[{case}]",
                _series_case_entries(params, TAU_SHORT, case, printed.rqfi_short_series_case_printed),
            )
        )
        rows.append(
            _worst(
                f"rqfi_long_series_printed[{case}]",
                _series_case_entries(params, TAU_LONG, case, printed.rqfi_long_series_case_printed),
            )
        )
    return rows
