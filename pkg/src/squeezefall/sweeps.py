"""Config-driven parameter sweeps emitting figure-ready datasets.

A sweep is described by a SweepConfig (mode, value grids, units, output);
`run_sweep` evaluates the corresponding library operation at every grid
point and returns (header, rows) with a fixed column contract per mode:

  qfi-vs-time / rqfi-time / rqfi-map : tau,r,theta,F,F_vac,Q
  ratio-map                          : tau,theta,s,I,F,R
  wigner-grid                        : z,p,W
  sensitivity                        : tau,r,theta,eta
  montecarlo                         : n,experiments,g_hat_mean,g_hat_var,crb,normalized_var
  audit                              : formula,grid_point,library_value,printed_value,rel_dev

Rows are ordered with the outermost grid varying slowest, grids nested in
the declared order tau, r, theta, s (z before p for Wigner grids).  Floats
are serialized with 17 significant digits, so emitted files are
byte-reproducible and parse back to the exact in-memory values.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .audit import run_audit
from .dynamics import evolved_squeezed_state
from .fisher import MeasurementSpec, cfi_generaldyne, qfi_closed_form, qfi_vacuum, sensitivity
from .montecarlo import ExperimentPlan, cramer_rao_check
from .states import ProbeParams, SqueezeSpec, wigner

MODES = (
    "qfi-vs-time",
    "rqfi-time",
    "rqfi-map",
    "ratio-map",
    "wigner-grid",
    "sensitivity",
    "montecarlo",
    "audit",
)

HEADERS = {
    "qfi-vs-time": ["tau", "r", "theta", "F", "F_vac", "Q"],
    "rqfi-time": ["tau", "r", "theta", "F", "F_vac", "Q"],
    "rqfi-map": ["tau", "r", "theta", "F", "F_vac", "Q"],
    "ratio-map": ["tau", "theta", "s", "I", "F", "R"],
    "wigner-grid": ["z", "p", "W"],
    "sensitivity": ["tau", "r", "theta", "eta"],
    "montecarlo": ["n", "experiments", "g_hat_mean", "g_hat_var", "crb", "normalized_var"],
    "audit": ["formula", "grid_point", "library_value", "printed_value", "rel_dev"],
}

_THETA_DEFAULT_MAP = tuple(np.linspace(0.0, math.pi, 181, endpoint=False))

# Per-mode grid defaults mirroring the reference figures.
_GRID_DEFAULTS = {
    "qfi-vs-time": {
        "tau": ("log", 0.01, 50.0, 200),
        "r": (0.0, 0.4, 0.5, 0.6),
        "theta": (0.0,),
    },
    "rqfi-time": {
        "tau": ("log", 0.01, 50.0, 200),
        "r": (0.4, 0.5, 0.6),
        "theta": (0.0, math.pi / 4.0, math.pi / 2.0),
    },
    "rqfi-map": {
        "tau": ("log", 0.01, 50.0, 100),
        "r": (0.5,),
        "theta": _THETA_DEFAULT_MAP,
    },
    "ratio-map": {
        "tau": ("lin", 0.05, 5.0, 100),
        "r": (0.5,),
        "theta": _THETA_DEFAULT_MAP,
        "s": (math.inf,),
    },
    "wigner-grid": {"tau": (0.0,), "r": (0.5,), "theta": (math.pi / 4.0,)},
    "sensitivity": {
        "tau": ("log", 0.01, 50.0, 200),
        "r": (0.0, 0.5),
        "theta": (0.0, math.pi / 4.0, math.pi / 2.0),
    },
    "montecarlo": {"tau": (1.0,), "r": (0.0,), "theta": (0.0,), "s": (math.inf,)},
    "audit": {},
}


class ConfigError(ValueError):
    """Invalid sweep configuration; `path` points at the offending field."""

    def __init__(self, path: str, message: str) -> None:
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class SweepConfig:
    mode: str
    params: ProbeParams
    units: str = "natural"
    grids: dict = field(default_factory=dict)
    n_trials: tuple = (10000,)
    experiments: int = 200
    seed: int = 0
    out: Optional[str] = None
    fmt: str = "csv"


def parse_float_token(token, path: str) -> float:
    """One grid value; accepts numbers and the strings 'inf'/'Infinity'."""
    if isinstance(token, str):
        token = token.strip()
        if token.lower() in ("inf", "infinity"):
            return math.inf
        try:
            return float(token)
        except ValueError:
            raise ConfigError(path, f"not a number: {token!r}") from None
    if isinstance(token, (int, float)):
        return float(token)
    raise ConfigError(path, f"not a number: {token!r}")


def _expand_range(lo: float, hi: float, count: int, spacing: str, path: str) -> tuple:
    if count < 1:
        raise ConfigError(f"{path}.count", f"grid count must be >= 1, got {count}")
    if spacing == "linear":
        return tuple(np.linspace(lo, hi, count))
    if spacing == "log":
        if lo <= 0.0 or hi <= 0.0:
            raise ConfigError(f"{path}.spacing", "log spacing requires positive endpoints")
        return tuple(np.geomspace(lo, hi, count))
    raise ConfigError(f"{path}.spacing", f"spacing must be 'linear' or 'log', got {spacing!r}")


def parse_grid_value(value, path: str) -> tuple:
    """Grid from a config entry: scalar, list of values, or a
    {min, max, count, spacing} range."""
    if isinstance(value, dict):
        if "values" in value:
            return tuple(parse_float_token(v, path) for v in value["values"])
        for key in ("min", "max", "count"):
            if key not in value:
                raise ConfigError(f"{path}.{key}", "range grids need min, max and count")
        return _expand_range(
            parse_float_token(value["min"], f"{path}.min"),
            parse_float_token(value["max"], f"{path}.max"),
            int(value["count"]),
            value.get("spacing", "linear"),
            path,
        )
    if isinstance(value, (list, tuple)):
        return tuple(parse_float_token(v, path) for v in value)
    return (parse_float_token(value, path),)


def parse_grid_flag(text: str, path: str) -> tuple:
    """Grid from a command-line token: 'a,b,c' or 'min:max:count[:spacing]'."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (3, 4):
            raise ConfigError(path, f"range flags look like min:max:count[:linear|log], got {text!r}")
        spacing = parts[3] if len(parts) == 4 else "linear"
        return _expand_range(
            parse_float_token(parts[0], path),
            parse_float_token(parts[1], path),
            int(parts[2]),
            spacing,
            path,
        )
    return tuple(parse_float_token(v, path) for v in text.split(","))


def _default_grids(mode: str) -> dict:
    grids = {}
    for name, spec in _GRID_DEFAULTS[mode].items():
        if spec and spec[0] in ("log", "lin"):
            kind, lo, hi, count = spec
            arr = np.geomspace(lo, hi, count) if kind == "log" else np.linspace(lo, hi, count)
            grids[name] = tuple(arr)
        else:
            grids[name] = tuple(spec)
    return grids


def _require_single(grids: dict, name: str, mode: str) -> None:
    if len(grids.get(name, ())) != 1:
        raise ConfigError(f"grid.{name}", f"mode {mode} needs exactly one {name} value")


def validate_config(config: SweepConfig) -> SweepConfig:
    mode = config.mode
    if mode not in MODES:
        raise ConfigError("mode", f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    if config.units not in ("natural", "si"):
        raise ConfigError("units", f"units must be 'natural' or 'si', got {config.units!r}")
    if config.fmt not in ("csv", "json"):
        raise ConfigError("format", f"format must be 'csv' or 'json', got {config.fmt!r}")

    grids = config.grids
    for name, values in grids.items():
        if len(values) < 1:
            raise ConfigError(f"grid.{name}", "grid must contain at least one value")

    if mode in ("qfi-vs-time", "rqfi-time", "rqfi-map", "ratio-map", "sensitivity", "montecarlo"):
        for name in ("tau", "r", "theta"):
            if name not in grids:
                raise ConfigError(f"grid.{name}", f"mode {mode} needs a {name} grid")
        if any(t <= 0.0 for t in grids["tau"]):
            raise ConfigError("grid.tau", f"mode {mode} needs tau > 0 (ratios are undefined at tau = 0)")
        if any(r < 0.0 for r in grids["r"]):
            raise ConfigError("grid.r", "squeezing amplitudes must be >= 0")
    if mode in ("ratio-map", "montecarlo"):
        if "s" not in grids:
            raise ConfigError("grid.s", f"mode {mode} needs an s grid (0 = position, inf = momentum)")
        if any(s < 0.0 for s in grids["s"]):
            raise ConfigError("grid.s", "s must be >= 0 (0 = position, inf = momentum)")
        _require_single(grids, "r", mode)
    if mode == "montecarlo":
        for name in ("tau", "theta", "s"):
            _require_single(grids, name, mode)
        if any(int(n) != n or n < 2 for n in config.n_trials):
            raise ConfigError("n", "trial counts must be integers >= 2")
        if config.experiments < 2:
            raise ConfigError("experiments", "need at least 2 experiments for a variance")
        if config.seed < 0:
            raise ConfigError("seed", "seed must be a non-negative integer")
    if mode == "wigner-grid":
        for name in ("tau", "r", "theta"):
            if name not in grids:
                raise ConfigError(f"grid.{name}", f"mode {mode} needs a {name} value")
            _require_single(grids, name, mode)
        if grids["tau"][0] < 0.0:
            raise ConfigError("grid.tau", "tau must be >= 0")
    return config


def measurement_from_s(s: float) -> MeasurementSpec:
    """0 -> exact position limit, inf -> exact momentum limit, otherwise
    finite-s general-dyne."""
    if s == 0.0:
        return MeasurementSpec.position()
    if math.isinf(s):
        return MeasurementSpec.momentum()
    return MeasurementSpec.generaldyne(s)


def build_config(mode: str, data: dict) -> SweepConfig:
    """Assemble and validate a SweepConfig from a plain mapping (parsed
    config file merged with flag overrides; flags win upstream)."""
    known = {"units", "params", "grid", "n", "experiments", "seed", "out", "format", "mode"}
    for key in data:
        if key not in known:
            raise ConfigError(key, "unknown configuration field")

    units = data.get("units", "natural")
    pdata = data.get("params", {})
    if not isinstance(pdata, dict):
        raise ConfigError("params", "params must be a mapping")
    if units == "si":
        for key in ("m", "sigma0"):
            if key not in pdata:
                raise ConfigError(f"params.{key}", "SI units require explicit probe parameters")
        try:
            params = ProbeParams(
                m=parse_float_token(pdata["m"], "params.m"),
                sigma0=parse_float_token(pdata["sigma0"], "params.sigma0"),
                hbar=parse_float_token(pdata.get("hbar", 1.054571817e-34), "params.hbar"),
                g=parse_float_token(pdata.get("g", 9.81), "params.g"),
            )
        except ValueError as exc:
            raise ConfigError("params", str(exc)) from None
    else:
        extra = set(pdata) - {"g"}
        if extra:
            raise ConfigError(f"params.{sorted(extra)[0]}", "natural units fix m = sigma0 = hbar = 1; only g may be set")
        params = ProbeParams.natural(g=parse_float_token(pdata.get("g", 9.81), "params.g"))

    grids = _default_grids(mode)
    gdata = data.get("grid", {})
    if not isinstance(gdata, dict):
        raise ConfigError("grid", "grid must be a mapping of axis -> values")
    for name, value in gdata.items():
        if name not in ("tau", "r", "theta", "s", "z", "p"):
            raise ConfigError(f"grid.{name}", "unknown grid axis")
        if isinstance(value, str):
            grids[name] = parse_grid_flag(value, f"grid.{name}")
        else:
            grids[name] = parse_grid_value(value, f"grid.{name}")

    n_raw = data.get("n", [10000])
    if isinstance(n_raw, (int, float, str)):
        n_raw = [n_raw]
    try:
        n_trials = tuple(int(v) for v in n_raw)
    except (TypeError, ValueError):
        raise ConfigError("n", f"trial counts must be integers, got {n_raw!r}") from None

    try:
        experiments = int(data.get("experiments", 200))
        seed = int(data.get("seed", 0))
    except (TypeError, ValueError) as exc:
        raise ConfigError("experiments/seed", str(exc)) from None

    config = SweepConfig(
        mode=mode,
        params=params,
        units=units,
        grids=grids,
        n_trials=n_trials,
        experiments=experiments,
        seed=seed,
        out=data.get("out"),
        fmt=data.get("format", "csv"),
    )
    return validate_config(config)


def run_sweep(config: SweepConfig):
    """Evaluate the configured sweep; returns (header, rows)."""
    validate_config(config)
    mode = config.mode
    params = config.params
    grids = config.grids
    rows = []

    if mode in ("qfi-vs-time", "rqfi-time", "rqfi-map"):
        for tau in grids["tau"]:
            fvac = float(qfi_vacuum(params, tau))
            for r in grids["r"]:
                for theta in grids["theta"]:
                    f = float(qfi_closed_form(SqueezeSpec(r, theta), params, tau))
                    rows.append((tau, r, theta, f, fvac, f / fvac))
    elif mode == "ratio-map":
        r = grids["r"][0]
        for tau in grids["tau"]:
            for theta in grids["theta"]:
                spec = SqueezeSpec(r, theta)
                f = float(qfi_closed_form(spec, params, tau))
                for s in grids["s"]:
                    i = float(cfi_generaldyne(spec, params, tau, measurement_from_s(s)))
                    rows.append((tau, theta, s, i, f, i / f))
    elif mode == "sensitivity":
        for tau in grids["tau"]:
            for r in grids["r"]:
                for theta in grids["theta"]:
                    rows.append((tau, r, theta, float(sensitivity(SqueezeSpec(r, theta), params, tau))))
    elif mode == "wigner-grid":
        state = evolved_squeezed_state(SqueezeSpec(grids["r"][0], grids["theta"][0]), params, grids["tau"][0])
        z_grid = grids.get("z")
        p_grid = grids.get("p")
        if z_grid is None:
            half = 5.0 * math.sqrt(state.cov[0, 0])
            z_grid = tuple(np.linspace(state.mean[0] - half, state.mean[0] + half, 201))
        if p_grid is None:
            half = 5.0 * math.sqrt(state.cov[1, 1])
            p_grid = tuple(np.linspace(state.mean[1] - half, state.mean[1] + half, 201))
        p_arr = np.asarray(p_grid)
        for z in z_grid:
            w_line = np.asarray(wigner(state, z, p_arr))
            rows.extend((z, p, float(w)) for p, w in zip(p_grid, w_line))
    elif mode == "montecarlo":
        spec = SqueezeSpec(grids["r"][0], grids["theta"][0])
        meas = measurement_from_s(grids["s"][0])
        for n in config.n_trials:
            plan = ExperimentPlan(
                spec=spec,
                params=params,
                tau=grids["tau"][0],
                meas=meas,
                n=int(n),
                experiments=config.experiments,
                seed=config.seed,
            )
            res = cramer_rao_check(plan)
            rows.append((int(n), config.experiments, res.g_hat_mean, res.g_hat_var, res.crb, res.normalized_var))
    elif mode == "audit":
        rows = [
            (row.formula, row.grid_point, row.library_value, row.printed_value, row.rel_dev)
            for row in run_audit(params)
        ]
    else:  # unreachable after validation
        raise ConfigError("mode", f"unknown mode {mode!r}")

    return HEADERS[mode], rows


def _format_value(value) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean cells are not part of any dataset contract")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def _json_cell(value) -> str:
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    v = float(value)
    if math.isinf(v):
        return "Infinity" if v > 0 else "-Infinity"
    return f"{v:.17g}"


def render_csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_format_value(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_json(header, rows) -> str:
    body = ",\n".join(
        "{" + ", ".join(f"{json.dumps(k)}: {_json_cell(v)}" for k, v in zip(header, row)) + "}"
        for row in rows
    )
    return "[\n" + body + "\n]\n"


def emit(header, rows, fmt: str, path: Optional[str] = None) -> None:
    """Write the dataset as CSV or JSON to `path` (stdout when None).

    Output is byte-identical across runs for identical inputs; I/O failures
    propagate as OSError.
    """
    if not rows:
        raise ValueError("refusing to emit an empty dataset")
    text = render_csv(header, rows) if fmt == "csv" else render_json(header, rows)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
