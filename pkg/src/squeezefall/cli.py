"""Command-line front end for the sweep engine.

Every subcommand reads an optional JSON config file (--config) and accepts
flag overrides; flags win over file values.  Grids are given either as a
comma list ('0.4,0.5,0.6') or as a range 'min:max:count[:linear|log]'; the
measurement parameter s additionally understands '0' (exact position limit)
and 'inf' (exact momentum limit).

Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .sweeps import ConfigError, build_config, emit, run_sweep

_SUBCOMMAND_MODES = {
    "qfi": "qfi-vs-time",
    "rqfi": "rqfi-time",
    "rqfi-map": "rqfi-map",
    "ratio-map": "ratio-map",
    "wigner": "wigner-grid",
    "sensitivity": "sensitivity",
    "montecarlo": "montecarlo",
    "audit": "audit",
}

_HELP = {
    "qfi": "QFI and relative QFI versus time for a set of probes",
    "rqfi": "relative QFI Q = F/F_vac versus time",
    "rqfi-map": "relative QFI over a (tau, theta) map at fixed r",
    "ratio-map": "CFI/QFI ratio over (tau, theta, s) at fixed r",
    "wigner": "Wigner function of one probe state on a (z, p) grid",
    "sensitivity": "sensitivity eta = sqrt(tau/F) versus time",
    "montecarlo": "Monte-Carlo Cramer-Rao check of the linear estimators",
    "audit": "worst-case deviations of printed closed forms from the library",
}


def _add_common(sub: argparse.ArgumentParser, with_grids: bool) -> None:
    sub.add_argument("--config", metavar="PATH", help="JSON config file")
    sub.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    sub.add_argument("--format", choices=("csv", "json"), help="output format (default: csv)")
    sub.add_argument("--units", choices=("natural", "si"), help="unit system (default: natural)")
    sub.add_argument("--seed", type=int, help="reproducibility seed")
    sub.add_argument("--g", metavar="G", help="gravitational acceleration")
    sub.add_argument("--mass", metavar="KG", help="probe mass (SI units)")
    sub.add_argument("--sigma0", metavar="M", help="vacuum position width (SI units)")
    sub.add_argument("--hbar", metavar="JS", help="reduced Planck constant (SI units)")
    if with_grids:
        sub.add_argument("--tau", metavar="GRID", help="interrogation times")
        sub.add_argument("--r", metavar="GRID", help="squeezing amplitudes")
        sub.add_argument("--theta", metavar="GRID", help="squeezing phases (radians)")
        sub.add_argument("--s", metavar="GRID", help="general-dyne parameter(s); 0=position, inf=momentum")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squeezefall",
        description="Sweep datasets for squeezed-probe gravimetry figures.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name in _SUBCOMMAND_MODES:
        sub = subs.add_parser(name, help=_HELP[name])
        _add_common(sub, with_grids=name != "audit")
        if name == "wigner":
            sub.add_argument("--z", metavar="GRID", help="position grid (default: mean +- 5 sigma)")
            sub.add_argument("--p", metavar="GRID", help="momentum grid (default: mean +- 5 sigma)")
        if name == "montecarlo":
            sub.add_argument("--n", metavar="LIST", help="trials per experiment, comma list")
            sub.add_argument("--experiments", type=int, help="number of repeated experiments")
    return parser


def _merge(args: argparse.Namespace, file_data: dict) -> dict:
    data = dict(file_data)
    data.setdefault("grid", {})
    data.setdefault("params", {})
    data["grid"] = dict(data["grid"]) if isinstance(data["grid"], dict) else data["grid"]
    data["params"] = dict(data["params"]) if isinstance(data["params"], dict) else data["params"]

    for flag, key in (("units", "units"), ("out", "out"), ("format", "format"),
                      ("seed", "seed"), ("experiments", "experiments")):
        value = getattr(args, flag, None)
        if value is not None:
            data[key] = value
    for axis in ("tau", "r", "theta", "s", "z", "p"):
        value = getattr(args, axis, None)
        if value is not None:
            data["grid"][axis] = value
    for flag, key in (("g", "g"), ("mass", "m"), ("sigma0", "sigma0"), ("hbar", "hbar")):
        value = getattr(args, flag, None)
        if value is not None:
            data["params"][key] = value
    n = getattr(args, "n", None)
    if n is not None:
        data["n"] = n.split(",")
    return data


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    mode = _SUBCOMMAND_MODES[args.command]

    file_data: dict = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                file_data = json.load(fh)
        except OSError as exc:
            print(f"config error: --config: {exc}", file=sys.stderr)
            return 2
        except json.JSONDecodeError as exc:
            print(f"config error: {args.config}: {exc}", file=sys.stderr)
            return 2
        if not isinstance(file_data, dict):
            print(f"config error: {args.config}: top level must be an object", file=sys.stderr)
            return 2

    try:
        config = build_config(mode, _merge(args, file_data))
        header, rows = run_sweep(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    try:
        emit(header, rows, config.fmt, config.out)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
