#!/usr/bin/env python3
"""Which measurement actually reaches the quantum bound?

Scans the general-dyne family over (tau, theta) at r = 0.5 and compares
position (s -> 0), heterodyne (s = 1) and momentum (s -> inf) detection
through the ratio R = CFI/QFI.  Only the momentum measurement touches
R = 1, and only along the curve tau = tau*(theta) traced out by
anticorrelated probes (sin 2 theta < 0); `optimal_phase` inverts that
curve numerically.
"""

import math
from pathlib import Path

import numpy as np

from squeezefall import (
    MeasurementSpec,
    ProbeParams,
    SqueezeSpec,
    optimal_phase,
    ratio_R,
    saturation_time,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

params = ProbeParams.natural()
r = 0.5
thetas = np.linspace(0.0, math.pi, 181, endpoint=False)
taus = np.linspace(0.05, 5.0, 120)

print(f"Saturation times tau* at r = {r} (momentum measurement):\n")
for frac in (0.55, 0.6, 0.7, 0.75, 0.85):
    spec = SqueezeSpec(r, frac * math.pi)
    tau_star = saturation_time(spec, params)
    check = ratio_R(spec, params, tau_star, MeasurementSpec.momentum())
    print(f"  theta = {frac:.2f} pi : tau* = {tau_star:.4f}  (R there = {check:.12f})")
spec = SqueezeSpec(r, math.pi / 4)
print(f"  theta = 0.25 pi : no saturation (gamma > 0) -> {saturation_time(spec, params)}")

tau_probe = 4.0 * math.tanh(1.0)
theta_opt, r_max = optimal_phase(r, params, tau_probe, MeasurementSpec.momentum())
print(f"\nInverting at tau = {tau_probe:.4f}: optimal phase = {theta_opt:.6f} rad "
      f"(3 pi/4 = {3 * math.pi / 4:.6f}), R = {r_max:.10f}")

for meas, label in ((MeasurementSpec.position(), "position"), (MeasurementSpec.heterodyne(), "heterodyne")):
    best = 0.0
    for theta in thetas:
        best = max(best, float(np.max(np.asarray(ratio_R(SqueezeSpec(r, float(theta)), params, taus, meas)))))
    print(f"{label:>11s}: best R over the whole (tau, theta) map = {best:.4f} < 1")

maps = {}
for label, meas in (("momentum", MeasurementSpec.momentum()),
                    ("position", MeasurementSpec.position()),
                    ("heterodyne", MeasurementSpec.heterodyne())):
    grid = np.empty((len(thetas), len(taus)))
    for i, theta in enumerate(thetas):
        grid[i] = np.asarray(ratio_R(SqueezeSpec(r, float(theta)), params, taus, meas))
    maps[label] = grid
    path = OUT / f"ratio_map_{label}.csv"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("tau,theta,R\n")
        for j, tau in enumerate(taus):
            for i, theta in enumerate(thetas):
                fh.write(f"{tau:.17g},{theta:.17g},{grid[i, j]:.17g}\n")
    print(f"wrote {path}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 3, figsize=(13, 3.6), sharey=True)
    for ax, (label, grid) in zip(axes, maps.items()):
        art = ax.pcolormesh(taus, thetas / math.pi, grid, vmin=0.0, vmax=1.0, shading="auto")
        ax.set_title(f"{label}")
        ax.set_xlabel(r"$\tau/\tau_0$")
    axes[0].set_ylabel(r"$\theta/\pi$")
    fig.colorbar(art, ax=axes, label="R = CFI/QFI")
    fig.savefig(OUT / "ratio_maps.png", dpi=160)
    print(f"wrote {OUT / 'ratio_maps.png'}")
except ImportError:
    print("matplotlib not installed; skipped the PNG")
