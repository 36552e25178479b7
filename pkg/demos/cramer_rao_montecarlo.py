#!/usr/bin/env python3
"""Does the Cramer-Rao bound actually bind?  Simulate and check.

Draws measurement outcomes from the evolved probe, estimates g with the
closed-form linear estimators, and compares the spread of the estimates
across repeated experiments with 1/(n I_g).  Because the estimators are
efficient for this Gaussian location model, the normalized variance sits
at 1 up to sampling noise -- including at the saturation point, where the
momentum-measurement bound coincides with the quantum bound 1/(n F_g).
"""

import math

from squeezefall import (
    ExperimentPlan,
    MeasurementSpec,
    ProbeParams,
    SqueezeSpec,
    cramer_rao_check,
    qfi_closed_form,
    saturation_time,
)

params = ProbeParams.natural()
seed = 2024

print("Vacuum probe, tau = 1, momentum measurement:\n")
print(f"{'n':>8s} {'Var(g_hat)':>12s} {'1/(n I)':>12s} {'ratio':>7s}")
for n in (1_000, 4_000, 16_000, 64_000):
    plan = ExperimentPlan(SqueezeSpec(0.0), params, 1.0, MeasurementSpec.momentum(), n, 300, seed)
    res = cramer_rao_check(plan)
    print(f"{n:8d} {res.g_hat_var:12.3e} {res.crb:12.3e} {res.normalized_var:7.3f}")
print("\nVar(g_hat) tracks 1/(n I): halve the noise by quadrupling the data.")

spec = SqueezeSpec(0.5, 3 * math.pi / 4)
tau_star = saturation_time(spec, params)
plan = ExperimentPlan(spec, params, tau_star, MeasurementSpec.momentum(), 20_000, 300, seed)
res = cramer_rao_check(plan)
f = qfi_closed_form(spec, params, tau_star)
print(f"\nAnticorrelated probe at tau* = {tau_star:.4f} (momentum saturates the QFI there):")
print(f"  g_hat = {res.g_hat_mean:.5f}  (true g = {params.g})")
print(f"  Var(g_hat)/CRB = {res.normalized_var:.3f},  CRB x n x F_g = {res.crb * plan.n * f:.6f} (= 1: quantum-limited)")

print("\nPosition vs momentum at long times (vacuum probe, tau = 5):")
for meas, label in ((MeasurementSpec.momentum(), "momentum"), (MeasurementSpec.position(), "position")):
    res = cramer_rao_check(ExperimentPlan(SqueezeSpec(0.0), params, 5.0, meas, 10_000, 300, seed))
    print(f"  {label:>9s}: Var(g_hat) = {res.g_hat_var:.3e}")
print("The momentum record carries more information, exactly as I_g orders it.")
