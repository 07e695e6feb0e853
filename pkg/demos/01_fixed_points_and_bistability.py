#!/usr/bin/env python3
"""Fixed points of the Josephson-driven cavity: response, bistability,
bifurcation threshold and hysteresis.

Run:  python3 demos/01_fixed_points_and_bistability.py
"""

import numpy as np

from optocool import ModelDescriptor, bifurcation_threshold, find_fixed_points, resonant_fold_estimate

PHI0 = 0.06

print("== Weak resonant drive: linear response ==")
for drive in (5.0, 10.0, 20.0):
    fp = find_fixed_points(ModelDescriptor("josephson", delta=0.0, drive=drive, phi0=PHI0))[0]
    print(f"  E/hbar*gamma = {drive:6.1f}:  A0 = {fp.a0:8.4f}  (E*phi0 = {drive*PHI0:.2f})  n = {fp.n:8.3f}")

print("\n== Bifurcation threshold at resonance ==")
eb = bifurcation_threshold(ModelDescriptor("josephson", delta=0.0, drive=0.0, phi0=PHI0))
print(f"  numeric   E_bif/hbar*gamma = {eb:.4f}")
print(f"  analytic  gamma x*^2/(4 phi0^2 J1(x*)) = {resonant_fold_estimate(PHI0):.4f}")

print("\n== Above threshold: the saturated bistable pair ==")
for fp in find_fixed_points(ModelDescriptor("josephson", delta=0.0, drive=750.0, phi0=PHI0)):
    print(
        f"  branch {fp.branch:8s}: A0 = {fp.a0:8.4f}  theta0 = {fp.theta0:+.4f}"
        f"  n = {fp.n:8.2f}  stable = {fp.stable}"
    )
print("  (the stable pair pins to A0 = x*/(2 phi0); the theta0 = 0 branch has gone unstable)")

print("\n== Hysteresis window in detuning at E = 750 ==")
for delta in np.linspace(-0.15, 0.15, 7):
    fps = find_fixed_points(ModelDescriptor("josephson", delta=float(delta), drive=750.0, phi0=PHI0))
    labels = ", ".join(f"{fp.branch}(n={fp.n:.1f})" for fp in fps)
    print(f"  delta = {delta:+.3f} gamma: {labels}")
