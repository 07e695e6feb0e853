#!/usr/bin/env python3
"""Photon-number spectrum and optomechanical damping for three cavity
models, plus the correlator-transform cross-check.

Run:  python3 demos/02_spectrum_and_damping.py
"""

import numpy as np

from optocool import (
    ModelDescriptor,
    damping_via_asymmetry,
    find_fixed_points,
    optomechanical_damping,
    photon_number_spectrum,
    spectrum_via_transform,
    universal_params,
)

G0 = 7e-4
OMEGA_M = 0.1

models = {
    "linear (red-detuned)": ModelDescriptor("linear", delta=-OMEGA_M, drive=3.0),
    "kerr": ModelDescriptor("kerr", delta=-0.5, drive=2.0, kerr_k=0.05),
    "josephson (below threshold)": ModelDescriptor("josephson", delta=-0.01, drive=402.0, phi0=0.06),
}

for name, model in models.items():
    fp = [f for f in find_fixed_points(model) if f.stable][0]
    up = universal_params(model, fp)
    print(f"== {name} ==")
    print(f"  n = {fp.n:9.3f}  dtilde = {up.dtilde:+.4f}  r = {up.r1:+.4f} {up.r2:+.4f}i")
    s_plus = photon_number_spectrum(up, OMEGA_M)
    s_minus = photon_number_spectrum(up, -OMEGA_M)
    print(f"  S_nn(+w_m) = {s_plus:10.3f}   S_nn(-w_m) = {s_minus:10.3f}")
    g_closed = optomechanical_damping(up, G0, OMEGA_M)
    g_asym = damping_via_asymmetry(up, G0, OMEGA_M)
    print(f"  Gamma_opt closed form  = {g_closed:+.6e} gamma")
    print(f"  Gamma_opt via asymmetry  = {g_asym:+.6e} gamma")
    omega = np.linspace(-1.0, 1.0, 41)
    s_t = spectrum_via_transform(up, omega)
    s_c = [photon_number_spectrum(up, float(w)) for w in omega]
    dev = max(abs(a - b) / max(b, 1e-30) for a, b in zip(s_t, s_c) if b > 1e-12)
    print(f"  transform-vs-closed-form deviation over the grid: {dev:.2e}\n")
