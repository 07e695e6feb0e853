"""Shared oracles and helpers for the test suite.

The Bessel oracle below re-derives J_k from the ascending series in exact
rational arithmetic, independent of the package's fast evaluation path.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from optocool.core import UniversalParams, fluctuation_eigenvalues


def oracle_bessel_j(k: int, x: float, terms: int = 60) -> float:
    """Ascending-series Bessel function summed in exact rationals."""
    fx = Fraction(x)
    q = fx * fx / 4
    term = (fx / 2) ** k / Fraction(math.factorial(k))
    total = term
    for kappa in range(1, terms):
        term = -term * q / (kappa * (kappa + k))
        total += term
    return float(total)


def oracle_b_minus(x: float) -> float:
    return oracle_bessel_j(0, x) - oracle_bessel_j(2, x)


def oracle_first_j1_maximum() -> float:
    """Bisection on J0 - J2 over [1.5, 2.2] using the series oracle."""
    lo, hi = 1.5, 2.2
    flo = oracle_b_minus(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fmid = oracle_b_minus(mid)
        if flo * fmid <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


def rel_dev(a: float, b: float, floor: float = 0.0) -> float:
    scale = max(abs(a), abs(b), floor)
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


def draw_stable_params(rng: np.random.Generator, min_decay: float = 0.0,
                       min_asymmetry: float = 0.0) -> UniversalParams:
    """A random stable parameter set; optional lower bounds on the slowest
    fluctuation decay rate and on |r2 - dtilde| (keeps identity tests away
    from the removable 0/0 manifold)."""
    while True:
        dtilde = rng.uniform(-2.0, 2.0)
        r1 = rng.uniform(-1.5, 1.5)
        r2 = rng.uniform(-1.5, 1.5)
        if r1 * r1 + r2 * r2 >= dtilde * dtilde + 0.25:
            continue
        if abs(r2 - dtilde) < min_asymmetry:
            continue
        up = UniversalParams(dtilde=dtilde, r1=r1, r2=r2, gamma=1.0,
                             n=float(rng.uniform(0.5, 300.0)))
        if min_decay > 0.0:
            lam_p, _ = fluctuation_eigenvalues(up)
            if -lam_p.real < min_decay:
                continue
        return up


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
