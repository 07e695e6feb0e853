"""Self-contained Bessel functions of the first kind, orders 0..6.

Everything here is evaluated from the ascending power series

    J_k(x) = sum_kappa (-1)^kappa / (kappa! (kappa+k)!) (x/2)^(2 kappa + k),

summed with compensated (Kahan) accumulation and capped at 60 terms.
The supported range is |x| <= 30.  For |x| <= 8 the double-precision
series is accurate to ~1e-13 relative; beyond that the alternating terms
grow large enough that doubles lose digits, so the sum is carried out in
exact rational arithmetic and rounded once at the end.  The cavity models
in this package only ever need x = 2*phi0*A <~ 6, which stays on the fast
path.

No scipy/cython dependency: the module is pure Python + numpy and all
functions are stateless and reentrant.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import DomainError

MAX_ORDER = 6
SUPPORT_RADIUS = 30.0

_FAST_CUTOFF = 8.0
_MAX_TERMS = 60
_TERM_STOP = 1e-17


def _series_scalar(k: int, x: float, scaled: bool) -> float:
    """Double-precision series for J_k(x) (or J_k(x)/x^k if scaled)."""
    q = 0.25 * x * x
    if scaled:
        term = 1.0 / (2.0**k * math.factorial(k))
    else:
        term = (0.5 * x) ** k / math.factorial(k)
    total = term
    comp = 0.0
    for kappa in range(1, _MAX_TERMS):
        term = -term * q / (kappa * (kappa + k))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) <= _TERM_STOP * abs(total):
            break
    return total


def _series_exact(k: int, x: float, scaled: bool) -> float:
    """Extended-accuracy series: exact rationals, rounded once at the end."""
    fx = Fraction(x)
    q = fx * fx / 4
    if scaled:
        term = Fraction(1, 2**k * math.factorial(k))
    else:
        term = (fx / 2) ** k / Fraction(math.factorial(k))
    total = term
    for kappa in range(1, _MAX_TERMS):
        term = -term * q / (kappa * (kappa + k))
        total += term
    return float(total)


def _series_vector(k: int, x: np.ndarray, scaled: bool) -> np.ndarray:
    q = 0.25 * x * x
    if scaled:
        term = np.full_like(x, 1.0 / (2.0**k * math.factorial(k)))
    else:
        term = (0.5 * x) ** k / math.factorial(k)
    total = term.copy()
    comp = np.zeros_like(total)
    for kappa in range(1, _MAX_TERMS):
        term = term * (-q) / (kappa * (kappa + k))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if np.all(np.abs(term) <= _TERM_STOP * np.abs(total)):
            break
    return total


def _check_order(k: int) -> int:
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise DomainError(f"Bessel order must be an integer, got {k!r}")
    if not 0 <= k <= MAX_ORDER:
        raise DomainError(f"Bessel order {k} outside supported range 0..{MAX_ORDER}")
    return int(k)


def _evaluate(k: int, x, scaled: bool):
    k = _check_order(k)
    if np.isscalar(x) and not isinstance(x, (str, bytes)):
        xf = float(x)
        if not math.isfinite(xf) or abs(xf) > SUPPORT_RADIUS:
            raise DomainError(f"Bessel argument {xf!r} outside |x| <= {SUPPORT_RADIUS}")
        if abs(xf) <= _FAST_CUTOFF:
            return _series_scalar(k, xf, scaled)
        return _series_exact(k, xf, scaled)
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(np.abs(arr) > SUPPORT_RADIUS):
        raise DomainError(f"Bessel argument outside |x| <= {SUPPORT_RADIUS}")
    if arr.size == 0 or np.max(np.abs(arr)) <= _FAST_CUTOFF:
        return _series_vector(k, arr, scaled)
    out = np.empty_like(arr)
    flat = arr.ravel()
    res = out.ravel()
    fast = np.abs(flat) <= _FAST_CUTOFF
    if np.any(fast):
        res[fast] = _series_vector(k, flat[fast], scaled)
    for i in np.nonzero(~fast)[0]:
        res[i] = _series_exact(k, float(flat[i]), scaled)
    return out


def bessel_j(k: int, x):
    """J_k(x) for k in 0..6, |x| <= 30.  Accepts scalars or arrays.

    Satisfies the parity relation J_k(-x) = (-1)^k J_k(x) exactly
    (the series only sees x through x**2 and (x/2)**k).
    """
    return _evaluate(k, x, scaled=False)


def bessel_j_scaled(k: int, x):
    """J_k(x)/x^k, finite at x = 0 where it equals 1/(2^k k!).

    Used for the removable singularities of the driven-cavity Hamiltonian
    and its derivatives at zero amplitude.
    """
    return _evaluate(k, x, scaled=True)


def bessel_identity_residuals(x: float) -> tuple[float, float]:
    """Residuals of the three-term recurrences at x != 0.

    Returns (|J0 + J2 - 2 J1/x|, |J1 + J3 - 4 J2/x|).  Both vanish
    identically for the true functions, so the returned values measure
    series truncation/rounding only (<= 1e-10 over the full range).
    """
    xf = float(x)
    if xf == 0.0:
        raise DomainError("recurrence residuals undefined at x = 0")
    j0 = bessel_j(0, xf)
    j1 = bessel_j(1, xf)
    j2 = bessel_j(2, xf)
    j3 = bessel_j(3, xf)
    res_a = abs(j0 + j2 - 2.0 * j1 / xf)
    res_b = abs(j1 + j3 - 4.0 * j2 / xf)
    return res_a, res_b


def rwa_series_check(phi0: float, nbar: float, n_terms: int) -> float:
    """Deviation between the truncated drive series and its closed Bessel form.

    The nonlinear drive expands as sum_k c_k * nbar^k with
    c_k = (-1)^k phi0^(2k+1) / (k! (k+1)!); the full sum equals
    J1(2 phi0 sqrt(nbar)) / sqrt(nbar).  Returns the absolute deviation of
    the partial sum through k = n_terms from the closed form; it decreases
    monotonically in n_terms down to the accumulator floor.
    """
    if not phi0 > 0.0:
        raise DomainError("phi0 must be positive")
    if nbar < 0.0:
        raise DomainError("nbar must be nonnegative")
    if not isinstance(n_terms, (int, np.integer)) or n_terms < 1:
        raise DomainError("n_terms must be an integer >= 1")
    u = 2.0 * phi0 * math.sqrt(nbar)
    if u > SUPPORT_RADIUS:
        raise DomainError(f"2*phi0*sqrt(nbar) = {u:g} outside supported range")
    terms = []
    term = phi0
    for k in range(n_terms + 1):
        if k > 0:
            term *= -(phi0 * phi0) * nbar / (k * (k + 1))
        terms.append(term)
    partial = math.fsum(terms)
    closed = 2.0 * phi0 * bessel_j_scaled(1, u)
    return abs(partial - closed)


def j1_extrema(x_max: float) -> list[float]:
    """Positive roots of J0(x) - J2(x) = 2 J1'(x) in (0, x_max].

    These are the extrema of J1; the first one (x ~ 1.8412) fixes the
    saturated amplitude of the resonantly driven Josephson cavity.
    Located by sign-scan plus bisection to ~1e-14.
    """
    if not 0.0 < x_max <= SUPPORT_RADIUS:
        raise DomainError(f"x_max must lie in (0, {SUPPORT_RADIUS}]")

    def b_minus(x):
        return bessel_j(0, x) - bessel_j(2, x)

    n_grid = max(64, int(32 * x_max))
    grid = np.linspace(1e-9, x_max, n_grid)
    vals = bessel_j(0, grid) - bessel_j(2, grid)
    roots = []
    for i in range(n_grid - 1):
        lo, hi = float(grid[i]), float(grid[i + 1])
        flo, fhi = float(vals[i]), float(vals[i + 1])
        if flo == 0.0:
            roots.append(lo)
            continue
        if flo * fhi < 0.0:
            for _ in range(100):
                mid = 0.5 * (lo + hi)
                fmid = b_minus(mid)
                if flo * fmid <= 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fmid
                if hi - lo < 1e-14 * max(1.0, hi):
                    break
            roots.append(0.5 * (lo + hi))
    return roots


_FIRST_J1_MAX: float | None = None


def first_j1_maximum() -> float:
    """Location of the first positive maximum of J1 (x ~ 1.8412), cached."""
    global _FIRST_J1_MAX
    if _FIRST_J1_MAX is None:
        _FIRST_J1_MAX = j1_extrema(2.5)[0]
    return _FIRST_J1_MAX
