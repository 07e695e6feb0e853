"""Driven-cavity models: classical Hamiltonians, fixed points, bifurcations.

Conventions (internal units): hbar = 1, energies in units of hbar*gamma,
frequencies in units of the cavity linewidth gamma.  The complex amplitude
is alpha = A * exp(-i*theta); all Hamiltonians below are the classical
c-number functions H(alpha, alpha*) whose fixed points solve

    d_{alpha*} H = i * gamma * alpha / 2.

Supported kinds:

* ``linear``     H = -delta |a|^2 - eps (a + a*)
* ``kerr``       H = -delta |a|^2 - (K/2) |a|^4 - eps (a + a*)
  (quartic sign chosen so the effective detuning is delta + 2 K n and the
  squeezing parameter is i K n at a fixed point)
* ``josephson``  H = -delta |a|^2 + (i E/2) (a* - a) J1(2 phi0 |a|)/|a|

The fixed-point finder reduces the Josephson system to one real equation
in the amplitude, scans a uniform bracket grid, refines near-tangent pairs
(folds) and the B- = J0 - J2 = 0 saturated family (pitchfork remnants),
then polishes every candidate with a damped 2x2 Newton iteration on the
complex fixed-point equation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from . import specfun
from .errors import DomainError, NoConvergenceError

KINDS = ("linear", "kerr", "josephson")
BRANCHES = ("mono", "plus", "minus", "unstable")
BRANCH_ORDER = {name: i for i, name in enumerate(BRANCHES)}

_RESIDUAL_TOL = 1e-10
_DEDUP_TOL = 1e-8
_MONO_PHASE_TOL = 1e-10


@dataclass(frozen=True)
class ModelDescriptor:
    """A cavity model with parameters in internal gamma-units.

    ``drive`` is the linear/Kerr drive amplitude eps, or E_J*/hbar*gamma
    for the Josephson model (the renormalized Josephson energy is taken
    as given; the bare E_J is never stored).  ``kerr_k`` is K/gamma and
    only meaningful for ``kerr``; ``phi0`` is the cavity-phase zero-point
    fluctuation and only meaningful for ``josephson``.
    """

    kind: str
    delta: float = 0.0
    drive: float = 0.0
    kerr_k: float = 0.0
    phi0: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown model kind {self.kind!r}; expected one of {KINDS}")
        for name in ("delta", "drive", "kerr_k", "phi0"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError(f"model field {name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.kind == "josephson":
            if not 0.0 < self.phi0 < 1.0:
                raise DomainError(f"josephson model needs 0 < phi0 < 1, got {self.phi0}")
            if self.drive < 0.0:
                raise DomainError("josephson drive E_J*/hbar*gamma must be >= 0")
        if self.kind != "kerr" and self.kerr_k != 0.0:
            raise DomainError("kerr_k is only meaningful for kind='kerr'")
        if self.kind != "josephson" and self.phi0 != 0.0:
            raise DomainError("phi0 is only meaningful for kind='josephson'")


@dataclass(frozen=True)
class FixedPoint:
    """One classical steady state alpha0 = a0 * exp(-i*theta0)."""

    a0: float
    theta0: float
    n: float
    branch: str
    stable: bool

    @property
    def alpha(self) -> complex:
        return self.a0 * cmath.exp(-1j * self.theta0)


@dataclass(frozen=True)
class WirtingerDerivs:
    """First and second Wirtinger derivatives of the classical Hamiltonian.

    d1      = d_{alpha*} H          (units hbar*gamma*amplitude)
    d_mixed = d^2_{alpha alpha*} H  (real for the supported models)
    d_anti  = d^2_{alpha* alpha*} H
    """

    d1: complex
    d_mixed: float
    d_anti: complex


@dataclass(frozen=True)
class SearchSpec:
    """Controls for the fixed-point scan and the bifurcation search.

    ``a_max`` is the amplitude bracket ceiling (defaults to 3/phi0 for
    Josephson models, covering 1.5x the second J1 lobe); ``brackets`` the
    number of uniform scan intervals; ``drive_cap`` the largest drive the
    bifurcation search will probe (defaults to 200x the resonant fold
    estimate).
    """

    a_max: float | None = None
    brackets: int = 400
    drive_cap: float | None = None

    def __post_init__(self):
        if self.brackets < 16:
            raise DomainError("SearchSpec.brackets must be >= 16")
        if self.a_max is not None and self.a_max <= 0:
            raise DomainError("SearchSpec.a_max must be positive")
        if self.drive_cap is not None and self.drive_cap <= 0:
            raise DomainError("SearchSpec.drive_cap must be positive")


def _bessel_arg_guard(model: ModelDescriptor, a: float) -> float:
    u = 2.0 * model.phi0 * a
    if u > specfun.SUPPORT_RADIUS:
        raise DomainError(
            f"Bessel argument 2*phi0*|alpha| = {u:g} exceeds supported range "
            f"{specfun.SUPPORT_RADIUS}"
        )
    return u


def classical_hamiltonian(model: ModelDescriptor, alpha: complex) -> float:
    """Classical Hamiltonian H/hbar (in gamma-units) at amplitude alpha."""
    alpha = complex(alpha)
    n = abs(alpha) ** 2
    if model.kind == "linear":
        return -model.delta * n - 2.0 * model.drive * alpha.real
    if model.kind == "kerr":
        return -model.delta * n - 0.5 * model.kerr_k * n * n - 2.0 * model.drive * alpha.real
    a = abs(alpha)
    u = _bessel_arg_guard(model, a)
    # i(a* - a) = 2 Im(alpha); J1(u)/|alpha| = 2 phi0 * J1(u)/u, finite at 0
    return -model.delta * n + 2.0 * model.drive * model.phi0 * alpha.imag * specfun.bessel_j_scaled(1, u)


def hamiltonian_derivatives(model: ModelDescriptor, alpha: complex) -> WirtingerDerivs:
    """Analytic Wirtinger derivatives of the classical Hamiltonian."""
    alpha = complex(alpha)
    if model.kind == "linear":
        return WirtingerDerivs(
            d1=-model.delta * alpha - model.drive,
            d_mixed=-model.delta,
            d_anti=0.0 + 0.0j,
        )
    if model.kind == "kerr":
        n = abs(alpha) ** 2
        k = model.kerr_k
        return WirtingerDerivs(
            d1=-model.delta * alpha - k * n * alpha - model.drive,
            d_mixed=-model.delta - 2.0 * k * n,
            d_anti=-k * alpha * alpha,
        )
    a = abs(alpha)
    u = _bessel_arg_guard(model, a)
    e, p = model.drive, model.phi0
    y = alpha.imag
    q1 = specfun.bessel_j_scaled(1, u)  # J1(u)/u
    q2 = specfun.bessel_j_scaled(2, u)  # J2(u)/u^2
    q3 = specfun.bessel_j_scaled(3, u)  # J3(u)/u^3
    d1 = -model.delta * alpha + 1j * e * p * q1 - 4.0 * e * p**3 * q2 * y * alpha
    d_mixed = -model.delta - 2.0 * e * p**3 * q1 * y
    d_anti = -1j * e * p**3 * (q1 * alpha + 4.0 * p * p * q3 * alpha**3)
    return WirtingerDerivs(d1=d1, d_mixed=d_mixed, d_anti=d_anti)


def fd_hamiltonian_derivatives(
    model: ModelDescriptor, alpha: complex, h: float | None = None
) -> WirtingerDerivs:
    """Central-difference Wirtinger derivatives; oracle for the analytic ones.

    Uses d_{alpha*} = (d_x + i d_y)/2, d^2_{alpha alpha*} = (d_xx + d_yy)/4
    and d^2_{alpha* alpha*} = (d_xx - d_yy + 2i d_xy)/4 on H(x + iy).
    """
    alpha = complex(alpha)
    scale = max(1.0, abs(alpha))
    if h is None:
        h = 1e-4 * scale
    if not 1e-6 * scale <= h <= 1e-3 * scale:
        raise DomainError(f"step h = {h:g} outside [1e-6, 1e-3]*max(1, |alpha|)")
    x, y = alpha.real, alpha.imag

    def f(xx, yy):
        return classical_hamiltonian(model, complex(xx, yy))

    f0 = f(x, y)
    fxp, fxm = f(x + h, y), f(x - h, y)
    fyp, fym = f(x, y + h), f(x, y - h)
    fpp, fpm = f(x + h, y + h), f(x + h, y - h)
    fmp, fmm = f(x - h, y + h), f(x - h, y - h)
    dx = (fxp - fxm) / (2 * h)
    dy = (fyp - fym) / (2 * h)
    dxx = (fxp - 2 * f0 + fxm) / (h * h)
    dyy = (fyp - 2 * f0 + fym) / (h * h)
    dxy = (fpp - fpm - fmp + fmm) / (4 * h * h)
    return WirtingerDerivs(
        d1=0.5 * (dx + 1j * dy),
        d_mixed=0.25 * (dxx + dyy),
        d_anti=0.25 * (dxx - dyy) + 0.5j * dxy,
    )


# --------------------------------------------------------------------------
# fluctuation eigenvalues (shared with semiclassical_core via the same formula)


def _local_universal(model: ModelDescriptor, alpha: complex) -> tuple[float, complex]:
    """(effective detuning, folded squeezing parameter r) at amplitude alpha."""
    d = hamiltonian_derivatives(model, alpha)
    theta = _phase_of(alpha)
    dtilde = -d.d_mixed
    r = -1j * cmath.exp(2j * theta) * d.d_anti
    return dtilde, r


def _eigen_real_part_max(dtilde: float, r: complex, gamma: float) -> float:
    gap = abs(r) ** 2 - dtilde * dtilde
    if gap <= 0.0:
        return -0.5 * gamma
    return -0.5 * gamma + math.sqrt(gap)


def _phase_of(alpha: complex) -> float:
    """theta0 in (-pi, pi] for alpha = A exp(-i theta0)."""
    if alpha == 0:
        return 0.0
    theta = -cmath.phase(alpha)
    if theta <= -math.pi:
        theta += 2.0 * math.pi
    return theta + 0.0  # normalize -0.0


# --------------------------------------------------------------------------
# Newton polish on the complex fixed-point equation


def _fp_residual(model: ModelDescriptor, alpha: complex, gamma: float) -> complex:
    return hamiltonian_derivatives(model, alpha).d1 - 0.5j * gamma * alpha


def _fp_residual_guarded(model: ModelDescriptor, alpha: complex, gamma: float) -> complex | None:
    """Residual, or None when alpha left the supported Bessel range."""
    try:
        return _fp_residual(model, alpha, gamma)
    except DomainError:
        return None


def _newton_polish(
    model: ModelDescriptor, alpha: complex, gamma: float, max_iter: int = 60
) -> tuple[complex, float]:
    """Damped Newton on v(alpha) = d1 - i*gamma*alpha/2 = 0."""
    v = _fp_residual(model, alpha, gamma)
    for _ in range(max_iter):
        if abs(v) <= 1e-14 * max(1.0, abs(alpha)):
            break
        d = hamiltonian_derivatives(model, alpha)
        a = d.d_mixed - 0.5j * gamma  # dv/dalpha
        b = d.d_anti  # dv/dalpha*
        # solve a*da + b*conj(da) = -v as a real 2x2 system
        m11, m12 = a.real + b.real, -a.imag + b.imag
        m21, m22 = a.imag + b.imag, a.real - b.real
        det = m11 * m22 - m12 * m21
        if det == 0.0 or not math.isfinite(det):
            break
        p = (-v.real * m22 + v.imag * m12) / det
        q = (-m11 * v.imag + m21 * v.real) / det
        step = complex(p, q)
        trial = alpha + step
        v_trial = _fp_residual_guarded(model, trial, gamma)
        # halve the step while it leaves the domain or grows the residual
        damp = 0
        while (v_trial is None or abs(v_trial) > abs(v)) and damp < 40:
            step *= 0.5
            trial = alpha + step
            v_trial = _fp_residual_guarded(model, trial, gamma)
            damp += 1
        if v_trial is None or abs(v_trial) >= abs(v):
            break
        alpha, v = trial, v_trial
    return alpha, abs(v)


# --------------------------------------------------------------------------
# scalar root helpers


def _bisect(f, lo: float, hi: float, flo: float, fhi: float, iters: int = 90) -> float:
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
        if hi - lo <= 1e-13 * max(1.0, abs(hi)):
            break
    return 0.5 * (lo + hi)


def _golden_extremum(f, lo: float, hi: float, maximize: bool, iters: int = 80):
    """Golden-section search; returns (x, f(x)) of the interior extremum."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    sign = -1.0 if maximize else 1.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = sign * f(c), sign * f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = sign * f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = sign * f(d)
        if b - a <= 1e-12 * max(1.0, abs(b)):
            break
    x = 0.5 * (a + b)
    return x, f(x)


def _scan_roots(f, grid: np.ndarray, vals: np.ndarray) -> list[float]:
    """Roots of f on a sampled grid: sign changes, exact zeros, and
    near-tangent pairs recovered by refining interior extrema."""
    roots: list[float] = []
    brackets: list[tuple[float, float, float, float]] = []
    n = len(grid)
    for i in range(n - 1):
        lo, hi = float(grid[i]), float(grid[i + 1])
        flo, fhi = float(vals[i]), float(vals[i + 1])
        if flo == 0.0:
            roots.append(lo)
        elif flo * fhi < 0.0:
            brackets.append((lo, hi, flo, fhi))
    if float(vals[-1]) == 0.0:
        roots.append(float(grid[-1]))
    # tangency rescue: a dip that stays positive (or a bump that stays
    # negative) between sampled points can hide a close root pair
    for i in range(1, n - 1):
        v_prev, v, v_next = float(vals[i - 1]), float(vals[i]), float(vals[i + 1])
        if v == 0.0:
            continue
        if v > 0.0 and v <= v_prev and v <= v_next:
            x_ext, f_ext = _golden_extremum(f, float(grid[i - 1]), float(grid[i + 1]), maximize=False)
            if f_ext < 0.0:
                brackets.append((float(grid[i - 1]), x_ext, v_prev, f_ext))
                brackets.append((x_ext, float(grid[i + 1]), f_ext, v_next))
        elif v < 0.0 and v >= v_prev and v >= v_next:
            x_ext, f_ext = _golden_extremum(f, float(grid[i - 1]), float(grid[i + 1]), maximize=True)
            if f_ext > 0.0:
                brackets.append((float(grid[i - 1]), x_ext, v_prev, f_ext))
                brackets.append((x_ext, float(grid[i + 1]), f_ext, v_next))
    for lo, hi, flo, fhi in brackets:
        roots.append(_bisect(f, lo, hi, flo, fhi))
    return roots


# --------------------------------------------------------------------------
# per-model candidate generation (complex starting amplitudes)


def _candidates_linear(model: ModelDescriptor, gamma: float) -> list[complex]:
    if model.drive == 0.0:
        return [0j]
    return [-model.drive / (model.delta + 0.5j * gamma)]


def _candidates_kerr(model: ModelDescriptor, gamma: float) -> list[complex]:
    k = model.kerr_k
    if k == 0.0:
        return _candidates_linear(model, gamma)
    eps = model.drive
    if eps == 0.0:
        return [0j]
    # n ((delta + K n)^2 + gamma^2/4) = eps^2, then alpha from the linear form
    coeffs = [k * k, 2.0 * model.delta * k, model.delta**2 + 0.25 * gamma * gamma, -eps * eps]
    out = []
    for root in np.roots(coeffs):
        if abs(root.imag) > 1e-9 * max(1.0, abs(root)):
            continue
        n = float(root.real)
        if n < -1e-12:
            continue
        n = max(n, 0.0)
        out.append(-eps / (model.delta + k * n + 0.5j * gamma))
    return out


def _candidates_josephson(
    model: ModelDescriptor, gamma: float, search: SearchSpec
) -> tuple[list[complex], list[complex]]:
    """(required starts, optional seed starts) for the Josephson solver."""
    e, p, delta = model.drive, model.phi0, model.delta
    if e == 0.0:
        return [0j], []
    a_max = search.a_max if search.a_max is not None else 3.0 / p
    x_star = specfun.first_j1_maximum()
    if a_max < 1.2 * x_star / (2.0 * p):
        raise DomainError(
            f"a_max = {a_max:g} too small; need >= 1.2 * {x_star / (2.0 * p):g} "
            "to cover the saturated branch"
        )
    _bessel_arg_guard(model, a_max)
    c_drv = 0.5 * e * p  # C = E phi0 / 2

    def b_plus(x):
        return specfun.bessel_j(0, x) + specfun.bessel_j(2, x)

    def b_minus(x):
        return specfun.bessel_j(0, x) - specfun.bessel_j(2, x)

    n_grid = search.brackets
    a_grid = np.linspace(a_max / n_grid, a_max, n_grid)
    x_grid = 2.0 * p * a_grid
    j0 = specfun.bessel_j(0, x_grid)
    j2 = specfun.bessel_j(2, x_grid)
    bp, bm = j0 + j2, j0 - j2
    extrema = specfun.j1_extrema(2.0 * p * a_max)

    candidates: list[tuple[float, float]] = []  # (A, theta) starts from scan roots
    seeds: list[tuple[float, float]] = []  # opportunistic extra starts
    if delta == 0.0:
        # theta = 0 (or pi) family: gamma A = +/- 2C B+(x)
        for sgn, theta in ((1.0, 0.0), (-1.0, math.pi)):

            def f(a, s=sgn):
                return gamma * a - s * 2.0 * c_drv * b_plus(2.0 * p * a)

            vals = gamma * a_grid - sgn * 2.0 * c_drv * bp
            for a_root in _scan_roots(f, a_grid, vals):
                candidates.append((a_root, theta))
        # saturated family: B-(x) = 0, phase from cos(theta) = gamma A/(2C B+)
        for x_e in extrema:
            a_e = x_e / (2.0 * p)
            if a_e > a_max:
                continue
            cos_t = gamma * a_e / (2.0 * c_drv * b_plus(x_e))
            if abs(cos_t) <= 1.0 + 1e-12:
                theta_e = math.acos(min(1.0, max(-1.0, cos_t)))
                candidates.append((a_e, theta_e))
                candidates.append((a_e, -theta_e))
    else:

        def g(a):
            x = 2.0 * p * a
            bpv = b_plus(x)
            bmv = b_minus(x)
            return (
                (gamma * a * bmv) ** 2
                + (2.0 * delta * a * bpv) ** 2
                - (2.0 * c_drv * bpv * bmv) ** 2
            )

        g_vals = (gamma * a_grid * bm) ** 2 + (2.0 * delta * a_grid * bp) ** 2 - (
            2.0 * c_drv * bp * bm
        ) ** 2
        a_roots = _scan_roots(g, a_grid, g_vals)
        # the saturated family collapses into a window of width ~|delta|
        # around each B- zero; refine there so narrow windows are not missed
        width = a_max / n_grid
        for x_e in extrema:
            a_e = x_e / (2.0 * p)
            lo = max(a_max / n_grid, a_e - width)
            hi = min(a_max, a_e + width)
            if lo >= hi:
                continue
            sub = np.linspace(lo, hi, 512)
            x_sub = 2.0 * p * sub
            bp_s = specfun.bessel_j(0, x_sub) + specfun.bessel_j(2, x_sub)
            bm_s = specfun.bessel_j(0, x_sub) - specfun.bessel_j(2, x_sub)
            sub_vals = (
                (gamma * sub * bm_s) ** 2
                + (2.0 * delta * sub * bp_s) ** 2
                - (2.0 * c_drv * bp_s * bm_s) ** 2
            )
            a_roots.extend(_scan_roots(g, sub, sub_vals))
        for a_root in a_roots:
            x = 2.0 * p * a_root
            bpv, bmv = b_plus(x), b_minus(x)
            if bpv == 0.0 or bmv == 0.0:
                continue
            cos_t = gamma * a_root / (2.0 * c_drv * bpv)
            sin_t = -delta * a_root / (c_drv * bmv)
            if abs(cos_t) > 10.0 or abs(sin_t) > 10.0:
                continue
            candidates.append((a_root, math.atan2(sin_t, cos_t)))
        # seeds from the delta = 0 pitchfork cover |delta| windows narrower
        # than the subgrid resolution; only meaningful very close to resonance
        if abs(delta) <= 0.02 * gamma:
            for x_e in extrema:
                a_e = x_e / (2.0 * p)
                if a_e > a_max:
                    continue
                cos_t = gamma * a_e / (2.0 * c_drv * b_plus(x_e))
                if abs(cos_t) <= 1.0:
                    theta_e = math.acos(cos_t)
                    seeds.append((a_e, theta_e))
                    seeds.append((a_e, -theta_e))
    return (
        [a * cmath.exp(-1j * t) for a, t in candidates],
        [a * cmath.exp(-1j * t) for a, t in seeds],
    )


# --------------------------------------------------------------------------
# public solver


def find_fixed_points(
    model: ModelDescriptor, gamma: float = 1.0, search: SearchSpec | None = None
) -> list[FixedPoint]:
    """All classical fixed points of the model, stability-classified.

    Returns one to three entries for the Josephson model (below/above the
    bifurcation threshold), sorted by descending photon number.  Branch
    labels: the unique stable solution is ``mono``; with two stable
    solutions the positive-phase one is ``plus`` and the negative-phase one
    ``minus``; dynamically unstable solutions are labeled ``unstable``.

    Raises NoConvergenceError if any started root fails to polish to the
    1e-10 residual target.
    """
    if not gamma > 0.0:
        raise DomainError("gamma must be positive")
    search = search or SearchSpec()
    optional: list[complex] = []
    if model.kind == "josephson":
        starts, optional = _candidates_josephson(model, gamma, search)
    elif model.kind == "kerr":
        starts = _candidates_kerr(model, gamma)
    else:
        starts = _candidates_linear(model, gamma)

    polished: list[complex] = []
    for alpha0 in starts:
        alpha, res = _newton_polish(model, alpha0, gamma)
        if res > _RESIDUAL_TOL:
            raise NoConvergenceError(
                f"fixed-point polish stalled at residual {res:.3e} "
                f"(start alpha = {alpha0:.6g})"
            )
        polished.append(alpha)
    for alpha0 in optional:
        alpha, res = _newton_polish(model, alpha0, gamma)
        if res <= _RESIDUAL_TOL:
            polished.append(alpha)

    # deduplicate in (A, theta) to 1e-8
    polished.sort(key=lambda z: (abs(z), _phase_of(z)))
    unique: list[complex] = []
    for z in polished:
        a, t = abs(z), _phase_of(z)
        dup = False
        for w in unique:
            aw, tw = abs(w), _phase_of(w)
            dt = abs(t - tw)
            dt = min(dt, 2.0 * math.pi - dt)
            if abs(a - aw) <= _DEDUP_TOL and dt <= _DEDUP_TOL:
                dup = True
                break
        if not dup:
            unique.append(z)
    if not unique:
        raise NoConvergenceError("no fixed points found in the search bracket")

    infos = []
    for z in unique:
        dtilde, r = _local_universal(model, z)
        stable = _eigen_real_part_max(dtilde, r, gamma) < 0.0
        infos.append((z, stable))
    n_stable = sum(1 for _, s in infos if s)

    points = []
    for z, stable in infos:
        a, theta = abs(z), _phase_of(z)
        if not stable:
            branch = "unstable"
        elif abs(theta) < _MONO_PHASE_TOL or n_stable <= 1:
            branch = "mono"
        elif theta > 0.0:
            branch = "plus"
        else:
            branch = "minus"
        points.append(FixedPoint(a0=a, theta0=theta, n=a * a, branch=branch, stable=stable))
    points.sort(key=lambda fp: (-fp.n, -fp.theta0))
    return points


def resonant_fold_estimate(phi0: float, gamma: float = 1.0) -> float:
    """Analytic fold drive at zero detuning: gamma x*^2 / (4 phi0^2 J1(x*)).

    x* is the first maximum of J1; at delta = 0 the saturated branch exists
    exactly when cos(theta0) = gamma*A0/(2C B+(x*)) <= 1, which folds at
    this drive.
    """
    x_star = specfun.first_j1_maximum()
    return gamma * x_star * x_star / (4.0 * phi0 * phi0 * specfun.bessel_j(1, x_star))


def bifurcation_threshold(
    model_family: ModelDescriptor,
    gamma: float = 1.0,
    search: SearchSpec | None = None,
    bracket_hint: float | None = None,
) -> float:
    """Smallest drive at which the model has >= 2 stable fixed points.

    Bisection on the stable-solution count to relative width 1e-6; the
    ``drive`` field of ``model_family`` is ignored.  ``bracket_hint`` warms
    up the bracket search (useful when continuing a threshold along a
    detuning sweep).  Raises NoConvergenceError ("no bifurcation in
    range") if the count never exceeds one below the drive cap.
    """
    if model_family.kind != "josephson":
        raise DomainError("bifurcation threshold is implemented for josephson models")
    search = search or SearchSpec()

    def n_stable(drive: float) -> int:
        fps = find_fixed_points(replace(model_family, drive=drive), gamma, search)
        return sum(1 for fp in fps if fp.stable)

    scale = resonant_fold_estimate(model_family.phi0, gamma)
    cap = search.drive_cap if search.drive_cap is not None else 200.0 * scale

    lo = 0.8 * bracket_hint if bracket_hint else 0.25 * scale
    while lo > 1e-9 * scale and n_stable(lo) >= 2:
        lo *= 0.5
    if n_stable(lo) >= 2:
        raise NoConvergenceError("bistable down to vanishing drive; no threshold")
    hi = lo
    while True:
        hi *= 1.35
        if hi > cap:
            raise NoConvergenceError("no bifurcation in range (drive cap reached)")
        if n_stable(hi) >= 2:
            break
        lo = hi
    while hi - lo > 1e-6 * hi:
        mid = 0.5 * (lo + hi)
        if n_stable(mid) >= 2:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
