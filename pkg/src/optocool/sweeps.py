"""Parameter sweeps, detuning optimization and the cooling design pipeline.

Sweeps evaluate fixed points and the cooling quantities over one- or
two-axis grids with deterministic row order (grid-major, branch label
secondary), so repeated runs serialize byte-identically at any worker
count.  The design pipeline follows the three-step strategy: weak
nonlinearity (small phi0), drive just below the bifurcation threshold,
detuning tuned to maximize the damping rate at the mechanical frequency.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import units
from .core import (
    MechanicalMode,
    UniversalParams,
    exceptional_point_gap,
    fluctuation_eigenvalues,
    min_phonons,
    optomechanical_damping,
    residual_phonons,
    universal_params,
    zero_heating_diagnostics,
    ZeroHeatingDiagnostics,
)
from .errors import DomainError, NoConvergenceError, NotCoolingError
from .models import (
    BRANCH_ORDER,
    FixedPoint,
    ModelDescriptor,
    SearchSpec,
    bifurcation_threshold,
    find_fixed_points,
)
from .tableio import Table

AXIS_NAMES = ("delta", "ej", "phi0", "omega_m")
BRANCH_POLICIES = ("all", "stable_only", "plus_only")

# quantities whose evaluation needs a MechanicalMode
_MECH_QUANTITIES = {"gamma_opt", "nbar_r", "nbar_min"}

QUANTITIES = (
    "a0",
    "theta0",
    "n",
    "r1",
    "r2",
    "dtilde",
    "omega_opt",
    "lambda_plus_re",
    "lambda_plus_im",
    "lambda_minus_re",
    "lambda_minus_im",
    "ep_gap",
    "gamma_opt",
    "nbar_r",
    "nbar_min",
)


@dataclass(frozen=True)
class SweepAxis:
    """One sweep axis: which parameter to vary and how."""

    name: str
    lo: float
    hi: float
    count: int
    scale: str = "linear"

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise DomainError(f"unknown sweep axis {self.name!r}; expected {AXIS_NAMES}")
        if self.count < 2:
            raise DomainError("sweep axes need count >= 2")
        if self.scale not in ("linear", "log"):
            raise DomainError(f"axis scale must be linear or log, got {self.scale!r}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError("axis range must be finite")
        if self.scale == "log" and (self.lo <= 0 or self.hi <= 0):
            raise DomainError("log axes need positive endpoints")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        return np.linspace(self.lo, self.hi, self.count)


@dataclass(frozen=True)
class SweepGrid:
    """Up to two axes over a model template; zero axes = a single point."""

    model: ModelDescriptor
    axes: tuple[SweepAxis, ...] = ()
    gamma: float = 1.0
    branch_policy: str = "stable_only"

    def __post_init__(self):
        if len(self.axes) > 2:
            raise DomainError("at most 2 axes per sweep")
        if self.branch_policy not in BRANCH_POLICIES:
            raise DomainError(
                f"unknown branch policy {self.branch_policy!r}; expected {BRANCH_POLICIES}"
            )
        if not self.gamma > 0.0:
            raise DomainError("gamma must be positive")

    def points(self) -> list[tuple[float, ...]]:
        if not self.axes:
            return [()]
        grids = [axis.values() for axis in self.axes]
        if len(grids) == 1:
            return [(float(v),) for v in grids[0]]
        return [(float(u), float(v)) for u in grids[0] for v in grids[1]]


def branch_allowed(fp: FixedPoint, policy: str) -> bool:
    if policy == "all":
        return True
    if policy == "stable_only":
        return fp.stable
    return fp.stable and fp.branch in ("mono", "plus")


_AXIS_FIELD = {"delta": "delta", "ej": "drive", "phi0": "phi0"}


def _apply_point(
    model: ModelDescriptor, mech: MechanicalMode | None, axes, point
) -> tuple[ModelDescriptor, MechanicalMode | None]:
    for axis, value in zip(axes, point):
        if axis.name == "omega_m":
            if mech is None:
                raise DomainError("omega_m axis requires a mechanical mode")
            mech = replace(mech, omega_m=value)
        else:
            model = replace(model, **{_AXIS_FIELD[axis.name]: value})
    return model, mech


def _evaluate_quantities(
    outputs: tuple[str, ...],
    model: ModelDescriptor,
    fp: FixedPoint,
    gamma: float,
    mech: MechanicalMode | None,
) -> list[float]:
    up = universal_params(model, fp, gamma)
    lam_p, lam_m = fluctuation_eigenvalues(up)
    values = []
    for name in outputs:
        if name == "a0":
            values.append(fp.a0)
        elif name == "theta0":
            values.append(fp.theta0)
        elif name == "n":
            values.append(fp.n)
        elif name == "r1":
            values.append(up.r1)
        elif name == "r2":
            values.append(up.r2)
        elif name == "dtilde":
            values.append(up.dtilde)
        elif name == "omega_opt":
            values.append(up.r2 - up.dtilde)
        elif name == "lambda_plus_re":
            values.append(lam_p.real)
        elif name == "lambda_plus_im":
            values.append(lam_p.imag)
        elif name == "lambda_minus_re":
            values.append(lam_m.real)
        elif name == "lambda_minus_im":
            values.append(lam_m.imag)
        elif name == "ep_gap":
            values.append(exceptional_point_gap(up))
        elif name == "gamma_opt":
            values.append(optomechanical_damping(up, mech.g0, mech.omega_m))
        elif name == "nbar_r":
            try:
                values.append(residual_phonons(up, mech.omega_m))
            except NotCoolingError:
                values.append(math.nan)
        elif name == "nbar_min":
            try:
                nbar_r = residual_phonons(up, mech.omega_m)
            except NotCoolingError:
                values.append(math.nan)
                continue
            gopt = optomechanical_damping(up, mech.g0, mech.omega_m)
            values.append(min_phonons(gopt, mech.gamma_m, nbar_r, mech.nbar_T))
        else:  # pragma: no cover - guarded by validation
            raise DomainError(f"unknown quantity {name!r}")
    return values


def run_sweep(
    grid: SweepGrid,
    outputs,
    mech: MechanicalMode | None = None,
    search: SearchSpec | None = None,
    workers: int = 1,
) -> Table:
    """Evaluate the requested quantities over the grid.

    One row per (grid point x fixed point allowed by the branch policy);
    non-convergent points keep their row with a status marker and NaN
    values.  Rows are keyed by grid index and branch label, so the output
    is identical at any worker count.
    """
    outputs = tuple(outputs)
    for name in outputs:
        if name not in QUANTITIES:
            raise DomainError(f"unknown quantity {name!r}; expected one of {QUANTITIES}")
        if name in _MECH_QUANTITIES and mech is None:
            raise DomainError(f"quantity {name!r} requires a mechanical mode")
    if workers < 1:
        raise DomainError("workers must be >= 1")
    points = grid.points()
    axis_cols = [f"{axis.name}" for axis in grid.axes]
    columns = axis_cols + ["branch", *outputs, "status"]

    def solve_point(idx_point):
        idx, point = idx_point
        model, mech_pt = _apply_point(grid.model, mech, grid.axes, point)
        rows = []
        try:
            fps = find_fixed_points(model, grid.gamma, search)
        except (NoConvergenceError, DomainError) as exc:
            status = "no_convergence" if isinstance(exc, NoConvergenceError) else "domain_error"
            rows.append((idx, 9, 0.0, list(point) + ["-"] + [math.nan] * len(outputs) + [status]))
            return rows
        for fp in fps:
            if not branch_allowed(fp, grid.branch_policy):
                continue
            values = _evaluate_quantities(outputs, model, fp, grid.gamma, mech_pt)
            rows.append(
                (idx, BRANCH_ORDER[fp.branch], -fp.n, list(point) + [fp.branch] + values + ["ok"])
            )
        return rows

    indexed = list(enumerate(points))
    if workers == 1:
        collected = [solve_point(ip) for ip in indexed]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            collected = list(pool.map(solve_point, indexed))
    keyed = [entry for group in collected for entry in group]
    keyed.sort(key=lambda e: (e[0], e[1], e[2]))
    table = Table(columns=columns)
    for _, _, _, row in keyed:
        table.append(row)
    return table


@dataclass(frozen=True)
class DetuningOptimum:
    """Result of the 1-D detuning scan-plus-refine optimizer."""

    delta_star: float
    gamma_opt_star: float


def _best_damping_at(
    model: ModelDescriptor,
    mech: MechanicalMode,
    gamma: float,
    policy: str,
    search: SearchSpec | None,
) -> float:
    try:
        fps = find_fixed_points(model, gamma, search)
    except (NoConvergenceError, DomainError):
        return -math.inf
    best = -math.inf
    for fp in fps:
        if not branch_allowed(fp, policy):
            continue
        up = universal_params(model, fp, gamma)
        best = max(best, optomechanical_damping(up, mech.g0, mech.omega_m))
    return best


def optimize_detuning(
    model_family: ModelDescriptor,
    mech: MechanicalMode,
    delta_range: tuple[float, float],
    branch_policy: str = "stable_only",
    gamma: float = 1.0,
    scan_points: int = 401,
    search: SearchSpec | None = None,
) -> DetuningOptimum:
    """Detuning that maximizes Gamma_opt(omega_m) over a finite range.

    Dense scan (401 points by default) followed by golden-section
    refinement of the best bracket to |d delta| <= 1e-6 * gamma.  Raises
    NotCoolingError when Gamma_opt <= 0 across the whole range.
    """
    lo, hi = float(delta_range[0]), float(delta_range[1])
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError("delta_range must be a finite (lo, hi) interval")
    if branch_policy not in BRANCH_POLICIES:
        raise DomainError(f"unknown branch policy {branch_policy!r}")

    def objective(delta: float) -> float:
        return _best_damping_at(
            replace(model_family, delta=delta), mech, gamma, branch_policy, search
        )

    grid = np.linspace(lo, hi, scan_points)
    values = [objective(float(d)) for d in grid]
    best_idx = int(np.argmax(values))
    if not math.isfinite(values[best_idx]) or values[best_idx] <= 0.0:
        raise NotCoolingError("no cooling in range: Gamma_opt <= 0 over the whole scan")
    a = float(grid[max(best_idx - 1, 0)])
    b = float(grid[min(best_idx + 1, scan_points - 1)])
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = objective(c), objective(d)
    while b - a > 1e-6 * gamma:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = objective(d)
    delta_star = 0.5 * (a + b)
    return DetuningOptimum(delta_star=delta_star, gamma_opt_star=objective(delta_star))


@dataclass(frozen=True)
class DesignInputs:
    """SI inputs for the cooling design pipeline (ordinary frequencies in Hz).

    Exactly one of ``ej_uev`` / ``ej_over_hgamma`` may pin the drive; when
    neither is given the drive is placed at ``margin`` times the resonant
    bifurcation threshold.  When ``delta_hz`` is None the detuning is
    optimized over ``delta_scan`` (gamma-units).
    """

    gamma_hz: float
    omega_m_hz: float
    gamma_m_hz: float
    g0_hz: float
    phi0: float
    nbar_T: float
    delta_hz: float | None = None
    ej_uev: float | None = None
    ej_over_hgamma: float | None = None
    margin: float = 0.98
    delta_scan: tuple[float, float] = (-0.5, -1e-4)
    ej_convention: str = "h_gamma"

    def __post_init__(self):
        for name in ("gamma_hz", "omega_m_hz", "gamma_m_hz", "g0_hz"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"{name} must be positive")
        if not 0.0 < self.margin < 1.0:
            raise DomainError("margin must lie in (0, 1)")
        if self.ej_uev is not None and self.ej_over_hgamma is not None:
            raise DomainError("give at most one of ej_uev / ej_over_hgamma")
        if self.ej_convention not in units.EJ_CONVENTIONS:
            raise DomainError(f"unknown energy convention {self.ej_convention!r}")

    def mechanical_mode(self) -> MechanicalMode:
        return MechanicalMode(
            omega_m=units.freq_to_internal(self.omega_m_hz, self.gamma_hz),
            gamma_m=units.freq_to_internal(self.gamma_m_hz, self.gamma_hz),
            nbar_T=self.nbar_T,
            g0=units.freq_to_internal(self.g0_hz, self.gamma_hz),
        )


@dataclass(frozen=True)
class CoolingReport:
    """Everything the design pipeline decided and computed.

    ``nbar_min`` always satisfies the steady-state balance
    (gamma_opt*nbar_r + gamma_m*nbar_T)/(gamma_opt + gamma_m) with the
    stored fields; ``nbar_r``/``nbar_min`` are NaN outside the cooling
    regime.  Rates are internal (gamma-units); *_hz properties convert
    back to ordinary Hz.
    """

    delta: float
    ej: float
    phi0: float
    branch: str
    fixed_point: FixedPoint
    params: UniversalParams
    mech: MechanicalMode
    gamma_hz: float
    gamma_opt: float
    nbar_r: float
    nbar_min: float
    ep_gap: float
    zero_heating: ZeroHeatingDiagnostics
    ej_bif_resonant: float

    @property
    def cooling(self) -> bool:
        return self.gamma_opt > 0.0

    @property
    def gamma_opt_hz(self) -> float:
        return units.internal_to_freq_hz(self.gamma_opt, self.gamma_hz)

    @property
    def ej_ratio(self) -> float:
        return self.ej / self.ej_bif_resonant


def design_cooling(
    inputs: DesignInputs,
    branch_policy: str = "plus_only",
    search: SearchSpec | None = None,
) -> CoolingReport:
    """Run the three-step cooling design and report the operating point.

    Drive placement uses the resonant (delta = 0) threshold as reference;
    with ``delta_hz`` given the detuning optimization is skipped.  The
    operating branch prefers the positive-phase solution, falling back to
    the monostable one below threshold.
    """
    mech = inputs.mechanical_mode()
    template = ModelDescriptor(kind="josephson", delta=0.0, drive=0.0, phi0=inputs.phi0)
    ej_bif0 = bifurcation_threshold(template, 1.0, search)
    if inputs.ej_over_hgamma is not None:
        drive = float(inputs.ej_over_hgamma)
    elif inputs.ej_uev is not None:
        drive = units.uev_to_internal(inputs.ej_uev, inputs.gamma_hz, inputs.ej_convention)
    else:
        drive = inputs.margin * ej_bif0
    if inputs.delta_hz is not None:
        delta = units.freq_to_internal(inputs.delta_hz, inputs.gamma_hz)
    else:
        opt = optimize_detuning(
            replace(template, drive=drive), mech, inputs.delta_scan, branch_policy, search=search
        )
        delta = opt.delta_star

    model = ModelDescriptor(kind="josephson", delta=delta, drive=drive, phi0=inputs.phi0)
    fps = find_fixed_points(model, 1.0, search)
    allowed = [fp for fp in fps if branch_allowed(fp, branch_policy)]
    if not allowed:
        raise NotCoolingError(
            f"no operating branch allowed by policy {branch_policy!r} at the design point"
        )
    # prefer the positive-phase branch, then the monostable one, largest n first
    allowed.sort(key=lambda fp: ({"plus": 0, "mono": 1}.get(fp.branch, 2), -fp.n))
    fp = allowed[0]
    up = universal_params(model, fp, 1.0)
    gamma_opt = optomechanical_damping(up, mech.g0, mech.omega_m)
    try:
        nbar_r = residual_phonons(up, mech.omega_m)
        nbar_min = min_phonons(gamma_opt, mech.gamma_m, nbar_r, mech.nbar_T)
    except NotCoolingError:
        nbar_r = math.nan
        nbar_min = math.nan
    return CoolingReport(
        delta=delta,
        ej=drive,
        phi0=inputs.phi0,
        branch=fp.branch,
        fixed_point=fp,
        params=up,
        mech=mech,
        gamma_hz=inputs.gamma_hz,
        gamma_opt=gamma_opt,
        nbar_r=nbar_r,
        nbar_min=nbar_min,
        ep_gap=exceptional_point_gap(up),
        zero_heating=zero_heating_diagnostics(up),
        ej_bif_resonant=ej_bif0,
    )


# --------------------------------------------------------------------------
# figure datasets

FIGURE_IDS = (
    "1b", "1c", "1d", "1e",
    "2a", "2b",
    "3a", "3b", "3c", "3d",
    "4a", "4b", "4c", "4d",
)

# Table-style mechanical defaults used by the damping/phonon figures
_DEFAULT_MECH = MechanicalMode(
    omega_m=302.0 / 3000.0, gamma_m=0.5 / 3e6, nbar_T=2778.0, g0=2.1 / 3000.0
)


def _optimal_damping_frequency(up: UniversalParams) -> float:
    """Positive frequency maximizing |Gamma_opt(omega)|.

    With c = dtilde^2 + gamma^2/4 - |r|^2 the stationarity of
    omega / [(c - omega^2)^2 + gamma^2 omega^2] gives
    3 z^2 - (2c - gamma^2) z - c^2 = 0 for z = omega^2.
    """
    c = up.dtilde**2 + 0.25 * up.gamma**2 - (up.r1**2 + up.r2**2)
    b = 2.0 * c - up.gamma**2
    z = (b + math.sqrt(b * b + 12.0 * c * c)) / 6.0
    return math.sqrt(max(z, 0.0))


def _figure_grid_defaults(figure_id: str, params: dict) -> dict:
    p = dict(params or {})
    p.setdefault("gamma", 1.0)
    p.setdefault("phi0", 0.2 if figure_id in ("4a", "4b") else 0.06)
    p.setdefault("mech", _DEFAULT_MECH)
    if figure_id in ("1b", "1c", "1e"):
        p.setdefault("deltas", (0.0, 0.4, -0.4) if figure_id != "1e" else (0.0, 0.2, -0.2, 0.4, -0.4))
        p.setdefault("ej_max", 1000.0)
        p.setdefault("points", 201)
    elif figure_id == "1d":
        p.setdefault("ejs", (100.0, 200.0, 300.0, 404.40, 750.0))
        p.setdefault("delta_span", 0.6)
        p.setdefault("points", 241)
    elif figure_id in ("2a", "2b", "3a", "3b", "3c", "3d"):
        p.setdefault("deltas", (0.0, -0.03, -0.07) if figure_id in ("2a", "2b") else ((0.0,) if figure_id in ("3a", "3c") else (-0.07,)))
        p.setdefault("ratio_lo", 0.05)
        p.setdefault("ratio_hi", 3.0)
        p.setdefault("points", 160)
    elif figure_id in ("4a", "4b"):
        p.setdefault("delta", -0.07)
        p.setdefault("ej_ratio", 0.92 if figure_id == "4a" else 2.06)
        p.setdefault("omega_span", 3.0)
        p.setdefault("points", 241)
    elif figure_id in ("4c", "4d"):
        p.setdefault("omega_m_lo", 0.05)
        p.setdefault("omega_m_hi", 5.0)
        p.setdefault("omega_m_points", 25)
        p.setdefault("distances", (25.0, 100.0, 400.0))
        p.setdefault("delta_points", 41)
        p.setdefault("delta_max", 0.45)
    return p


def figure_dataset(
    figure_id: str, params: dict | None = None, search: SearchSpec | None = None
) -> Table:
    """CSV-ready dataset behind one panel of the survey figures.

    All branches are emitted with labels so hysteresis is representable;
    columns are documented per figure id in the README.  ``params``
    overrides the caption defaults (grid sizes, detunings, phi0, mech).
    """
    if figure_id not in FIGURE_IDS:
        raise DomainError(f"unknown figure id {figure_id!r}; expected one of {FIGURE_IDS}")
    p = _figure_grid_defaults(figure_id, params or {})
    gamma = p["gamma"]
    mech = p["mech"]

    if figure_id in ("1b", "1c", "1e"):
        columns = ["ej_over_hgamma", "delta_over_gamma", "branch", "A0", "theta0", "n", "status"]
        if figure_id == "1e":
            columns = columns[:-1] + ["x0", "y0", "status"]
        table = Table(columns=columns)
        ejs = np.linspace(0.0, p["ej_max"], p["points"])
        for delta in p["deltas"]:
            for ej in ejs:
                model = ModelDescriptor("josephson", delta=delta, drive=float(ej), phi0=p["phi0"])
                try:
                    fps = find_fixed_points(model, gamma, search)
                except NoConvergenceError:
                    row = [float(ej), delta, "-", math.nan, math.nan, math.nan, "no_convergence"]
                    if figure_id == "1e":
                        row = row[:-1] + [math.nan, math.nan, "no_convergence"]
                    table.append(row)
                    continue
                for fp in sorted(fps, key=lambda f: BRANCH_ORDER[f.branch]):
                    row = [float(ej), delta, fp.branch, fp.a0, fp.theta0, fp.n, "ok"]
                    if figure_id == "1e":
                        alpha = fp.alpha
                        row = row[:-1] + [alpha.real, alpha.imag, "ok"]
                    table.append(row)
        return table

    if figure_id == "1d":
        table = Table(
            columns=["ej_over_hgamma", "delta_over_gamma", "branch", "A0", "theta0", "n", "status"]
        )
        deltas = np.linspace(-p["delta_span"], p["delta_span"], p["points"])
        for ej in p["ejs"]:
            for delta in deltas:
                model = ModelDescriptor(
                    "josephson", delta=float(delta), drive=float(ej), phi0=p["phi0"]
                )
                try:
                    fps = find_fixed_points(model, gamma, search)
                except NoConvergenceError:
                    table.append([float(ej), float(delta), "-", math.nan, math.nan, math.nan, "no_convergence"])
                    continue
                for fp in sorted(fps, key=lambda f: BRANCH_ORDER[f.branch]):
                    table.append([float(ej), float(delta), fp.branch, fp.a0, fp.theta0, fp.n, "ok"])
        return table

    if figure_id in ("2a", "2b", "3a", "3b", "3c", "3d"):
        phi0 = p["phi0"]
        ej_bif0 = bifurcation_threshold(
            ModelDescriptor("josephson", delta=0.0, drive=0.0, phi0=phi0), gamma, search
        )
        ratios = np.linspace(p["ratio_lo"], p["ratio_hi"], p["points"])
        if figure_id in ("2a", "2b"):
            columns = [
                "ej_over_hgamma", "ej_ratio", "delta_over_gamma", "branch",
                "r1", "r2", "dtilde", "omega_opt", "status",
            ]
        elif figure_id in ("3a", "3b"):
            columns = [
                "ej_over_hgamma", "ej_ratio", "delta_over_gamma", "branch",
                "omega_star", "gamma_opt", "nbar_r", "status",
            ]
        else:
            columns = [
                "ej_over_hgamma", "ej_ratio", "delta_over_gamma", "branch",
                "lambda_plus_re", "lambda_plus_im", "lambda_minus_re", "lambda_minus_im",
                "ep_gap", "status",
            ]
        table = Table(columns=columns)
        n_extra = len(columns) - 5
        for delta in p["deltas"]:
            for ratio in ratios:
                ej = float(ratio * ej_bif0)
                model = ModelDescriptor("josephson", delta=delta, drive=ej, phi0=phi0)
                try:
                    fps = find_fixed_points(model, gamma, search)
                except NoConvergenceError:
                    table.append([ej, float(ratio), delta, "-"] + [math.nan] * n_extra + ["no_convergence"])
                    continue
                for fp in sorted(fps, key=lambda f: BRANCH_ORDER[f.branch]):
                    if not fp.stable and figure_id in ("2a", "2b", "3a", "3b"):
                        continue
                    up = universal_params(model, fp, gamma)
                    base = [ej, float(ratio), delta, fp.branch]
                    if figure_id in ("2a", "2b"):
                        table.append(base + [up.r1, up.r2, up.dtilde, up.r2 - up.dtilde, "ok"])
                    elif figure_id in ("3a", "3b"):
                        w_star = _optimal_damping_frequency(up)
                        gopt = optomechanical_damping(up, mech.g0, w_star)
                        try:
                            nbar_r = residual_phonons(up, w_star)
                        except (NotCoolingError, DomainError):
                            nbar_r = math.nan
                        table.append(base + [w_star, gopt, nbar_r, "ok"])
                    else:
                        lam_p, lam_m = fluctuation_eigenvalues(up)
                        table.append(
                            base
                            + [lam_p.real, lam_p.imag, lam_m.real, lam_m.imag,
                               exceptional_point_gap(up), "ok"]
                        )
        return table

    if figure_id in ("4a", "4b"):
        phi0 = p["phi0"]
        delta = p["delta"]
        ej_bif = bifurcation_threshold(
            ModelDescriptor("josephson", delta=delta, drive=0.0, phi0=phi0), gamma, search
        )
        ej = float(p["ej_ratio"] * ej_bif)
        model = ModelDescriptor("josephson", delta=delta, drive=ej, phi0=phi0)
        omegas = np.linspace(-p["omega_span"], p["omega_span"], p["points"])
        table = Table(
            columns=["omega_over_gamma", "delta_over_gamma", "ej_over_hgamma", "branch", "snn", "status"]
        )
        fps = [fp for fp in find_fixed_points(model, gamma, search) if fp.stable]
        from .core import photon_number_spectrum

        for fp in sorted(fps, key=lambda f: BRANCH_ORDER[f.branch]):
            up = universal_params(model, fp, gamma)
            for w in omegas:
                table.append([float(w), delta, ej, fp.branch, photon_number_spectrum(up, float(w)), "ok"])
        return table

    # 4c / 4d: minimum phonon number vs mechanical frequency at fixed
    # distance to threshold, detuning scanned to maximize the damping rate
    sign = -1.0 if figure_id == "4c" else 1.0
    phi0 = p["phi0"]
    deltas = sign * np.linspace(0.005, p["delta_max"], p["delta_points"])
    thresholds = {}
    hint = None
    for delta in deltas:
        model0 = ModelDescriptor("josephson", delta=float(delta), drive=0.0, phi0=phi0)
        thresholds[float(delta)] = bifurcation_threshold(model0, gamma, search, bracket_hint=hint)
        hint = thresholds[float(delta)]
    omegas = np.geomspace(p["omega_m_lo"], p["omega_m_hi"], p["omega_m_points"])
    table = Table(
        columns=[
            "omega_m_over_gamma", "dist_over_hgamma", "delta_star_over_gamma", "branch",
            "gamma_opt_over_gamma", "nbar_r", "nbar_min", "status",
        ]
    )
    for dist in p["distances"]:
        cases = []
        for delta in deltas:
            ej = thresholds[float(delta)] + dist
            model = ModelDescriptor("josephson", delta=float(delta), drive=float(ej), phi0=phi0)
            try:
                fps = find_fixed_points(model, gamma, search)
            except NoConvergenceError:
                continue
            for fp in fps:
                if branch_allowed(fp, "plus_only"):
                    cases.append((float(delta), fp.branch, universal_params(model, fp, gamma)))
        for omega_m in omegas:
            mech_w = replace(mech, omega_m=float(omega_m))
            best = None
            for delta, branch, up in cases:
                gopt = optomechanical_damping(up, mech_w.g0, mech_w.omega_m)
                if best is None or gopt > best[0]:
                    best = (gopt, delta, branch, up)
            if best is None or best[0] <= 0.0:
                table.append([float(omega_m), float(dist), math.nan, "-", math.nan, math.nan, math.nan, "not_cooling"])
                continue
            gopt, delta, branch, up = best
            try:
                nbar_r = residual_phonons(up, mech_w.omega_m)
                nbar = min_phonons(gopt, mech_w.gamma_m, nbar_r, mech_w.nbar_T)
            except NotCoolingError:
                nbar_r, nbar = math.nan, math.nan
            table.append([float(omega_m), float(dist), delta, branch, gopt, nbar_r, nbar, "ok"])
    return table
