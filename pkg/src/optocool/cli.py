"""Command-line interface: subcommand dispatch and CSV/JSON emission.

Exit codes: 0 success, 2 config error, 3 solver non-convergence,
4 domain error (unsupported range / non-cooling regime / instability).
"""

from __future__ import annotations

import argparse
import configparser
import io
import math
import sys
from dataclasses import replace

import numpy as np

from . import __version__
from .config import COMMANDS, RunSpec, parse_config, render_config
from .core import (
    min_phonons,
    optomechanical_damping,
    photon_number_spectrum,
    residual_phonons,
    universal_params,
    zero_heating_diagnostics,
)
from .errors import ConfigError, DomainError, NoConvergenceError, NotCoolingError
from .models import find_fixed_points
from .sweeps import (
    DesignInputs,
    SweepGrid,
    branch_allowed,
    design_cooling,
    figure_dataset,
    optimize_detuning,
    run_sweep,
)
from .tableio import Table, emit_table


def _apply_sets(text: str, sets: list[str]) -> str:
    """Apply --set section.key=value overrides to the raw document."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"), interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"config parse error: {exc}") from exc
    for item in sets:
        if "=" not in item:
            raise ConfigError(f"--set expects section.key=value, got {item!r}")
        key, _, value = item.partition("=")
        if "." not in key:
            raise ConfigError(f"--set key must be section.key, got {key!r}")
        section, _, option = key.strip().partition(".")
        if not parser.has_section(section):
            parser.add_section(section)
        parser.set(section, option.strip(), value.strip())
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()


def _cmd_fixed_points(spec: RunSpec) -> Table:
    fps = find_fixed_points(spec.model)
    table = Table(columns=["branch", "A0", "theta0", "n", "stable"])
    for fp in fps:
        table.append([fp.branch, fp.a0, fp.theta0, fp.n, fp.stable])
    return table


def _stable_points(spec: RunSpec):
    fps = find_fixed_points(spec.model)
    return [fp for fp in fps if branch_allowed(fp, spec.branch_policy)]


def _cmd_spectrum(spec: RunSpec) -> Table:
    omegas = np.linspace(spec.omega_lo, spec.omega_hi, spec.omega_count)
    table = Table(columns=["omega_over_gamma", "branch", "snn"])
    for fp in _stable_points(spec):
        up = universal_params(spec.model, fp)
        for w in omegas:
            table.append([float(w), fp.branch, photon_number_spectrum(up, float(w))])
    return table


def _cmd_damping(spec: RunSpec) -> Table:
    omegas = np.linspace(spec.omega_lo, spec.omega_hi, spec.omega_count)
    table = Table(columns=["omega_over_gamma", "branch", "gamma_opt"])
    for fp in _stable_points(spec):
        up = universal_params(spec.model, fp)
        for w in omegas:
            table.append(
                [float(w), fp.branch, optomechanical_damping(up, spec.mech.g0, float(w))]
            )
    return table


def _cmd_phonons(spec: RunSpec) -> Table:
    table = Table(
        columns=[
            "branch", "n", "gamma_opt", "nbar_r", "nbar_min",
            "omega_opt", "r1_offset", "status",
        ]
    )
    for fp in _stable_points(spec):
        up = universal_params(spec.model, fp)
        mech = spec.mech
        gopt = optomechanical_damping(up, mech.g0, mech.omega_m)
        diag = zero_heating_diagnostics(up)
        try:
            nbar_r = residual_phonons(up, mech.omega_m)
            nbar = min_phonons(gopt, mech.gamma_m, nbar_r, mech.nbar_T)
            status = "ok"
        except NotCoolingError:
            nbar_r, nbar, status = math.nan, math.nan, "not_cooling"
        table.append(
            [fp.branch, fp.n, gopt, nbar_r, nbar, diag.omega_opt, diag.r1_offset, status]
        )
    return table


def _cmd_sweep(spec: RunSpec) -> Table:
    grid = SweepGrid(model=spec.model, axes=spec.axes, branch_policy=spec.branch_policy)
    return run_sweep(grid, spec.outputs, mech=spec.mech, workers=spec.workers)


def _cmd_optimize(spec: RunSpec) -> Table:
    opt = optimize_detuning(
        spec.model, spec.mech, (spec.delta_lo, spec.delta_hi), spec.branch_policy
    )
    table = Table(columns=["delta_star_over_gamma", "gamma_opt_star"])
    table.append([opt.delta_star, opt.gamma_opt_star])
    return table


def _cmd_design(spec: RunSpec) -> Table:
    gamma_hz = spec.gamma_hz
    mech = spec.mech
    inputs = DesignInputs(
        gamma_hz=gamma_hz,
        omega_m_hz=mech.omega_m * gamma_hz,
        gamma_m_hz=mech.gamma_m * gamma_hz,
        g0_hz=mech.g0 * gamma_hz,
        phi0=spec.model.phi0,
        nbar_T=mech.nbar_T,
        delta_hz=None if spec.design_optimize_delta else spec.model.delta * gamma_hz,
        ej_over_hgamma=spec.model.drive if spec.model.drive > 0.0 else None,
        margin=spec.margin,
        delta_scan=(spec.delta_lo, spec.delta_hi),
        ej_convention=spec.ej_convention,
    )
    rep = design_cooling(inputs)
    table = Table(
        columns=[
            "delta_over_gamma", "ej_over_hgamma", "ej_ratio", "phi0", "branch",
            "A0", "theta0", "n", "dtilde", "r1", "r2",
            "gamma_opt_over_gamma", "gamma_opt_hz", "nbar_r", "nbar_min",
            "ep_gap", "r1_offset", "omega_opt", "status",
        ]
    )
    table.append(
        [
            rep.delta, rep.ej, rep.ej_ratio, rep.phi0, rep.branch,
            rep.fixed_point.a0, rep.fixed_point.theta0, rep.fixed_point.n,
            rep.params.dtilde, rep.params.r1, rep.params.r2,
            rep.gamma_opt, rep.gamma_opt_hz, rep.nbar_r, rep.nbar_min,
            rep.ep_gap, rep.zero_heating.r1_offset, rep.zero_heating.omega_opt,
            "ok" if rep.cooling else "not_cooling",
        ]
    )
    return table


def _cmd_figure(spec: RunSpec) -> Table:
    params = {}
    if spec.figure_points is not None:
        params["points"] = spec.figure_points
        if spec.figure_id in ("4c", "4d"):
            params = {"omega_m_points": spec.figure_points}
    return figure_dataset(spec.figure_id, params)


_DISPATCH = {
    "fixed-points": _cmd_fixed_points,
    "spectrum": _cmd_spectrum,
    "damping": _cmd_damping,
    "phonons": _cmd_phonons,
    "sweep": _cmd_sweep,
    "optimize": _cmd_optimize,
    "design": _cmd_design,
    "figure": _cmd_figure,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optocool",
        description="Semiclassical cooling quantities for driven nonlinear cavities",
    )
    parser.add_argument("--version", action="version", version=f"optocool {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "figure":
            p.add_argument("figure_id", nargs="?", default=None)
        p.add_argument("--config", default=None, help="configuration document")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), default=None)
        p.add_argument(
            "--set",
            dest="sets",
            action="append",
            default=[],
            metavar="SECTION.KEY=VALUE",
            help="inline config override (repeatable)",
        )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = ""
        if args.config is not None:
            try:
                with open(args.config, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ConfigError(f"cannot read config {args.config!r}: {exc}") from exc
        if args.sets:
            text = _apply_sets(text, args.sets)
        figure_id = getattr(args, "figure_id", None)
        spec = parse_config(text, command=args.command, figure_id=figure_id)
        if args.out is not None:
            spec = replace(spec, out=args.out)
        if args.fmt is not None:
            spec = replace(spec, fmt=args.fmt)
        table = _DISPATCH[spec.command](spec)
        meta = {"version": __version__, "config": render_config(spec)}
        payload = emit_table(table, spec.fmt, meta)
        if spec.out is None:
            sys.stdout.buffer.write(payload)
        else:
            with open(spec.out, "wb") as fh:
                fh.write(payload)
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NoConvergenceError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 4


def entry() -> None:
    sys.exit(main())
