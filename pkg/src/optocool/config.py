"""Line-oriented `[section]` / `key = value` run configuration.

Frequencies accept Hz/kHz/MHz/GHz suffixes and are read as ordinary
frequencies (the 2 pi is applied on ingest); energies accept ueV or the
dimensionless `*hgamma` suffix; bare numbers pass through as internal
gamma-units.  Everything is resolved to internal units at parse time;
the SI linewidth is retained (``gamma_hz``) so reports can convert back.
"""

from __future__ import annotations

import configparser
import io
import re
from dataclasses import dataclass

from . import units
from .core import MechanicalMode
from .errors import ConfigError, DomainError
from .models import KINDS, ModelDescriptor
from .sweeps import (
    AXIS_NAMES,
    BRANCH_POLICIES,
    FIGURE_IDS,
    QUANTITIES,
    SweepAxis,
    _MECH_QUANTITIES,
)

COMMANDS = (
    "fixed-points",
    "spectrum",
    "damping",
    "phonons",
    "sweep",
    "optimize",
    "design",
    "figure",
)

_FREQ_SUFFIXES = {"hz": 1.0, "khz": 1e3, "mhz": 1e6, "ghz": 1e9}
_ENERGY_SUFFIXES = ("uev", "μev", "µev")
_NUMBER_RE = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*(.*)$")


@dataclass(frozen=True)
class RunSpec:
    """A fully resolved run: command, model/mech in internal units, I/O."""

    command: str
    fmt: str = "csv"
    out: str | None = None
    workers: int = 1
    gamma_hz: float | None = None
    model: ModelDescriptor | None = None
    mech: MechanicalMode | None = None
    axes: tuple[SweepAxis, ...] = ()
    outputs: tuple[str, ...] = ()
    branch_policy: str = "stable_only"
    omega_lo: float = -3.0
    omega_hi: float = 3.0
    omega_count: int = 121
    delta_lo: float = -0.5
    delta_hi: float = -1e-4
    figure_id: str | None = None
    figure_points: int | None = None
    margin: float = 0.98
    ej_uev: float | None = None
    ej_convention: str = "h_gamma"
    design_optimize_delta: bool = False


class _Doc:
    """Access wrapper that tracks which keys exist and parses values."""

    def __init__(self, parser: configparser.ConfigParser):
        self.parser = parser

    def has(self, section: str, key: str) -> bool:
        return self.parser.has_option(section, key)

    def raw(self, section: str, key: str) -> str:
        return self.parser.get(section, key).strip()

    def text(self, section: str, key: str, default: str | None = None) -> str | None:
        if not self.has(section, key):
            return default
        return self.raw(section, key)

    def integer(self, section: str, key: str, default: int | None = None) -> int | None:
        if not self.has(section, key):
            return default
        raw = self.raw(section, key)
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigError(f"{section}.{key}: expected an integer, got {raw!r}") from exc

    def number(self, section: str, key: str, default: float | None = None) -> float | None:
        if not self.has(section, key):
            return default
        raw = self.raw(section, key)
        try:
            return float(raw)
        except ValueError as exc:
            raise ConfigError(f"{section}.{key}: expected a plain number, got {raw!r}") from exc


def _split_quantity(raw: str, where: str) -> tuple[float, str]:
    m = _NUMBER_RE.match(raw.strip())
    if not m:
        raise ConfigError(f"{where}: cannot parse quantity {raw!r}")
    return float(m.group(1)), m.group(2).strip()


def _to_internal_frequency(
    raw: str, where: str, gamma_hz: float | None
) -> float:
    """A frequency-like value: bare = gamma-units, suffixed = ordinary Hz."""
    value, unit = _split_quantity(raw, where)
    if unit == "":
        return value
    mult = _FREQ_SUFFIXES.get(unit.lower())
    if mult is None:
        raise ConfigError(f"{where}: unknown frequency unit {unit!r}")
    if gamma_hz is None:
        raise ConfigError(f"{where}: an SI frequency needs cavity.gamma to be set")
    return units.freq_to_internal(value * mult, gamma_hz)


def _to_internal_energy(
    raw: str, where: str, gamma_hz: float | None, convention: str
) -> tuple[float, float | None]:
    """An energy-like value; returns (internal, uev or None)."""
    value, unit = _split_quantity(raw, where)
    if unit == "":
        return value, None
    if unit == "*hgamma":
        return value, None
    if unit.lower() in _ENERGY_SUFFIXES:
        if gamma_hz is None:
            raise ConfigError(f"{where}: an energy in ueV needs cavity.gamma to be set")
        return units.uev_to_internal(value, gamma_hz, convention), value
    mult = _FREQ_SUFFIXES.get(unit.lower())
    if mult is not None:
        if gamma_hz is None:
            raise ConfigError(f"{where}: an SI frequency needs cavity.gamma to be set")
        return units.freq_to_internal(value * mult, gamma_hz), None
    raise ConfigError(f"{where}: unknown energy unit {unit!r}")


def _parse_gamma(doc: _Doc) -> float | None:
    if doc.has("cavity", "gamma_hz"):
        gamma_hz = doc.number("cavity", "gamma_hz")
        if not gamma_hz > 0.0:
            raise ConfigError("cavity.gamma_hz must be positive")
        return gamma_hz
    if doc.has("cavity", "gamma"):
        raw = doc.raw("cavity", "gamma")
        value, unit = _split_quantity(raw, "cavity.gamma")
        if unit == "":
            if value != 1.0:
                raise ConfigError(
                    "cavity.gamma without a unit must be 1 (internal units); "
                    "give a suffixed SI value like '3 MHz' otherwise"
                )
            return None
        mult = _FREQ_SUFFIXES.get(unit.lower())
        if mult is None:
            raise ConfigError(f"cavity.gamma: unknown frequency unit {unit!r}")
        return value * mult
    return None


def _parse_model(doc: _Doc, gamma_hz: float | None, convention: str) -> tuple[ModelDescriptor | None, float | None]:
    if not doc.parser.has_section("model"):
        return None, None
    kind = doc.text("model", "kind")
    if kind is None:
        raise ConfigError("model.kind is required (linear | kerr | josephson)")
    if kind not in KINDS:
        raise ConfigError(f"model.kind: unknown kind {kind!r}; expected one of {KINDS}")
    delta = 0.0
    if doc.has("model", "delta"):
        delta = _to_internal_frequency(doc.raw("model", "delta"), "model.delta", gamma_hz)
    drive = 0.0
    ej_uev = None
    drive_keys = [k for k in ("ej", "drive", "eps") if doc.has("model", k)]
    if len(drive_keys) > 1:
        raise ConfigError(f"model: give only one of ej/drive/eps, found {drive_keys}")
    if drive_keys:
        drive, ej_uev = _to_internal_energy(
            doc.raw("model", drive_keys[0]), f"model.{drive_keys[0]}", gamma_hz, convention
        )
    kwargs = {"kind": kind, "delta": delta, "drive": drive}
    if kind == "kerr":
        kwargs["kerr_k"] = doc.number("model", "kerr", 0.0)
    if kind == "josephson":
        if not doc.has("model", "phi0"):
            raise ConfigError("model.phi0 is required for kind=josephson")
        kwargs["phi0"] = doc.number("model", "phi0")
    try:
        return ModelDescriptor(**kwargs), ej_uev
    except DomainError as exc:
        raise ConfigError(f"model: {exc}") from exc


def _parse_mech(doc: _Doc, gamma_hz: float | None) -> MechanicalMode | None:
    if not doc.parser.has_section("mech"):
        return None
    values = {}
    for key, field_name in (
        ("omega_m", "omega_m"),
        ("gamma_m", "gamma_m"),
        ("g0", "g0"),
    ):
        if not doc.has("mech", key):
            raise ConfigError(f"mech.{key} is required")
        values[field_name] = _to_internal_frequency(doc.raw("mech", key), f"mech.{key}", gamma_hz)
    if not doc.has("mech", "nbar_t"):
        raise ConfigError("mech.nbar_t is required")
    values["nbar_T"] = doc.number("mech", "nbar_t")
    try:
        return MechanicalMode(**values)
    except DomainError as exc:
        raise ConfigError(f"mech: {exc}") from exc


def _parse_axes(doc: _Doc, gamma_hz: float | None) -> tuple[SweepAxis, ...]:
    axes = []
    for key in ("axis1", "axis2"):
        if not doc.has("sweep", key):
            continue
        raw = doc.raw("sweep", key)
        parts = [p.strip() for p in raw.split(",")]
        if len(parts) not in (4, 5):
            raise ConfigError(
                f"sweep.{key}: expected 'name, min, max, count[, scale]', got {raw!r}"
            )
        name = parts[0]
        if name not in AXIS_NAMES:
            raise ConfigError(f"sweep.{key}: unknown axis {name!r}; expected {AXIS_NAMES}")
        try:
            lo, hi = float(parts[1]), float(parts[2])
            count = int(parts[3])
        except ValueError as exc:
            raise ConfigError(f"sweep.{key}: malformed numbers in {raw!r}") from exc
        scale = parts[4] if len(parts) == 5 else "linear"
        try:
            axes.append(SweepAxis(name=name, lo=lo, hi=hi, count=count, scale=scale))
        except DomainError as exc:
            raise ConfigError(f"sweep.{key}: {exc}") from exc
    return tuple(axes)


def parse_config(text: str, command: str | None = None, figure_id: str | None = None) -> RunSpec:
    """Parse and validate a configuration document into a RunSpec.

    ``command``/``figure_id`` given by the CLI override the [run] section.
    Raises ConfigError with line numbers for malformed documents and with
    the offending key for unit errors.
    """
    parser = configparser.ConfigParser(
        inline_comment_prefixes=("#", ";"), interpolation=None
    )
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"config parse error: {exc}") from exc
    doc = _Doc(parser)

    cmd = command or doc.text("run", "command")
    if cmd is None:
        raise ConfigError("no command given (run.command or CLI subcommand)")
    if cmd not in COMMANDS:
        raise ConfigError(f"unknown command {cmd!r}; expected one of {COMMANDS}")

    fmt = doc.text("run", "format", "csv")
    if fmt not in ("csv", "json"):
        raise ConfigError(f"run.format must be csv or json, got {fmt!r}")
    out = doc.text("run", "out")
    workers = doc.integer("run", "workers", 1)
    if workers < 1:
        raise ConfigError("run.workers must be >= 1")

    convention = doc.text("design", "ej_convention", "h_gamma")
    if convention not in units.EJ_CONVENTIONS:
        raise ConfigError(
            f"design.ej_convention must be one of {units.EJ_CONVENTIONS}, got {convention!r}"
        )
    margin = doc.number("design", "margin", 0.98)
    if not 0.0 < margin < 1.0:
        raise ConfigError("design.margin must lie in (0, 1)")
    optimize_delta_raw = doc.text("design", "optimize_delta", "false")
    if optimize_delta_raw.lower() not in ("true", "false", "yes", "no"):
        raise ConfigError("design.optimize_delta must be a boolean")
    design_optimize_delta = optimize_delta_raw.lower() in ("true", "yes")

    gamma_hz = _parse_gamma(doc)
    model, ej_uev = _parse_model(doc, gamma_hz, convention)
    mech = _parse_mech(doc, gamma_hz)
    axes = _parse_axes(doc, gamma_hz)

    outputs = ()
    if doc.has("sweep", "outputs"):
        outputs = tuple(
            p.strip() for p in doc.raw("sweep", "outputs").split(",") if p.strip()
        )
        for name in outputs:
            if name not in QUANTITIES:
                raise ConfigError(f"sweep.outputs: unknown quantity {name!r}")
    branch_policy = doc.text("sweep", "branch_policy", "stable_only")
    if branch_policy not in BRANCH_POLICIES:
        raise ConfigError(f"sweep.branch_policy must be one of {BRANCH_POLICIES}")

    omega_lo = _to_internal_frequency(doc.text("spectrum", "omega_min", "-3"), "spectrum.omega_min", gamma_hz)
    omega_hi = _to_internal_frequency(doc.text("spectrum", "omega_max", "3"), "spectrum.omega_max", gamma_hz)
    omega_count = doc.integer("spectrum", "count", 121)
    if omega_count < 1:
        raise ConfigError("spectrum.count must be >= 1")
    if not omega_lo < omega_hi:
        raise ConfigError("spectrum omega range must satisfy omega_min < omega_max")

    delta_lo = _to_internal_frequency(doc.text("optimize", "delta_min", "-0.5"), "optimize.delta_min", gamma_hz)
    delta_hi = _to_internal_frequency(doc.text("optimize", "delta_max", "-0.0001"), "optimize.delta_max", gamma_hz)
    if not delta_lo < delta_hi:
        raise ConfigError("optimize delta range must satisfy delta_min < delta_max")

    fig = figure_id or doc.text("figure", "id")
    figure_points = doc.integer("figure", "points")
    if cmd == "figure":
        if fig is None:
            raise ConfigError("figure command needs a figure id (figure.id or CLI argument)")
        if fig not in FIGURE_IDS:
            raise ConfigError(f"unknown figure id {fig!r}; expected one of {FIGURE_IDS}")

    spec = RunSpec(
        command=cmd,
        fmt=fmt,
        out=out,
        workers=workers,
        gamma_hz=gamma_hz,
        model=model,
        mech=mech,
        axes=axes,
        outputs=outputs,
        branch_policy=branch_policy,
        omega_lo=omega_lo,
        omega_hi=omega_hi,
        omega_count=omega_count,
        delta_lo=delta_lo,
        delta_hi=delta_hi,
        figure_id=fig,
        figure_points=figure_points,
        margin=margin,
        ej_uev=ej_uev,
        ej_convention=convention,
        design_optimize_delta=design_optimize_delta,
    )
    _validate_spec(spec)
    return spec


def _validate_spec(spec: RunSpec) -> None:
    needs_model = spec.command in (
        "fixed-points", "spectrum", "damping", "phonons", "sweep", "optimize", "design",
    )
    if needs_model and spec.model is None:
        raise ConfigError(f"command {spec.command!r} needs a [model] section")
    needs_mech = spec.command in ("damping", "phonons", "optimize", "design")
    if needs_mech and spec.mech is None:
        raise ConfigError(f"command {spec.command!r} needs a [mech] section")
    if spec.command == "sweep" and not spec.outputs:
        raise ConfigError("sweep command needs sweep.outputs")
    if spec.command == "design":
        if spec.gamma_hz is None:
            raise ConfigError("design command needs cavity.gamma in SI units")
        if spec.model.kind != "josephson":
            raise ConfigError("design command needs a josephson model")
    for name in spec.outputs:
        if name in _MECH_QUANTITIES and spec.mech is None:
            raise ConfigError(f"sweep output {name!r} needs a [mech] section")


def render_config(spec: RunSpec) -> str:
    """Canonical configuration text; parse_config(render_config(s)) == s.

    All values are written in internal units (plus gamma_hz in SI), so the
    round trip is exact.
    """
    out = io.StringIO()

    def sec(name):
        out.write(f"[{name}]\n")

    sec("run")
    out.write(f"command = {spec.command}\n")
    out.write(f"format = {spec.fmt}\n")
    if spec.out is not None:
        out.write(f"out = {spec.out}\n")
    out.write(f"workers = {spec.workers}\n\n")

    if spec.gamma_hz is not None:
        sec("cavity")
        out.write(f"gamma_hz = {spec.gamma_hz!r}\n\n")

    if spec.model is not None:
        m = spec.model
        sec("model")
        out.write(f"kind = {m.kind}\n")
        out.write(f"delta = {m.delta!r}\n")
        if spec.ej_uev is not None:
            out.write(f"ej = {spec.ej_uev!r} ueV\n")
        else:
            out.write(f"ej = {m.drive!r}\n")
        if m.kind == "kerr":
            out.write(f"kerr = {m.kerr_k!r}\n")
        if m.kind == "josephson":
            out.write(f"phi0 = {m.phi0!r}\n")
        out.write("\n")

    if spec.mech is not None:
        sec("mech")
        out.write(f"omega_m = {spec.mech.omega_m!r}\n")
        out.write(f"gamma_m = {spec.mech.gamma_m!r}\n")
        out.write(f"g0 = {spec.mech.g0!r}\n")
        out.write(f"nbar_t = {spec.mech.nbar_T!r}\n\n")

    sec("sweep")
    for i, axis in enumerate(spec.axes, start=1):
        out.write(f"axis{i} = {axis.name}, {axis.lo!r}, {axis.hi!r}, {axis.count}, {axis.scale}\n")
    if spec.outputs:
        out.write(f"outputs = {', '.join(spec.outputs)}\n")
    out.write(f"branch_policy = {spec.branch_policy}\n\n")

    sec("spectrum")
    out.write(f"omega_min = {spec.omega_lo!r}\n")
    out.write(f"omega_max = {spec.omega_hi!r}\n")
    out.write(f"count = {spec.omega_count}\n\n")

    sec("optimize")
    out.write(f"delta_min = {spec.delta_lo!r}\n")
    out.write(f"delta_max = {spec.delta_hi!r}\n\n")

    sec("design")
    out.write(f"margin = {spec.margin!r}\n")
    out.write(f"ej_convention = {spec.ej_convention}\n")
    out.write(f"optimize_delta = {'true' if spec.design_optimize_delta else 'false'}\n\n")

    if spec.figure_id is not None or spec.figure_points is not None:
        sec("figure")
        if spec.figure_id is not None:
            out.write(f"id = {spec.figure_id}\n")
        if spec.figure_points is not None:
            out.write(f"points = {spec.figure_points}\n")
        out.write("\n")
    return out.getvalue()
