"""optocool: semiclassical cooling engine for driven nonlinear cavities.

Computes classical fixed points (including bistable branches and
bifurcation thresholds), squeezing-aware photon-number spectra,
optomechanical damping rates, residual backaction heating and minimum
phonon numbers for linear, Kerr and Josephson-driven cavity models.
"""

__version__ = "0.1.0"

from .config import RunSpec, parse_config, render_config
from .core import (
    CorrelatorSet,
    MechanicalMode,
    UniversalParams,
    ZeroHeatingDiagnostics,
    correlator_initial_conditions,
    correlators_time,
    damping_via_asymmetry,
    exceptional_point_gap,
    fluctuation_eigenvalues,
    min_phonons,
    optomechanical_damping,
    photon_number_spectrum,
    residual_phonons,
    spectrum_via_transform,
    universal_params,
    zero_heating_diagnostics,
)
from .errors import (
    ConfigError,
    DomainError,
    NoConvergenceError,
    NotCoolingError,
    OptocoolError,
    UnstableFixedPointError,
)
from .models import (
    FixedPoint,
    ModelDescriptor,
    SearchSpec,
    WirtingerDerivs,
    bifurcation_threshold,
    classical_hamiltonian,
    fd_hamiltonian_derivatives,
    find_fixed_points,
    hamiltonian_derivatives,
    resonant_fold_estimate,
)
from .specfun import (
    bessel_identity_residuals,
    bessel_j,
    bessel_j_scaled,
    first_j1_maximum,
    j1_extrema,
    rwa_series_check,
)
from .sweeps import (
    CoolingReport,
    DesignInputs,
    DetuningOptimum,
    SweepAxis,
    SweepGrid,
    design_cooling,
    figure_dataset,
    optimize_detuning,
    run_sweep,
)
from .tableio import Table, emit_table

__all__ = [
    "__version__",
    "RunSpec", "parse_config", "render_config",
    "CorrelatorSet", "MechanicalMode", "UniversalParams", "ZeroHeatingDiagnostics",
    "correlator_initial_conditions", "correlators_time", "damping_via_asymmetry",
    "exceptional_point_gap", "fluctuation_eigenvalues", "min_phonons",
    "optomechanical_damping", "photon_number_spectrum", "residual_phonons",
    "spectrum_via_transform", "universal_params", "zero_heating_diagnostics",
    "ConfigError", "DomainError", "NoConvergenceError", "NotCoolingError",
    "OptocoolError", "UnstableFixedPointError",
    "FixedPoint", "ModelDescriptor", "SearchSpec", "WirtingerDerivs",
    "bifurcation_threshold", "classical_hamiltonian", "fd_hamiltonian_derivatives",
    "find_fixed_points", "hamiltonian_derivatives", "resonant_fold_estimate",
    "bessel_identity_residuals", "bessel_j", "bessel_j_scaled",
    "first_j1_maximum", "j1_extrema", "rwa_series_check",
    "CoolingReport", "DesignInputs", "DetuningOptimum", "SweepAxis", "SweepGrid",
    "design_cooling", "figure_dataset", "optimize_detuning", "run_sweep",
    "Table", "emit_table",
]
