"""Exception hierarchy shared by all optocool modules.

The CLI maps these onto exit codes: ConfigError -> 2,
NoConvergenceError -> 3, DomainError (and subclasses) -> 4.
"""


class OptocoolError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(OptocoolError, ValueError):
    """An argument lies outside the supported domain of an operation."""


class NoConvergenceError(OptocoolError, RuntimeError):
    """A numerical solver failed to reach its target residual or bracket."""


class NotCoolingError(DomainError):
    """Requested a cooling-regime quantity where Gamma_opt <= 0."""


class UnstableFixedPointError(DomainError):
    """Fluctuation analysis requested around an unstable fixed point."""


class ConfigError(OptocoolError, ValueError):
    """A configuration document or CLI argument failed to validate."""
