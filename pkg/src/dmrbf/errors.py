"""Exception types raised across the package.

Everything derives from :class:`DmrbfError` so callers can catch one base
class at the CLI boundary and still get specific types in library code.
"""

from __future__ import annotations


class DmrbfError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(DmrbfError):
    """An array argument has the wrong shape (non-square, mismatched, empty)."""


class DomainError(DmrbfError):
    """A scalar argument lies outside its documented domain."""


class NumericalError(DmrbfError):
    """An iterative numerical routine failed to converge."""


class ConditioningError(DmrbfError):
    """A matrix is too ill-conditioned for the requested operation.

    Carries the offending extreme eigenvalues so the caller can report them.
    """

    def __init__(self, message: str, min_eig: float, max_eig: float):
        super().__init__(f"{message} (min eigenvalue {min_eig:.6e}, max {max_eig:.6e})")
        self.min_eig = min_eig
        self.max_eig = max_eig


class UpdateSingularityError(DmrbfError):
    """A rank-one inverse update hit a near-zero denominator.

    ``level`` names the update in the five-level inversion chain that failed.
    """

    def __init__(self, level: str, denominator: complex):
        super().__init__(
            f"rank-one update denominator at level {level!r} has modulus "
            f"{abs(denominator):.3e} (below 1e-12); the update is singular"
        )
        self.level = level
        self.denominator = denominator


class DegenerateChannelError(DmrbfError):
    """The effective signal channel vanished; no meaningful weights exist."""


class DegenerateGeometryError(DmrbfError):
    """The desired signal lies (numerically) inside the nulled subspace."""


class UnsupportedScenarioError(DmrbfError):
    """The scenario violates a structural requirement of the method."""


class ConfigError(DmrbfError):
    """A configuration value failed validation.  ``field`` names the key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class ConfigParseError(DmrbfError):
    """A configuration file could not be parsed.  Carries the line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
