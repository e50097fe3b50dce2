"""Shared exception types.

Exit-code mapping in the CLI: ConfigError and UsageError-like problems exit 2,
failed numerical checks exit 1, everything healthy exits 0.
"""


class ErgolabError(Exception):
    """Base class for all package errors."""


class ChartDomainError(ErgolabError):
    """A point lies outside the declared coordinate chart."""


class SignatureError(ErgolabError):
    """Metric degenerate or of unexpected signature at a point."""


class UnsupportedModelError(ErgolabError):
    """Operation not defined for this metric family."""


class ConstructionError(ErgolabError):
    """A constructive step failed its own certificate."""


class PreconditionError(ErgolabError):
    """Caller violated a documented precondition."""


class GridMismatchError(ErgolabError):
    """Two fields live on different grids or modes."""


class CheckFailedError(ErgolabError):
    """A numerical verification did not meet its tolerance."""


class ConfigError(ErgolabError):
    """Bad configuration file: unknown key, type error, or range violation."""
