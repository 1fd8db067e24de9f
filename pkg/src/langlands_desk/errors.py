"""Exception types shared by every module.

The CLI maps each family onto an exit code: input errors exit 2,
domain and precision errors exit 3, resource guards exit 4.
"""


class DeskError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(DeskError, ValueError):
    exit_code = 2


class ValidationError(InputError):
    """Structured input failed a consistency check (e.g. curve data)."""


class DomainError(DeskError, ArithmeticError):
    """A mathematically undefined request: poles, non-units, trivial zeros."""

    exit_code = 3


class PrecisionError(DomainError):
    """The requested p-adic or series precision cannot be certified."""


class ResourceGuardError(DeskError):
    """A brute-force enumeration would exceed its size guard."""

    exit_code = 4


class InternalInvariantError(DeskError, AssertionError):
    """An internal consistency check failed; indicates bad tables or data."""
