"""Error hierarchy shared by the library and the command-line runner."""
from __future__ import annotations


class LexpowError(Exception):
    """Base error; ``exit_code`` is what the CLI returns when it escapes a run."""

    exit_code = 1


class MalformedInputError(LexpowError, ValueError):
    exit_code = 2


class UsageError(LexpowError, ValueError):
    exit_code = 2


class UndefinedColonError(LexpowError, ValueError):
    exit_code = 3


class InfeasibleHilbertFunctionError(LexpowError, ValueError):
    """A Hilbert function that no ideal realizes."""

    exit_code = 3

    def __init__(self, message: str, degree: int | None = None) -> None:
        super().__init__(message)
        self.degree = degree


class InsufficientBoundError(LexpowError, ValueError):
    """The degree window is too small for the declared tail."""

    exit_code = 3


class LppNonexistentError(LexpowError, ValueError):
    """No d-LPP ideal has the requested Hilbert function."""

    exit_code = 3

    def __init__(self, message: str, degree: int | None = None) -> None:
        super().__init__(message)
        self.degree = degree


class ContainmentViolationError(LexpowError, ValueError):
    exit_code = 3


class NotStableError(LexpowError, ValueError):
    exit_code = 3


class NotSppError(LexpowError, ValueError):
    exit_code = 3


class NotArtinianError(LexpowError, ValueError):
    exit_code = 3

    def __init__(self, message: str, variable: int | None = None) -> None:
        super().__init__(message)
        self.variable = variable


class ConventionMismatchError(LexpowError, ValueError):
    exit_code = 3


class ResourceLimitError(LexpowError, RuntimeError):
    """A configured cap was exceeded; ``count`` is how far the computation got."""

    exit_code = 4

    def __init__(self, message: str, count: int) -> None:
        super().__init__(message)
        self.count = count
