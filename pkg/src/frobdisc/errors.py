"""Exception types shared across the package."""


class FrobdiscError(Exception):
    """Base class for all package errors."""


class ContextMismatchError(FrobdiscError):
    """Operands belong to different polynomial rings."""


class PolyParseError(FrobdiscError):
    """Syntax error in polynomial (or derived) text input."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DegreeCapError(FrobdiscError):
    """An intermediate exponent would exceed the configured degree cap."""


class UndefinedExtendedOperation(FrobdiscError):
    """One of the undefined extended-line expressions was attempted."""


class ConservationUndefined(FrobdiscError):
    """A conservation identity was requested with an infinite term."""


class IterationCapError(FrobdiscError):
    """A fixed-point iteration exceeded its configured cap."""


class UncertifiedResultError(FrobdiscError):
    """A result could not be certified within the configured bounds.

    Raised e.g. when a multiplier-ideal generator frontier touches the
    enumeration cap.  Mapped to exit code 3 by the CLI.
    """
