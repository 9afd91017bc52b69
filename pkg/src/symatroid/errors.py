"""Exception hierarchy shared by every module.

The CLI reports validation failures by class name, so keep names stable.
"""


class SymatroidError(ValueError):
    """Base class for validation errors raised by the library."""


class FieldError(SymatroidError):
    pass


class ShapeMismatch(SymatroidError):
    pass


class IndexOutOfRange(SymatroidError):
    pass


class CapExceeded(SymatroidError):
    pass


class NotIsotropic(SymatroidError):
    pass


class DependentRows(SymatroidError):
    pass


class TooManyRows(SymatroidError):
    pass


class XZtNonzero(SymatroidError):
    pass


class ZeroTorusEntry(SymatroidError):
    pass


class NotAdmissible(SymatroidError):
    pass


class InvalidMatroid(SymatroidError):
    """Bases collection violates a structural invariant (empty, ragged, ...)."""


class OracleTooLarge(SymatroidError):
    pass


class NotLagrangian(SymatroidError):
    pass


class NoBasisContains(SymatroidError):
    pass


class NotAMatroid(SymatroidError):
    pass


class InvalidGraph(SymatroidError):
    pass


class InvalidLabeling(SymatroidError):
    pass


class Degenerate(SymatroidError):
    pass


class NotIdenticallySelfDual(SymatroidError):
    pass


class FormatError(SymatroidError):
    """Ill-formed input text; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
