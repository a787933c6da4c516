"""Exception taxonomy shared by the whole package."""


class LiecohError(Exception):
    """Base class for every error raised by liecoh."""


class ShapeError(LiecohError):
    """Matrix or vector dimensions do not fit the requested operation."""


class MalformedInputError(LiecohError):
    """Structurally invalid input (bad indices, inconsistent sizes)."""


class ConstraintError(LiecohError):
    """A mathematical precondition on the input data is violated."""


class DomainError(LiecohError):
    """Objects do not belong together (wrong algebra, wrong module)."""


class RepresentationError(LiecohError):
    """A claimed representation fails the homomorphism law."""


class PreconditionError(LiecohError):
    """A named precondition of a check is not satisfied."""


class ResourceLimitError(LiecohError):
    """A computation would exceed the configured size ceiling."""


class InternalCheckError(LiecohError):
    """An internal invariant failed; indicates a bug, must abort."""


class UnknownNameError(LiecohError, LookupError):
    """Lookup of a named catalog entry or module failed."""


class ParseError(LiecohError):
    """A document could not be parsed; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
