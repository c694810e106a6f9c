"""Exception types shared across the library."""


class WcitError(Exception):
    """Base class for all errors raised by this library."""


class FieldMismatchError(WcitError):
    """Operands belong to different coefficient fields."""


class TableMismatchError(WcitError):
    """Polynomials over different variable tables were combined."""


class ParseError(WcitError):
    """A polynomial expression failed to parse.

    Carries the 1-based line and column of the offending token.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class CertificationError(WcitError):
    """A geometric certification (smoothness, regularity, degree) failed."""
