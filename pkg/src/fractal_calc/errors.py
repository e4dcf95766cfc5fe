"""Exception hierarchy shared by every module."""


class FractalCalcError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(FractalCalcError, ValueError):
    """Gamma evaluated at zero or a negative integer."""


class OrderError(FractalCalcError, ValueError):
    """Fractal order outside (0, 1], or operands of different orders."""


class NonConvergenceError(FractalCalcError, ArithmeticError):
    """A truncated series exhausted its term budget before meeting its tolerance."""


class BranchCutError(FractalCalcError, ValueError):
    """A path touches or crosses the principal branch cut of z**alpha."""


class DomainError(FractalCalcError, ValueError):
    """Argument outside the domain on which an operation is defined."""


class UnsupportedNodeError(FractalCalcError, TypeError):
    """An expression node has no rule for the requested operation."""


class DivergenceError(FractalCalcError, ArithmeticError):
    """A refinement sequence grows instead of converging.

    The ``diagnostics`` attribute carries the record of the sequence that
    triggered the finding.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class ParseError(FractalCalcError, ValueError):
    """Syntax error in an expression or series literal."""

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f", expected {' or '.join(repr(e) for e in self.expected)}"
        super().__init__(detail)
