"""Exception types shared across the library."""


class CDAlgebraError(Exception):
    """Base class for every error raised by this library."""


class InvalidParameterError(CDAlgebraError, ValueError):
    pass


class ScalarModeError(CDAlgebraError, TypeError):
    """A scalar of the wrong mode (exact vs float) entered a computation."""


class IncompatibleAlgebrasError(CDAlgebraError, ValueError):
    """Operands belong to different algebras."""


class NotInvertibleError(CDAlgebraError, ZeroDivisionError):
    pass


class InternalConsistencyError(CDAlgebraError, ArithmeticError):
    """A value that must be scalar (or central) came out otherwise.

    Signals a broken multiplication or conjugation, not bad user input.
    """


class ZeroPolynomialError(CDAlgebraError, ValueError):
    pass


class UnsupportedAlgebraError(CDAlgebraError, ValueError):
    """The requested operation is gated to division-certified algebras."""
