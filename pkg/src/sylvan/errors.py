"""Exception hierarchy shared by every sylvan module."""


class SylvanError(Exception):
    """Base class for all errors raised by sylvan."""


class NonSquare(SylvanError, ValueError):
    pass


class DimensionMismatch(SylvanError, ValueError):
    pass


class InvalidSpec(SylvanError, ValueError):
    pass


class ZeroMatrix(SylvanError, ValueError):
    pass


class EigFailure(SylvanError, ArithmeticError):
    pass


class SpectraOverlap(SylvanError, ArithmeticError):
    """The spectra of A and B are not separated (delta is zero up to tolerance)."""


class DegenerateSpectrum(SylvanError, ValueError):
    pass


class DomainInvalid(SylvanError, AssertionError):
    """A grid domain failed one of its containment or length checks.

    ``check`` names the first violated condition.
    """

    def __init__(self, check, message):
        super().__init__(f"{check}: {message}")
        self.check = check


class NodeSingular(SylvanError, ArithmeticError):
    pass


class ResolventSingular(SylvanError, ArithmeticError):
    pass


class QuadratureNotConverged(SylvanError, ArithmeticError):
    """Raised when ``q_max`` is reached; ``report`` holds the best iterate."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotNormal(SylvanError, ValueError):
    pass


class NonFiniteH(SylvanError, ArithmeticError):
    pass


class SingularSystem(SylvanError, ArithmeticError):
    pass


class SizeGuard(SylvanError, ValueError):
    pass
