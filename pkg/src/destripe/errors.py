"""Exception hierarchy.

Every error raised by this package derives from DestripeError, so callers
can catch one type. The CLI maps subclasses onto its exit-code contract
(2 = bad flags, 3 = I/O, 4 = numerical divergence).
"""


class DestripeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(DestripeError, ValueError):
    """An argument violates a documented precondition."""


class ShapeMismatchError(DestripeError, ValueError):
    """Arrays that must share a shape do not."""


class HermitianSymmetryError(DestripeError, ValueError):
    """A spectrum is not conjugate-symmetric, so its inverse is not real."""


class DegenerateCaseError(DestripeError, ValueError):
    """The requested quantity is undefined for this input (e.g. 0/0)."""


class DivergenceError(DestripeError, RuntimeError):
    """Non-finite values appeared during iteration."""

    def __init__(self, iteration: int, message: str = ""):
        self.iteration = iteration
        super().__init__(
            message or f"non-finite values at outer iteration {iteration}"
        )


class UnsupportedFormatError(DestripeError, ValueError):
    """The image file uses a format or mode this package does not handle."""


class CorruptFileError(DestripeError, ValueError):
    """The image file is inconsistent with its declared layout."""
