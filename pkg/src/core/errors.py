class QmonoError(Exception):
    """Base class of every error raised by the package."""


class ArgumentError(QmonoError, ValueError):
    pass


class NotAdmissibleError(ArgumentError):
    """The oriented line contains a Stokes ray R_rs."""

    def __init__(self, r: int, s: int, msg: str = ""):
        self.pair = (r, s)
        super().__init__(msg or f"line is not admissible: it contains the Stokes ray R_{r}{s}")


class SingularMatrixError(QmonoError, ArithmeticError):
    pass


class NilpotencyError(QmonoError, ArithmeticError):
    pass


class DimensionMismatchError(ArgumentError):
    pass


class FixtureError(QmonoError):
    pass
