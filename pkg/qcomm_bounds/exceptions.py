"""Error hierarchy shared by the numerical modules and mapped to exit codes by the CLI."""


class QCommError(Exception):
    """Base class for every error raised by qcomm_bounds."""


class DimensionMismatchError(QCommError, ValueError):
    """Operands do not share a dimension."""


class NonHermitianError(QCommError, ValueError):
    """Eigensolver input is not Hermitian within tolerance."""


class ConvergenceError(QCommError, ArithmeticError):
    """Eigensolver did not converge."""
    def __init__(self, message: str, iterations: int | None = None):
        super().__init__(message)
        self.iterations = iterations


class RegimeError(QCommError, ValueError):
    """A closed-form bound was evaluated outside its q or n range."""


class ZeroMatrixError(QCommError, ValueError):
    """A ratio was requested for a (numerically) zero matrix."""


class DegenerateOperatorError(QCommError, ArithmeticError):
    """A half-step operator vanished, so no ascent direction exists."""


class OptimizerError(QCommError):
    """Failure inside one restart of the ratio maximization."""
    def __init__(self, message: str, q: float, n: int, restart_index: int):
        super().__init__(f'{message} (n={n}, q={q!r}, restart={restart_index})')
        self.q = q
        self.n = n
        self.restart_index = restart_index
