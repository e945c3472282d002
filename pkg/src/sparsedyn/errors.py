"""Exception types shared across the package.

Each class maps to one CLI error category (see :mod:`sparsedyn.cli`), so
scripted callers can branch on the exit code instead of parsing messages.
"""


class SparseDynError(Exception):
    """Base class for all package errors."""

    category = "internal"


class ConfigurationError(SparseDynError):
    """Bad experiment or benchmark configuration (unknown system, bad field)."""

    category = "config"


class ArgumentError(SparseDynError, ValueError):
    """Invalid argument value (negative sigma, empty grid, bad bracket)."""

    category = "argument"


class SizeError(SparseDynError, ValueError):
    """Input too small or would become empty (m < 4, dropping all columns)."""

    category = "size"


class IntegrationError(SparseDynError):
    """State blow-up or non-finite value during time integration."""

    category = "integration"

    def __init__(self, message: str, t_fail: float | None = None):
        super().__init__(message)
        self.t_fail = t_fail


class CoverageError(SparseDynError):
    """Trajectory does not cover a required time interval."""

    category = "coverage"

    def __init__(self, message: str, missing: tuple[float, float] | None = None):
        super().__init__(message)
        self.missing = missing


class EvaluationError(SparseDynError):
    """Non-finite value produced while evaluating basis functions."""

    category = "evaluation"

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


class SolverError(SparseDynError):
    """Convex solve failed to reach its optimality tolerance."""

    category = "solver"

    def __init__(self, message: str, best=None, residual: float | None = None):
        super().__init__(message)
        self.best = best
        self.residual = residual


class LinearAlgebraError(SparseDynError):
    """Singular or numerically unusable linear system."""

    category = "linalg"


class RankError(SparseDynError, ValueError):
    """Requested factorization rank is not achievable."""

    category = "rank"


class DegenerateInputError(SparseDynError, ValueError):
    """Geometrically degenerate input (coincident curve points)."""

    category = "degenerate"


class NoCornerError(SparseDynError):
    """No positive-curvature corner found in the search bracket."""

    category = "nocorner"


class ExportError(SparseDynError):
    """I/O failure while writing report files; message carries the path."""

    category = "io"
