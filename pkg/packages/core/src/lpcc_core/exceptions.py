"""LPCC suite exceptions."""


class LPCCError(Exception):
    """Base exception for all LPCC suite errors."""

    def __init__(self, message: str, cause: Exception | None = None):
        super().__init__(message)
        self.message = message
        self.cause = cause


class ValidationError(LPCCError):
    """Input validation error."""

    def __init__(self, field: str, message: str):
        super().__init__(f"Validation error on {field}: {message}")
        self.field = field


class DimensionError(ValidationError):
    """Vector length does not match the owning problem."""

    def __init__(self, field: str, expected: int, actual: int):
        super().__init__(field, f"expected length {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class InvalidProblemError(LPCCError):
    """Malformed problem or LP data (NaN entries, crossed bounds, ...)."""

    pass


class SolverError(LPCCError):
    """A solve did not produce an optimal solution."""

    def __init__(self, message: str, stage: str, cause: Exception | None = None):
        super().__init__(message, cause)
        self.stage = stage


class InfeasibleError(SolverError):
    """The problem has no feasible point."""

    def __init__(self, stage: str, detail: str = "problem is infeasible"):
        super().__init__(f"{stage}: {detail}", stage=stage)


class UnboundedError(SolverError):
    """The objective is unbounded below on the feasible set."""

    def __init__(self, stage: str, detail: str = "objective is unbounded"):
        super().__init__(f"{stage}: {detail}", stage=stage)


class IterationLimitError(SolverError):
    """Pivot cap reached before optimality was proven."""

    def __init__(self, stage: str, iterations: int):
        super().__init__(f"{stage}: iteration limit reached after {iterations} pivots", stage)
        self.iterations = iterations


class NumericalError(SolverError):
    """Floating point breakdown inside a solve."""

    pass


class EnumerationLimitError(LPCCError):
    """Too many complementarity pairs for full disposition enumeration."""

    def __init__(self, n_y: int, limit: int):
        super().__init__(
            f"{n_y} complementarity pairs exceed the enumeration guard of {limit}: "
            "use a branching order, this instance is not desk scale"
        )
        self.n_y = n_y
        self.limit = limit


class ParseError(LPCCError):
    """Problem file syntax or semantic error with a source location."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class OracleError(LPCCError):
    """Grid oracle errors."""

    pass


class InfeasibleGridError(OracleError):
    """No grid point passed the feasibility test."""

    def __init__(self, points: int):
        super().__init__(f"infeasible at resolution: none of {points} grid points is feasible")
        self.points = points


class GridTooLargeError(OracleError):
    """Requested grid exceeds the configured size cap."""

    def __init__(self, size: int, limit: int):
        super().__init__(f"grid of {size} points exceeds the limit of {limit}")
        self.size = size
        self.limit = limit


class ConfigurationError(LPCCError):
    """Configuration error."""

    pass
