"""LPCC Core - Problem model, LP solver, config and errors."""

__version__ = "0.1.0"

from lpcc_core.config import Settings, get_settings
from lpcc_core.exceptions import (
    ConfigurationError,
    DimensionError,
    EnumerationLimitError,
    GridTooLargeError,
    InfeasibleError,
    InfeasibleGridError,
    InvalidProblemError,
    IterationLimitError,
    LPCCError,
    NumericalError,
    OracleError,
    ParseError,
    SolverError,
    UnboundedError,
    ValidationError,
)
from lpcc_core.model import (
    AffineExpr,
    LinearConstraint,
    MpecProblem,
    Point,
    Relation,
    eval_f,
    eval_fpen,
    eval_g,
    is_feasible,
    penalty_expr,
    stack_rows,
    weighted_value,
)
from lpcc_core.simplex import (
    LinearProgram,
    SolveResult,
    SolveStatus,
    solve_lp,
    solve_lp_with_fixed,
)
from lpcc_core.solver_utils import map_status_error, require_optimal, solver_call

__all__ = [
    # Config
    "Settings",
    "get_settings",
    # Model
    "AffineExpr",
    "LinearConstraint",
    "MpecProblem",
    "Point",
    "Relation",
    "eval_f",
    "eval_fpen",
    "eval_g",
    "is_feasible",
    "penalty_expr",
    "stack_rows",
    "weighted_value",
    # Simplex
    "LinearProgram",
    "SolveResult",
    "SolveStatus",
    "solve_lp",
    "solve_lp_with_fixed",
    # Solver utils
    "map_status_error",
    "require_optimal",
    "solver_call",
    # Exceptions
    "LPCCError",
    "ValidationError",
    "DimensionError",
    "InvalidProblemError",
    "SolverError",
    "InfeasibleError",
    "UnboundedError",
    "IterationLimitError",
    "NumericalError",
    "EnumerationLimitError",
    "ParseError",
    "OracleError",
    "InfeasibleGridError",
    "GridTooLargeError",
    "ConfigurationError",
]
