"""Solver utilities for consistent error handling."""

import logging
from collections.abc import Callable
from functools import wraps
from typing import TYPE_CHECKING, TypeVar

import numpy as np

from lpcc_core.exceptions import (
    InfeasibleError,
    NumericalError,
    SolverError,
    UnboundedError,
)

if TYPE_CHECKING:
    from lpcc_core.simplex import SolveResult

logger = logging.getLogger(__name__)

T = TypeVar("T")


def map_status_error(result: "SolveResult", stage: str) -> SolverError:
    """
    Map a non-optimal SolveResult to a domain exception.

    Args:
        result: Result of a solve that did not reach optimality
        stage: Name of the calling stage, used in the message

    Returns:
        Appropriate SolverError subclass
    """
    # Import here to avoid circular imports
    from lpcc_core.simplex import SolveStatus

    if result.status is SolveStatus.INFEASIBLE:
        return InfeasibleError(stage)
    if result.status is SolveStatus.UNBOUNDED:
        return UnboundedError(stage)
    return SolverError(f"{stage}: unexpected status {result.status.value}", stage)


def require_optimal(result: "SolveResult", stage: str) -> "SolveResult":
    """Return result unchanged if optimal, raise the mapped error otherwise."""
    if not result.is_optimal:
        raise map_status_error(result, stage)
    return result


def solver_call(stage: str) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """
    Decorator turning floating point breakdowns into NumericalError.

    Domain errors (LPCCError subclasses) pass through untouched.

    Example:
        @solver_call("simplex")
        def solve_lp(lp: LinearProgram) -> SolveResult:
            ...
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @wraps(func)
        def wrapper(*args, **kwargs) -> T:
            logger.debug(f"{stage}: calling {func.__name__}")
            try:
                return func(*args, **kwargs)
            except (FloatingPointError, np.linalg.LinAlgError, ZeroDivisionError) as e:
                logger.error(f"{stage}: numerical failure: {e}")
                raise NumericalError(f"{stage}: numerical failure ({e})", stage, cause=e)

        return wrapper

    return decorator
