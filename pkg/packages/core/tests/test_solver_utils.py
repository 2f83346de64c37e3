"""Tests for solver utilities."""

import numpy as np
import pytest

from lpcc_core.exceptions import (
    InfeasibleError,
    NumericalError,
    UnboundedError,
    ValidationError,
)
from lpcc_core.simplex import SolveResult, SolveStatus
from lpcc_core.solver_utils import map_status_error, require_optimal, solver_call


class TestMapStatusError:
    """Tests for map_status_error function."""

    def test_map_infeasible(self):
        """Infeasible results map to InfeasibleError."""
        result = map_status_error(SolveResult(SolveStatus.INFEASIBLE), "lexmin stage 1")

        assert isinstance(result, InfeasibleError)
        assert result.stage == "lexmin stage 1"

    def test_map_unbounded(self):
        """Unbounded results map to UnboundedError."""
        result = map_status_error(SolveResult(SolveStatus.UNBOUNDED), "penalty L=1")

        assert isinstance(result, UnboundedError)
        assert "penalty L=1" in str(result)


class TestRequireOptimal:
    """Tests for require_optimal."""

    def test_passes_optimal_through(self):
        result = SolveResult(SolveStatus.OPTIMAL, x=np.zeros(1), objective=0.0)
        assert require_optimal(result, "stage") is result

    def test_raises_on_infeasible(self):
        with pytest.raises(InfeasibleError):
            require_optimal(SolveResult(SolveStatus.INFEASIBLE), "stage")


class TestSolverCall:
    """Tests for the solver_call decorator."""

    def test_success_returns_value(self):
        @solver_call("test")
        def compute():
            return 42

        assert compute() == 42

    def test_floating_point_error_wrapped(self):
        """numpy floating point errors become NumericalError."""

        @solver_call("test")
        def compute():
            with np.errstate(divide="raise"):
                return np.array([1.0]) / np.array([0.0])

        with pytest.raises(NumericalError) as exc:
            compute()
        assert exc.value.stage == "test"
        assert isinstance(exc.value.cause, FloatingPointError)

    def test_linalg_error_wrapped(self):
        @solver_call("test")
        def compute():
            return np.linalg.inv(np.zeros((2, 2)))

        with pytest.raises(NumericalError):
            compute()

    def test_domain_errors_pass_through(self):
        @solver_call("test")
        def compute():
            raise ValidationError("L", "must be nonnegative")

        with pytest.raises(ValidationError):
            compute()

    def test_preserves_function_name(self):
        @solver_call("test")
        def my_solver():
            pass

        assert my_solver.__name__ == "my_solver"
