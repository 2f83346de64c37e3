"""Tests for LPCC suite exceptions."""

from lpcc_core.exceptions import (
    DimensionError,
    EnumerationLimitError,
    GridTooLargeError,
    InfeasibleError,
    InfeasibleGridError,
    IterationLimitError,
    LPCCError,
    NumericalError,
    OracleError,
    ParseError,
    SolverError,
    UnboundedError,
    ValidationError,
)


class TestLPCCError:
    """Tests for base LPCCError."""

    def test_basic_error(self):
        """Test creating a basic error."""
        error = LPCCError("Something went wrong")
        assert str(error) == "Something went wrong"
        assert error.message == "Something went wrong"
        assert error.cause is None

    def test_error_with_cause(self):
        """Test error with underlying cause."""
        cause = ValueError("original error")
        error = LPCCError("Wrapped error", cause=cause)
        assert error.cause is cause


class TestValidationErrors:
    """Tests for argument validation exceptions."""

    def test_validation_error(self):
        error = ValidationError("L", "must be nonnegative")
        assert error.field == "L"
        assert "must be nonnegative" in str(error)
        assert isinstance(error, LPCCError)

    def test_dimension_error(self):
        """DimensionError is a ValidationError carrying both lengths."""
        error = DimensionError("x", expected=7, actual=3)
        assert isinstance(error, ValidationError)
        assert error.expected == 7
        assert error.actual == 3
        assert "expected length 7, got 3" in str(error)


class TestSolverErrors:
    """Tests for solver exceptions."""

    def test_infeasible_names_stage(self):
        error = InfeasibleError("lexmin stage 1", "empty feasible set")
        assert error.stage == "lexmin stage 1"
        assert str(error) == "lexmin stage 1: empty feasible set"
        assert isinstance(error, SolverError)

    def test_unbounded_default_detail(self):
        error = UnboundedError("penalty L=0.4")
        assert "unbounded" in str(error)

    def test_iteration_limit(self):
        error = IterationLimitError("simplex", 500)
        assert error.iterations == 500
        assert "500" in str(error)

    def test_numerical_error_keeps_cause(self):
        cause = FloatingPointError("overflow")
        error = NumericalError("simplex: numerical failure", "simplex", cause=cause)
        assert error.cause is cause
        assert error.stage == "simplex"


class TestOtherErrors:
    """Tests for enumeration, parse and oracle exceptions."""

    def test_enumeration_limit_message(self):
        """The guard message points at a branching order."""
        error = EnumerationLimitError(25, 20)
        assert error.n_y == 25
        assert error.limit == 20
        assert "not desk scale" in str(error)
        assert "branching order" in str(error)

    def test_parse_error_location(self):
        error = ParseError("unknown variable 'x9'", line=4, column=12)
        assert str(error) == "4:12: unknown variable 'x9'"
        assert error.line == 4
        assert error.column == 12

    def test_infeasible_grid(self):
        error = InfeasibleGridError(1331)
        assert "infeasible at resolution" in str(error)
        assert isinstance(error, OracleError)

    def test_grid_too_large(self):
        error = GridTooLargeError(10**8, 10**7)
        assert error.size == 10**8
        assert error.limit == 10**7
