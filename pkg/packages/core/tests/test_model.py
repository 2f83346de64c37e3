"""Tests for the LPCC instance model."""

import numpy as np
import pytest

from lpcc_core.exceptions import DimensionError, InvalidProblemError, ValidationError
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


@pytest.fixture
def scalar_problem():
    """min -y, 0 <= y <= 4, g = 10 - 2y."""
    return MpecProblem(
        n_x=0,
        n_y=1,
        objective=AffineExpr([], [-1.0]),
        g=(AffineExpr([], [-2.0], 10.0),),
        upper_y=[4.0],
        name="scalar",
    )


@pytest.fixture
def two_by_two():
    """x in R^2, y in R^2 with one equality row x1 + x2 = 3."""
    row = LinearConstraint(AffineExpr.from_terms(2, 2, x={0: 1.0, 1: 1.0}, constant=-3.0), "=")
    return MpecProblem(
        n_x=2,
        n_y=2,
        objective=AffineExpr.from_terms(2, 2, x={0: 1.0}, y={1: 2.0}, constant=1.0),
        g=(
            AffineExpr.from_terms(2, 2, x={0: 1.0}),
            AffineExpr.from_terms(2, 2, x={1: -1.0}, constant=5.0),
        ),
        omega=(row,),
    )


class TestAffineExpr:
    """Tests for AffineExpr."""

    def test_from_terms(self):
        expr = AffineExpr.from_terms(2, 1, x={0: -1.0, 1: -1.0}, constant=10.0)
        assert expr.evaluate(np.array([3.0, 4.0]), np.array([7.0])) == pytest.approx(3.0)
        assert list(expr.coeffs) == [-1.0, -1.0, 0.0]

    def test_immutable_coefficients(self):
        expr = AffineExpr([1.0], [2.0])
        with pytest.raises(ValueError):
            expr.coeffs_x[0] = 5.0

    def test_rejects_nan(self):
        with pytest.raises(InvalidProblemError):
            AffineExpr([np.nan], [])

    def test_rejects_infinite_constant(self):
        with pytest.raises(InvalidProblemError):
            AffineExpr([1.0], [], np.inf)

    def test_arithmetic(self):
        a = AffineExpr([1.0], [2.0], 3.0)
        b = AffineExpr([0.5], [-1.0], 1.0)
        assert (a + b).isclose(AffineExpr([1.5], [1.0], 4.0))
        assert (a - b).isclose(AffineExpr([0.5], [3.0], 2.0))
        assert a.scaled(2.0).isclose(AffineExpr([2.0], [4.0], 6.0))


class TestLinearConstraint:
    """Tests for LinearConstraint."""

    def test_relation_coerced(self):
        row = LinearConstraint(AffineExpr([1.0], []), "<=")
        assert row.relation is Relation.LE

    def test_unknown_relation_rejected(self):
        with pytest.raises(ValueError):
            LinearConstraint(AffineExpr([1.0], []), "<")

    @pytest.mark.parametrize(
        "relation,value,expected",
        [("<=", 2.0, 2.0), ("<=", -2.0, 0.0), (">=", -2.0, 2.0), ("=", -2.0, 2.0)],
    )
    def test_violation(self, relation, value, expected):
        row = LinearConstraint(AffineExpr([1.0], []), relation)
        assert row.violation(np.array([value]), np.array([])) == expected


class TestMpecProblem:
    """Tests for MpecProblem construction."""

    def test_default_bounds_and_names(self, two_by_two):
        assert list(two_by_two.lower) == [0.0, 0.0, 0.0, 0.0]
        assert np.isposinf(two_by_two.upper).all()
        assert two_by_two.names == ("x1", "x2", "y1", "y2")

    def test_g_count_must_match(self):
        with pytest.raises(InvalidProblemError, match="expected n_y=2"):
            MpecProblem(n_x=0, n_y=2, objective=AffineExpr([], [0.0, 0.0]), g=(AffineExpr([], [0.0, 0.0]),))

    def test_crossed_bounds_rejected(self):
        with pytest.raises(InvalidProblemError, match="lower <= upper"):
            MpecProblem(
                n_x=1,
                n_y=0,
                objective=AffineExpr([1.0], []),
                g=(),
                lower_x=[2.0],
                upper_x=[1.0],
            )

    def test_expression_dimensions_checked(self):
        with pytest.raises(InvalidProblemError, match="g\\[0\\]"):
            MpecProblem(n_x=1, n_y=1, objective=AffineExpr([0.0], [0.0]), g=(AffineExpr([], [1.0]),))

    def test_duplicate_names_rejected(self):
        with pytest.raises(InvalidProblemError, match="unique"):
            MpecProblem(
                n_x=1,
                n_y=1,
                objective=AffineExpr([0.0], [0.0]),
                g=(AffineExpr([0.0], [1.0]),),
                x_names=("a",),
                y_names=("a",),
            )

    def test_params_read_only(self):
        p = MpecProblem(n_x=0, n_y=0, objective=AffineExpr([], []), g=(), params={"K": 10.0})
        with pytest.raises(TypeError):
            p.params["K"] = 1.0

    def test_g_matrix(self, two_by_two):
        matrix, constants = two_by_two.g_matrix()
        assert matrix.shape == (2, 4)
        assert list(constants) == [0.0, 5.0]


class TestEvaluation:
    """Tests for eval_f, eval_g, eval_fpen."""

    def test_eval_f_zero_problem(self):
        p = MpecProblem(n_x=2, n_y=1, objective=AffineExpr.zeros(2, 1), g=(AffineExpr.zeros(2, 1),))
        assert eval_f(p, Point([3.0, -1.0], [7.0])) == 0.0

    def test_eval_g_scalar(self, scalar_problem):
        """g = 10 - 2y at y = 4 is 2."""
        assert list(eval_g(scalar_problem, Point([], [4.0]))) == [2.0]

    def test_eval_fpen_scalar(self, scalar_problem):
        assert eval_fpen(scalar_problem, Point([], [4.0])) == pytest.approx(3.0)

    def test_eval_fpen_zero_case(self, two_by_two):
        """y = 0 and g = 0 gives a zero penalty."""
        pt = Point([0.0, 5.0], [0.0, 0.0])
        assert list(eval_g(two_by_two, pt)) == [0.0, 0.0]
        assert eval_fpen(two_by_two, pt) == 0.0

    def test_weighted_value(self, scalar_problem):
        pt = Point([], [4.0])
        assert weighted_value(scalar_problem, pt, 2.0) == pytest.approx(-4.0 + 2.0 * 3.0)

    def test_dimension_mismatch(self, two_by_two):
        with pytest.raises(DimensionError) as exc:
            eval_f(two_by_two, Point([1.0], [0.0, 0.0]))
        assert exc.value.expected == 2
        assert exc.value.actual == 1

    def test_point_rejects_nonfinite(self):
        with pytest.raises(ValidationError):
            Point([np.inf], [])

    def test_point_vector_split(self):
        pt = Point.from_vector(np.array([1.0, 2.0, 3.0]), 2)
        assert list(pt.x) == [1.0, 2.0]
        assert list(pt.y) == [3.0]
        assert list(pt.as_vector()) == [1.0, 2.0, 3.0]


class TestPenaltyProperties:
    """Penalty term properties on random points."""

    def test_penalty_expr_matches_eval(self, two_by_two):
        rng = np.random.default_rng(7)
        expr = penalty_expr(two_by_two)
        for _ in range(50):
            pt = Point(rng.uniform(0, 5, 2), rng.uniform(0, 5, 2))
            assert expr.evaluate(pt.x, pt.y) == pytest.approx(eval_fpen(two_by_two, pt))

    def test_penalty_nonnegative_on_gamma(self, two_by_two):
        """eval_fpen >= 0 whenever y >= 0 and g >= 0."""
        rng = np.random.default_rng(11)
        checked = 0
        for _ in range(200):
            pt = Point(rng.uniform(0, 5, 2), rng.uniform(0, 5, 2))
            if (eval_g(two_by_two, pt) >= 0).all():
                assert eval_fpen(two_by_two, pt) >= 0
                checked += 1
        assert checked > 0

    def test_affinity(self, two_by_two):
        """Finite-difference slopes of f and g are constant."""
        rng = np.random.default_rng(3)
        base = rng.uniform(0, 5, 4)
        for k in range(4):
            slopes = []
            for h in (0.5, 1.0, 2.0):
                z = base.copy()
                z[k] += h
                lo = Point.from_vector(base, 2)
                hi = Point.from_vector(z, 2)
                slopes.append((eval_f(two_by_two, hi) - eval_f(two_by_two, lo)) / h)
            assert np.ptp(slopes) < 1e-12


class TestIsFeasible:
    """Tests for membership in Gamma."""

    def test_bound_violation(self, scalar_problem):
        assert is_feasible(scalar_problem, Point([], [5.0]), 1e-9) is False

    def test_inside(self, scalar_problem):
        assert is_feasible(scalar_problem, Point([], [4.0]), 1e-9) is True

    def test_equality_off_by_ten_tol(self, two_by_two):
        tol = 1e-9
        assert is_feasible(two_by_two, Point([1.0, 2.0], [0.0, 0.0]), tol)
        assert not is_feasible(two_by_two, Point([1.0, 2.0 + 10 * tol], [0.0, 0.0]), tol)

    def test_negative_g(self):
        p = MpecProblem(n_x=0, n_y=1, objective=AffineExpr([], [-1.0]), g=(AffineExpr([], [-2.0], 10.0),))
        assert is_feasible(p, Point([], [5.0]), 1e-9)
        assert not is_feasible(p, Point([], [5.1]), 1e-9)

    def test_rejects_nonpositive_tol(self, scalar_problem):
        with pytest.raises(ValidationError):
            is_feasible(scalar_problem, Point([], [1.0]), 0.0)

    def test_default_tol(self, scalar_problem):
        assert is_feasible(scalar_problem, Point([], [4.0 + 1e-12]))


class TestStackRows:
    """Tests for stack_rows."""

    def test_rhs_is_negated_constant(self, two_by_two):
        matrix, relations, rhs = stack_rows(two_by_two, two_by_two.omega)
        assert matrix.tolist() == [[1.0, 1.0, 0.0, 0.0]]
        assert relations == [Relation.EQ]
        assert list(rhs) == [3.0]

    def test_empty(self, scalar_problem):
        matrix, relations, rhs = stack_rows(scalar_problem, ())
        assert matrix.shape == (0, 1)
        assert relations == []
        assert rhs.size == 0
