"""Tests for the bounded two-phase simplex."""

import numpy as np
import pytest

from lpcc_core.config import Settings
from lpcc_core.exceptions import InvalidProblemError, IterationLimitError, ValidationError
from lpcc_core.model import Relation
from lpcc_core.simplex import LinearProgram, SolveStatus, solve_lp, solve_lp_with_fixed

INF = np.inf


def make_lp(cost, matrix, relations, rhs, lower=None, upper=None, **kwargs):
    n = len(cost)
    return LinearProgram(
        cost=np.array(cost, dtype=float),
        matrix=np.array(matrix, dtype=float).reshape(-1, n),
        relations=tuple(Relation(r) for r in relations),
        rhs=np.array(rhs, dtype=float),
        lower=np.zeros(n) if lower is None else np.array(lower, dtype=float),
        upper=np.full(n, INF) if upper is None else np.array(upper, dtype=float),
        **kwargs,
    )


@pytest.fixture
def beale():
    """Beale's cycling example: Dantzig's rule with naive ties cycles here."""
    return make_lp(
        [-0.75, 20.0, -0.5, 6.0],
        [[0.25, -8.0, -1.0, 9.0], [0.5, -12.0, -0.5, 3.0], [0.0, 0.0, 1.0, 0.0]],
        ["<=", "<=", "<="],
        [0.0, 0.0, 1.0],
        name="beale",
    )


class TestLinearProgram:
    """Tests for LinearProgram validation."""

    def test_rejects_nan_cost(self):
        with pytest.raises(InvalidProblemError, match="cost"):
            make_lp([np.nan], [], [], [])

    def test_rejects_infinite_rhs(self):
        with pytest.raises(InvalidProblemError, match="rhs"):
            make_lp([1.0], [[1.0]], ["<="], [INF])

    def test_rejects_crossed_bounds(self):
        with pytest.raises(InvalidProblemError, match="lower <= upper"):
            make_lp([1.0], [], [], [], lower=[2.0], upper=[1.0])

    def test_rejects_shape_mismatch(self):
        with pytest.raises(InvalidProblemError):
            make_lp([1.0, 1.0], [[1.0, 1.0]], ["<=", "<="], [1.0])

    def test_default_names(self):
        lp = make_lp([1.0, 2.0], [], [], [])
        assert lp.names == ("v1", "v2")
        assert lp.index_of("v2") == 1

    def test_unknown_name(self):
        lp = make_lp([1.0], [], [], [])
        with pytest.raises(ValidationError):
            lp.index_of("z")

    def test_with_rows_appends(self):
        lp = make_lp([1.0, 1.0], [[1.0, 0.0]], [">="], [1.0])
        bigger = lp.with_rows(np.array([[0.0, 1.0]]), [Relation.EQ], [2.0])
        assert bigger.n_rows == 2
        assert lp.n_rows == 1

    def test_residual(self):
        lp = make_lp([0.0], [[1.0]], ["="], [2.0], upper=[5.0])
        assert lp.residual(np.array([2.5])) == pytest.approx(0.5)
        assert lp.residual(np.array([6.0])) == pytest.approx(4.0)


class TestSolveLp:
    """Tests for solve_lp."""

    def test_single_bounded_variable(self):
        """min -y, 0 <= y <= 4 hits the upper bound with no rows at all."""
        result = solve_lp(make_lp([-1.0], [], [], [], upper=[4.0]))
        assert result.status is SolveStatus.OPTIMAL
        assert result.x[0] == pytest.approx(4.0)
        assert result.objective == pytest.approx(-4.0)

    def test_unbounded(self):
        result = solve_lp(make_lp([-1.0], [], [], []))
        assert result.status is SolveStatus.UNBOUNDED
        assert result.x is None
        assert result.ray is not None and result.ray[0] > 0

    def test_unbounded_ray_is_descent_direction(self):
        lp = make_lp([-1.0, 0.5], [[1.0, -1.0]], ["<="], [2.0])
        result = solve_lp(lp)
        assert result.status is SolveStatus.UNBOUNDED
        ray = result.ray
        assert lp.cost @ ray < 0
        assert lp.matrix[0] @ ray <= 1e-12

    def test_infeasible(self):
        result = solve_lp(make_lp([1.0], [[1.0]], ["<="], [-1.0]))
        assert result.status is SolveStatus.INFEASIBLE
        assert result.objective is None

    def test_infeasible_equalities(self):
        lp = make_lp([0.0, 0.0], [[1.0, 1.0], [1.0, 1.0]], ["=", "="], [1.0, 2.0])
        assert solve_lp(lp).status is SolveStatus.INFEASIBLE

    def test_free_and_mirrored_variables(self):
        """x free, z only bounded above: min x + 2z, x + z >= 3, x - z = 1."""
        lp = make_lp(
            [1.0, 2.0],
            [[1.0, 1.0], [1.0, -1.0]],
            [">=", "="],
            [3.0, 1.0],
            lower=[-INF, -INF],
            upper=[INF, 10.0],
        )
        result = solve_lp(lp)
        assert result.status is SolveStatus.OPTIMAL
        assert result.x == pytest.approx([2.0, 1.0])
        assert result.objective == pytest.approx(4.0)

    def test_shifted_lower_bound(self):
        lp = make_lp([1.0], [[1.0]], ["<="], [10.0], lower=[3.0], upper=[INF])
        result = solve_lp(lp)
        assert result.x[0] == pytest.approx(3.0)

    def test_bound_flips(self):
        lp = make_lp([-1.0, -1.0], [[1.0, 1.0]], ["<="], [1.5], upper=[1.0, 1.0])
        result = solve_lp(lp)
        assert result.objective == pytest.approx(-1.5)

    def test_redundant_equality(self):
        """A duplicated equality leaves an artificial basic at zero."""
        lp = make_lp([1.0, 1.0], [[1.0, 2.0], [1.0, 2.0]], ["=", "="], [4.0, 4.0])
        result = solve_lp(lp)
        assert result.status is SolveStatus.OPTIMAL
        assert result.objective == pytest.approx(2.0)

    def test_constant_carried(self):
        lp = make_lp([1.0], [], [], [], upper=[1.0], constant=5.0)
        assert solve_lp(lp).objective == pytest.approx(5.0)

    def test_degenerate_cycling_instance(self, beale):
        result = solve_lp(beale)
        assert result.status is SolveStatus.OPTIMAL
        assert result.objective == pytest.approx(-1.25)
        assert result.x == pytest.approx([1.0, 0.0, 1.0, 0.0])

    def test_degenerate_instance_with_bland_only(self, beale):
        """bland_factor=0 runs Bland's rule from the first pivot."""
        result = solve_lp(beale, Settings(bland_factor=0))
        assert result.objective == pytest.approx(-1.25)

    def test_iteration_limit(self, beale):
        with pytest.raises(IterationLimitError):
            solve_lp(beale, Settings(max_iterations=1))

    def test_deterministic(self, beale):
        first = solve_lp(beale)
        second = solve_lp(beale)
        assert np.array_equal(first.x, second.x)
        assert first.iterations == second.iterations

    def test_matches_constructed_optimum(self):
        """Random LPs built from KKT conditions reach their known optimum."""
        rng = np.random.default_rng(2024)
        for _ in range(40):
            m, n = rng.integers(2, 6), rng.integers(2, 7)
            A = rng.integers(-4, 5, size=(m, n)).astype(float)
            x_star = np.where(rng.random(n) < 0.5, 0.0, rng.integers(1, 5, n).astype(float))
            active = rng.random(m) < 0.6
            p = np.where(active, rng.integers(1, 4, m), 0).astype(float)
            r = np.where(x_star > 0, 0.0, rng.integers(0, 4, n).astype(float))
            cost = A.T @ p + r
            rhs = A @ x_star - np.where(active, 0.0, 1.0)

            lp = make_lp(cost, A, [">="] * m, rhs)
            result = solve_lp(lp)
            assert result.status is SolveStatus.OPTIMAL
            assert result.objective == pytest.approx(cost @ x_star, abs=1e-6)
            assert lp.residual(result.x) <= 1e-7


class TestSolveLpWithFixed:
    """Tests for solve_lp_with_fixed."""

    def test_fix_to_zero(self):
        lp = make_lp([-1.0], [], [], [], upper=[4.0])
        result = solve_lp_with_fixed(lp, {0: 0.0})
        assert result.status is SolveStatus.OPTIMAL
        assert result.objective == pytest.approx(0.0)

    def test_fix_by_name(self):
        lp = make_lp([1.0, 1.0], [[1.0, 1.0]], [">="], [3.0], names=("a", "b"))
        result = solve_lp_with_fixed(lp, [("a", 2.0)])
        assert result.x == pytest.approx([2.0, 1.0])

    def test_fixing_outside_bounds_is_infeasible(self):
        lp = make_lp([-1.0], [], [], [], upper=[4.0])
        result = solve_lp_with_fixed(lp, {0: 5.0})
        assert result.status is SolveStatus.INFEASIBLE
        assert result.iterations == 0

    def test_fixing_conflicting_with_row(self):
        lp = make_lp([0.0, 0.0], [[1.0, 0.0]], ["="], [3.0])
        assert solve_lp_with_fixed(lp, {0: 0.0}).status is SolveStatus.INFEASIBLE

    def test_original_untouched(self):
        lp = make_lp([-1.0], [], [], [], upper=[4.0])
        solve_lp_with_fixed(lp, {0: 1.0})
        assert lp.upper[0] == 4.0
