"""Tests for the grid-refinement oracle."""

import numpy as np
import pytest

from lpcc_core import (
    AffineExpr,
    GridTooLargeError,
    InfeasibleGridError,
    InvalidProblemError,
    MpecProblem,
    Settings,
    ValidationError,
)
from lpcc_oracle.blackbox import BlackBoxProblem
from lpcc_oracle.grid import brute_force_complementary_min, grid_minimize, scan_grid


def parabola(points):
    """(x - 3)^2 with no constraints."""
    return (points[:, 0] - 3.0) ** 2, np.zeros((len(points), 0))


def never_feasible(points):
    return points[:, 0], np.ones((len(points), 1))


@pytest.fixture
def quadratic():
    return BlackBoxProblem(parabola, [0.0], [10.0], n_x=1, name="quadratic")


class TestBlackBoxProblem:
    """Tests for BlackBoxProblem."""

    def test_default_names(self):
        bb = BlackBoxProblem(parabola, [0.0, 0.0, 0.0], [1.0, 1.0, 1.0], n_x=1)
        assert bb.variable_names == ("x1", "y1", "y2")
        assert bb.dimension == 3

    def test_infinite_box_rejected(self):
        with pytest.raises(InvalidProblemError):
            BlackBoxProblem(parabola, [0.0], [np.inf], n_x=1)

    def test_inverted_box_rejected(self):
        with pytest.raises(InvalidProblemError):
            BlackBoxProblem(parabola, [2.0], [1.0], n_x=1)

    def test_evaluate_one(self, quadratic):
        value, violations = quadratic.evaluate_one(np.array([5.0]))
        assert value == pytest.approx(4.0)
        assert violations.shape == (0,)

    def test_first_criterion_requires_hooks(self, quadratic):
        with pytest.raises(InvalidProblemError):
            quadratic.first_criterion()

    def test_first_criterion(self, ex4):
        """With L = 0 the two objectives coincide."""
        points = np.array([[6.0, 2.0, 2.0], [12.0, 0.0, 0.0]])
        f_only = ex4.first_criterion()
        values, _ = f_only.evaluate(points)
        expected, _ = ex4.evaluate(points)
        assert values == pytest.approx(expected)
        assert f_only.params["L"] == 0.0


class TestScanGrid:
    """Tests for scan_grid."""

    def test_tie_goes_to_first_index(self):
        bb = BlackBoxProblem(lambda pts: (np.zeros(len(pts)), np.zeros((len(pts), 0))), [0.0], [1.0], n_x=1)
        hit = scan_grid(bb, [np.linspace(0.0, 1.0, 5)], 1e-9, chunk=2)
        assert hit.z == pytest.approx([0.0])

    def test_none_when_infeasible(self):
        bb = BlackBoxProblem(never_feasible, [0.0], [1.0], n_x=1)
        assert scan_grid(bb, [np.linspace(0.0, 1.0, 5)], 1e-9, chunk=3) is None


class TestGridMinimize:
    """Tests for grid_minimize."""

    def test_parabola(self, quadratic):
        result = grid_minimize(quadratic)
        assert result.z == pytest.approx([3.0], abs=1e-9)
        assert result.value == pytest.approx(0.0, abs=1e-12)
        assert len(result.history) == 4

    def test_history_never_increases(self):
        bb = BlackBoxProblem(
            lambda pts: ((pts[:, 0] - np.pi) ** 2 + (pts[:, 1] - 1.0 / 3.0) ** 2, np.zeros((len(pts), 0))),
            [0.0, 0.0],
            [5.0, 5.0],
            n_x=1,
        )
        result = grid_minimize(bb, rounds=5, pts_per_axis=21)
        assert all(b <= a for a, b in zip(result.history, result.history[1:]))
        assert result.z == pytest.approx([np.pi, 1.0 / 3.0], abs=1e-3)
        assert result.step < 5.0 / 20

    def test_step_shrinks_with_rounds(self, quadratic):
        one = grid_minimize(quadratic, rounds=1)
        four = grid_minimize(quadratic, rounds=4)
        assert one.step == pytest.approx(0.1)
        assert four.step < one.step

    def test_constraint_respected(self):
        """min x subject to x >= 2.5."""
        bb = BlackBoxProblem(
            lambda pts: (pts[:, 0], np.maximum(2.5 - pts[:, 0], 0.0)[:, None]),
            [0.0],
            [10.0],
            n_x=1,
        )
        result = grid_minimize(bb)
        assert result.z[0] == pytest.approx(2.5, abs=1e-4)
        assert result.z[0] >= 2.5 - 1e-5

    def test_bilinear_instance(self, ex4):
        result = grid_minimize(ex4)
        assert result.z == pytest.approx([6.0, 2.0, 2.0], abs=0.05)
        assert result.value == pytest.approx(-12.0, abs=0.05)

    def test_infeasible(self):
        bb = BlackBoxProblem(never_feasible, [0.0], [1.0], n_x=1)
        with pytest.raises(InfeasibleGridError):
            grid_minimize(bb)

    def test_grid_too_large(self):
        bb = BlackBoxProblem(parabola, np.zeros(4), np.ones(4), n_x=1)
        with pytest.raises(GridTooLargeError):
            grid_minimize(bb)

    def test_bad_arguments(self, quadratic):
        with pytest.raises(ValidationError):
            grid_minimize(quadratic, rounds=0)
        with pytest.raises(ValidationError):
            grid_minimize(quadratic, pts_per_axis=5)

    def test_settings_drive_defaults(self, quadratic):
        result = grid_minimize(quadratic, settings=Settings(oracle_rounds=2, oracle_points=11))
        assert len(result.history) == 2
        assert result.evaluations == 22


class TestBruteForce:
    """Tests for brute_force_complementary_min."""

    def test_scalar_instance(self, ex2):
        result = brute_force_complementary_min(ex2, 11)
        assert result.value == pytest.approx(0.0)
        assert result.point.y == pytest.approx([0.0])

    def test_two_level_instance(self, ex1):
        lower = np.zeros(10)
        upper = np.array([14.0, 6, 6, 6, 6, 6, 6, 6, 2, 2])
        result = brute_force_complementary_min(ex1, 3, box=(lower, upper))
        assert result.value == pytest.approx(0.0)
        assert result.point.x[:2] == pytest.approx([7, 3])
        assert result.point.y[0] == pytest.approx(3.0)

    def test_unbounded_needs_box(self, ex3):
        with pytest.raises(ValidationError):
            brute_force_complementary_min(ex3, 5)

    def test_explicit_tolerance(self):
        """min -y with y <= 1 and g = 1 - y: y = 1 is complementary."""
        p = MpecProblem(
            n_x=0,
            n_y=1,
            objective=AffineExpr([], [-1.0]),
            g=(AffineExpr([], [-1.0], 1.0),),
            upper_y=[1.0],
        )
        result = brute_force_complementary_min(p, 5, tol=1e-9)
        assert result.value == pytest.approx(-1.0)

    def test_nonpositive_tolerance(self, ex2):
        with pytest.raises(ValidationError):
            brute_force_complementary_min(ex2, 5, tol=0.0)

    def test_too_few_points(self, ex2):
        with pytest.raises(ValidationError):
            brute_force_complementary_min(ex2, 1)
