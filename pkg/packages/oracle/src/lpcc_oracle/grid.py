"""Grid-refinement minimizer and brute-force LPCC oracle."""

import logging
from dataclasses import dataclass

import numpy as np

from lpcc_core.config import Settings, get_settings
from lpcc_core.exceptions import GridTooLargeError, InfeasibleGridError, ValidationError
from lpcc_core.model import MpecProblem, Point, Relation, stack_rows
from lpcc_oracle.blackbox import BlackBoxProblem

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GridResult:
    """
    Best feasible grid point.

    history holds the incumbent value after each round; resolution is the
    grid step per axis in the last round.
    """

    z: np.ndarray
    value: float
    violation: float
    n_x: int
    history: tuple[float, ...]
    resolution: np.ndarray
    evaluations: int

    @property
    def point(self) -> Point:
        return Point.from_vector(self.z, self.n_x)

    @property
    def step(self) -> float:
        """Largest final grid step."""
        return float(np.max(self.resolution)) if self.resolution.size else 0.0


@dataclass(frozen=True)
class _ScanHit:
    z: np.ndarray
    value: float
    violation: float


def _grid_axes(lower: np.ndarray, upper: np.ndarray, pts: int) -> list[np.ndarray]:
    return [np.linspace(lo, hi, pts) for lo, hi in zip(lower, upper)]


def scan_grid(
    bb: BlackBoxProblem,
    axes: list[np.ndarray],
    feasibility_tol: float,
    chunk: int,
) -> _ScanHit | None:
    """
    Evaluate every point of the tensor grid spanned by axes.

    Points are visited in C order and evaluated in chunks; among equal
    values the smallest grid index wins.

    Returns:
        Best feasible point, or None when no point is feasible
    """
    shape = tuple(len(axis) for axis in axes)
    size = int(np.prod(shape))
    best: _ScanHit | None = None
    for start in range(0, size, chunk):
        index = np.arange(start, min(size, start + chunk))
        coords = np.unravel_index(index, shape)
        points = np.column_stack([axis[c] for axis, c in zip(axes, coords)])
        values, violations = bb.evaluate(points)
        violations = np.asarray(violations, dtype=float).reshape(len(points), -1)
        worst = violations.max(axis=1) if violations.shape[1] else np.zeros(len(points))
        masked = np.where(worst <= feasibility_tol, np.asarray(values, dtype=float), np.inf)
        j = int(np.argmin(masked))
        if np.isfinite(masked[j]) and (best is None or masked[j] < best.value):
            best = _ScanHit(points[j].copy(), float(masked[j]), float(worst[j]))
    return best


def _check_size(pts: int, dimension: int, settings: Settings) -> int:
    size = pts**dimension
    if size > settings.oracle_max_grid:
        raise GridTooLargeError(size, settings.oracle_max_grid)
    return size


def grid_minimize(
    bb: BlackBoxProblem,
    rounds: int | None = None,
    pts_per_axis: int | None = None,
    settings: Settings | None = None,
) -> GridResult:
    """
    Multi-round grid refinement.

    Each round evaluates the full grid on the current box, keeps the best
    feasible point, then shrinks the box around the incumbent by
    Settings.oracle_shrink (clipped to the original box).

    Args:
        bb: Problem to minimize
        rounds: Refinement rounds (default: Settings.oracle_rounds)
        pts_per_axis: Grid points per axis, >= 11 (default: Settings.oracle_points)
        settings: Oracle settings

    Returns:
        GridResult; its value never increases from one round to the next

    Raises:
        InfeasibleGridError: no feasible point in the first round
        GridTooLargeError: pts_per_axis ** dimension exceeds Settings.oracle_max_grid
    """
    settings = settings or get_settings()
    rounds = settings.oracle_rounds if rounds is None else rounds
    pts = settings.oracle_points if pts_per_axis is None else pts_per_axis
    if rounds < 1:
        raise ValidationError("rounds", "must be at least 1")
    if pts < 11:
        raise ValidationError("pts_per_axis", "must be at least 11")
    if bb.dimension == 0:
        raise ValidationError("bb", "nothing to grid in zero dimensions")
    size = _check_size(pts, bb.dimension, settings)

    scale = max(1.0, float(np.max(np.abs(bb.lower))), float(np.max(np.abs(bb.upper))))
    feasibility_tol = settings.oracle_feasibility_tol * scale

    lower, upper = bb.lower.copy(), bb.upper.copy()
    incumbent: _ScanHit | None = None
    history: list[float] = []
    resolution = np.zeros(bb.dimension)
    for round_no in range(rounds):
        resolution = (upper - lower) / (pts - 1)
        hit = scan_grid(bb, _grid_axes(lower, upper, pts), feasibility_tol, settings.oracle_chunk)
        if hit is None and incumbent is None:
            raise InfeasibleGridError(size)
        if hit is not None and (incumbent is None or hit.value < incumbent.value):
            incumbent = hit
        history.append(incumbent.value)
        logger.debug(
            f"{bb.name or 'grid'} round {round_no + 1}/{rounds}: best {incumbent.value:.9g}, "
            f"step {resolution.max():.3g}"
        )

        width = (upper - lower) * settings.oracle_shrink
        lower = np.maximum(bb.lower, incumbent.z - width / 2.0)
        upper = np.minimum(bb.upper, incumbent.z + width / 2.0)

    return GridResult(
        z=incumbent.z,
        value=incumbent.value,
        violation=incumbent.violation,
        n_x=bb.n_x,
        history=tuple(history),
        resolution=resolution,
        evaluations=size * rounds,
    )


def _row_tolerance(coeffs: np.ndarray, step: np.ndarray, floor: float) -> float:
    """Half the variation of an affine row across one grid cell."""
    return max(0.5 * float(np.abs(coeffs) @ step), floor)


def brute_force_complementary_min(
    p: MpecProblem,
    pts_per_axis: int,
    box: tuple[np.ndarray, np.ndarray] | None = None,
    tol: float | None = None,
    settings: Settings | None = None,
) -> GridResult:
    """
    Minimum of f over grid points of Gamma that satisfy complementarity.

    With tol=None the tests are grid-scale: each Omega/g row may miss by
    half its variation across one cell, and pair i passes when
    min(y_i, g_i) is at most half the smaller of y_i's step and g_i's
    row tolerance. An explicit tol replaces all of these.

    Args:
        p: LPCC instance
        pts_per_axis: Grid points per variable, >= 2
        box: (lower, upper) over the stacked variables; needed when p has
            infinite bounds, intersected with p's bounds otherwise
        tol: Absolute tolerance for every test (default: grid-scale)
        settings: Oracle settings

    Raises:
        GridTooLargeError: grid exceeds Settings.oracle_max_grid
        InfeasibleGridError: no grid point is feasible and complementary
    """
    settings = settings or get_settings()
    if pts_per_axis < 2:
        raise ValidationError("pts_per_axis", "must be at least 2")
    n = p.n_vars
    if n == 0:
        raise ValidationError("p", "nothing to grid in zero dimensions")
    size = _check_size(pts_per_axis, n, settings)

    lower, upper = p.lower, p.upper
    if box is not None:
        lower = np.maximum(lower, np.asarray(box[0], dtype=float))
        upper = np.minimum(upper, np.asarray(box[1], dtype=float))
    if not (np.isfinite(lower).all() and np.isfinite(upper).all()):
        raise ValidationError("box", "a finite box is required for unbounded variables")
    if (lower > upper).any():
        raise ValidationError("box", "box does not intersect the variable bounds")

    step = (upper - lower) / (pts_per_axis - 1)
    omega, relations, rhs = stack_rows(p, p.omega)
    g_matrix, g_constants = p.g_matrix()
    floor = settings.eval_tol
    if tol is None:
        omega_tol = np.array([_row_tolerance(row, step, floor) for row in omega])
        g_tol = np.array([_row_tolerance(row, step, floor) for row in g_matrix])
        y_step = step[p.n_x :]
        pair_tol = np.maximum(0.5 * np.minimum(y_step, g_tol), floor)
    else:
        if tol <= 0:
            raise ValidationError("tol", "must be positive")
        omega_tol = np.full(len(omega), tol)
        g_tol = np.full(p.n_y, tol)
        pair_tol = np.full(p.n_y, tol)

    is_le = np.array([r is Relation.LE for r in relations], dtype=bool)
    is_ge = np.array([r is Relation.GE for r in relations], dtype=bool)
    cost, constant = p.objective.coeffs, p.objective.constant

    def evaluate(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        values = points @ cost + constant
        residual = points @ omega.T - rhs
        row_violation = np.where(is_le, np.maximum(residual, 0.0), np.abs(residual))
        row_violation = np.where(is_ge, np.maximum(-residual, 0.0), row_violation)
        g = points @ g_matrix.T + g_constants
        y = points[:, p.n_x :]
        columns = [
            row_violation / omega_tol,
            np.maximum(-g, 0.0) / g_tol,
            np.maximum(np.minimum(y, g), 0.0) / pair_tol,
        ]
        return values, np.hstack(columns)

    bb = BlackBoxProblem(evaluate, lower, upper, n_x=p.n_x, name=f"{p.name or 'lpcc'} brute force")
    hit = scan_grid(bb, _grid_axes(lower, upper, pts_per_axis), 1.0, settings.oracle_chunk)
    if hit is None:
        raise InfeasibleGridError(size)
    logger.debug(f"{bb.name}: minimum {hit.value:.9g} over {size} points")
    return GridResult(
        z=hit.z,
        value=hit.value,
        violation=hit.violation,
        n_x=p.n_x,
        history=(hit.value,),
        resolution=step,
        evaluations=size,
    )
