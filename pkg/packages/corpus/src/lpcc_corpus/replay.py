"""Replay ground-truth rows through the matching solver path."""

import logging
from dataclasses import dataclass

import numpy as np

from lpcc_bicriteria.certificate import grid_frontier_point
from lpcc_bicriteria.frontier import FrontierPoint, frontier_point, solve_penalty
from lpcc_core.config import Settings, get_settings
from lpcc_core.exceptions import InvalidProblemError, LPCCError
from lpcc_core.model import MpecProblem, eval_g
from lpcc_corpus.entries import CorpusEntry, GroundTruthRow, SolverPath
from lpcc_oracle.blackbox import BlackBoxProblem
from lpcc_oracle.grid import grid_minimize
from lpcc_penalty.exact import solve_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RowOutcome:
    """What a solver produced for one ground-truth row."""

    row: GroundTruthRow
    point: FrontierPoint | None
    g: np.ndarray | None
    mismatches: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


@dataclass(frozen=True, eq=False)
class ReplayReport:
    entry: CorpusEntry
    outcomes: tuple[RowOutcome, ...]

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)

    @property
    def failures(self) -> tuple[RowOutcome, ...]:
        return tuple(outcome for outcome in self.outcomes if not outcome.passed)


def _compare(
    label: str, expected: tuple[float, ...] | None, actual: np.ndarray, tol: float
) -> list[str]:
    if expected is None:
        return []
    if len(expected) != len(actual) or not np.allclose(actual, expected, rtol=0.0, atol=tol):
        return [f"{label}: expected {tuple(expected)}, got {tuple(np.round(actual, 9))}"]
    return []


def _check(row: GroundTruthRow, point: FrontierPoint, g: np.ndarray) -> tuple[str, ...]:
    tol = row.tol
    mismatches: list[str] = []
    if abs(point.f - row.f) > tol:
        mismatches.append(f"f: expected {row.f:g}, got {point.f:.9g}")
    if row.fpen is not None and abs(point.fpen - row.fpen) > tol:
        mismatches.append(f"fpen: expected {row.fpen:g}, got {point.fpen:.9g}")
    if point.complementary != row.complementary:
        mismatches.append(f"complementary: expected {row.complementary}, got {point.complementary}")
    mismatches += _compare("x", row.x, point.solution.x, tol)
    mismatches += _compare("y", row.y, point.solution.y, tol)
    mismatches += _compare("g", row.g, g, row.g_tol if row.g_tol is not None else tol)
    return tuple(mismatches)


def _solve_row(
    entry: CorpusEntry, row: GroundTruthRow, settings: Settings
) -> tuple[FrontierPoint, np.ndarray]:
    if row.path is SolverPath.ORACLE:
        bb = entry.build(L=row.L)
        if not isinstance(bb, BlackBoxProblem):
            raise InvalidProblemError(f"{entry.id} is not a black-box instance")
        point = grid_frontier_point(bb, grid_minimize(bb, settings=settings), settings)
        return point, np.array([pair.g for pair in point.report.pairs])

    p = entry.build()
    if not isinstance(p, MpecProblem):
        raise InvalidProblemError(f"{entry.id} is not a linear instance")
    if row.path is SolverPath.PENALTY:
        point = solve_penalty(p, row.L, settings)
    else:
        result = solve_exact(p, settings)
        if not result.is_optimal:
            raise LPCCError(f"exact solve ended {result.status.value}")
        point = frontier_point(p, result.point, settings.complementarity_tol)
    return point, eval_g(p, point.solution)


def replay_row(
    entry: CorpusEntry, row: GroundTruthRow, settings: Settings | None = None
) -> RowOutcome:
    """Solve one row and compare against its documented values."""
    settings = settings or get_settings()
    try:
        point, g = _solve_row(entry, row, settings)
    except LPCCError as e:
        logger.warning(f"{entry.id} {row.label}: {e.message}")
        return RowOutcome(row, None, None, (f"solver failed: {e.message}",))
    outcome = RowOutcome(row, point, g, _check(row, point, g))
    if outcome.passed:
        logger.debug(f"{entry.id} {row.label}: ok")
    else:
        logger.warning(f"{entry.id} {row.label}: {'; '.join(outcome.mismatches)}")
    return outcome


def replay(
    entry: CorpusEntry,
    settings: Settings | None = None,
    paths: tuple[SolverPath, ...] | None = None,
) -> ReplayReport:
    """
    Replay every ground-truth row of entry.

    Args:
        entry: Corpus entry
        settings: Solver settings
        paths: Restrict to these solver paths (default: all)
    """
    settings = settings or get_settings()
    rows = [row for row in entry.rows if paths is None or row.path in paths]
    report = ReplayReport(entry, tuple(replay_row(entry, row, settings) for row in rows))
    logger.info(
        f"{entry.id}: {len(report.outcomes) - len(report.failures)}/{len(report.outcomes)} rows reproduced"
    )
    return report
