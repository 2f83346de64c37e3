"""Exact LPCC solver by enumeration of complementarity dispositions.

The complementary part of Gamma is the union of 2^n_y polyhedral pieces,
one per choice of y_i = 0 or g_i = 0 for every pair. Each piece is an LP.
"""

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from lpcc_core.config import Settings, get_settings
from lpcc_core.exceptions import EnumerationLimitError
from lpcc_core.model import AffineExpr, MpecProblem, Point, Relation
from lpcc_core.simplex import LinearProgram, SolveResult, SolveStatus, solve_lp_with_fixed
from lpcc_penalty.reformulation import build_gamma_lp

logger = logging.getLogger(__name__)


class Side(StrEnum):
    """Member of a complementarity pair forced to zero."""

    Y_ZERO = "y"
    G_ZERO = "g"


@dataclass(frozen=True)
class Disposition:
    """One choice of Side per pair."""

    sides: tuple[Side, ...]

    @classmethod
    def enumerate(cls, n_y: int) -> Iterator["Disposition"]:
        """All 2^n_y dispositions in lexicographic order, Y_ZERO first."""
        for sides in itertools.product((Side.Y_ZERO, Side.G_ZERO), repeat=n_y):
            yield cls(sides)

    @classmethod
    def parse(cls, text: str) -> "Disposition":
        """Inverse of str(): 'yyg' -> (Y_ZERO, Y_ZERO, G_ZERO)."""
        return cls(tuple(Side(ch) for ch in text))

    def __str__(self) -> str:
        return "".join(side.value for side in self.sides) or "-"


@dataclass(frozen=True, eq=False)
class PieceResult:
    """LP outcome on one polyhedral piece."""

    disposition: Disposition
    status: SolveStatus
    value: float | None = None
    point: Point | None = None


@dataclass(frozen=True, eq=False)
class ExactResult:
    """
    Global optimum of the LPCC over all pieces.

    status is INFEASIBLE when every piece is infeasible and UNBOUNDED when
    any piece is unbounded. pieces lists every disposition in enumeration
    order.
    """

    status: SolveStatus
    pieces: tuple[PieceResult, ...]
    point: Point | None = None
    value: float | None = None
    disposition: Disposition | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL

    @property
    def feasible_pieces(self) -> tuple[PieceResult, ...]:
        return tuple(piece for piece in self.pieces if piece.status is not SolveStatus.INFEASIBLE)


def piece_lp(
    p: MpecProblem, base: LinearProgram, disposition: Disposition
) -> tuple[LinearProgram, dict[int, float]]:
    """
    Restrict an LP over (x, y) to one piece.

    Y_ZERO becomes a fixing of y_i to 0, G_ZERO an appended row g_i = 0.

    Returns:
        (restricted LP, fixings by column index)
    """
    fixings: dict[int, float] = {}
    rows, rhs = [], []
    for i, side in enumerate(disposition.sides):
        if side is Side.Y_ZERO:
            fixings[p.n_x + i] = 0.0
        else:
            gi = p.g[i]
            row = np.zeros(base.n_vars)
            row[: p.n_vars] = gi.coeffs
            rows.append(row)
            rhs.append(-gi.constant)
    if rows:
        base = base.with_rows(np.array(rows), [Relation.EQ] * len(rows), rhs)
    return base, fixings


def _solve_piece(
    p: MpecProblem, base: LinearProgram, disposition: Disposition, settings: Settings
) -> tuple[PieceResult, SolveResult]:
    lp, fixings = piece_lp(p, base, disposition)
    result = solve_lp_with_fixed(lp, fixings, settings)
    point = None
    if result.is_optimal:
        point = Point.from_vector(result.x[: p.n_vars], p.n_x)
    logger.debug(f"{p.name or 'lpcc'} piece {disposition}: {result.status.value} {result.objective}")
    return PieceResult(disposition, result.status, result.objective, point), result


def _check_guard(p: MpecProblem, settings: Settings) -> None:
    if p.n_y > settings.exact_max_pairs:
        raise EnumerationLimitError(p.n_y, settings.exact_max_pairs)


def solve_exact(
    p: MpecProblem,
    settings: Settings | None = None,
    objective: AffineExpr | None = None,
) -> ExactResult:
    """
    Solve the LPCC exactly by enumerating every disposition.

    Ties between pieces go to the lexicographically smallest disposition.

    Args:
        p: LPCC instance
        settings: Tolerances and guard (default: get_settings())
        objective: Objective to minimize instead of p.objective

    Returns:
        ExactResult with the best complementary point and the full piece table

    Raises:
        EnumerationLimitError: n_y exceeds Settings.exact_max_pairs
    """
    settings = settings or get_settings()
    _check_guard(p, settings)
    base = build_gamma_lp(p, objective or p.objective, name=f"{p.name or 'lpcc'} exact")

    pieces: list[PieceResult] = []
    best: PieceResult | None = None
    unbounded = False
    for disposition in Disposition.enumerate(p.n_y):
        piece, _ = _solve_piece(p, base, disposition, settings)
        pieces.append(piece)
        if piece.status is SolveStatus.UNBOUNDED:
            unbounded = True
        elif piece.status is SolveStatus.OPTIMAL:
            if best is None or piece.value < best.value - settings.objective_tol:
                best = piece

    if unbounded:
        logger.info(f"{p.name or 'lpcc'}: exact solve unbounded")
        return ExactResult(SolveStatus.UNBOUNDED, tuple(pieces))
    if best is None:
        logger.info(f"{p.name or 'lpcc'}: all {len(pieces)} pieces infeasible")
        return ExactResult(SolveStatus.INFEASIBLE, tuple(pieces))

    logger.info(f"{p.name or 'lpcc'}: exact optimum {best.value:.9g} on piece {best.disposition}")
    return ExactResult(
        SolveStatus.OPTIMAL,
        tuple(pieces),
        point=best.point,
        value=best.value,
        disposition=best.disposition,
    )


@dataclass(frozen=True, eq=False)
class FaceGap:
    """Smallest sum_i min(y_i, g_i) over a face, with a minimizing point."""

    value: float
    point: Point | None
    disposition: Disposition | None


def face_complementarity_gap(
    p: MpecProblem, face: LinearProgram, settings: Settings | None = None
) -> FaceGap:
    """
    Minimize sum_i min(y_i, g_i) over a face of Gamma.

    The minimum of this concave function is the smallest of the 2^n_y LP
    minima of sum_i (y_i or g_i), one per disposition. A zero gap means the
    face contains a complementary point.

    Args:
        p: LPCC instance
        face: LP over (x, y) whose feasible set is the face (its cost is ignored)
        settings: Tolerances and guard

    Returns:
        FaceGap; value is +inf when the face is empty
    """
    settings = settings or get_settings()
    _check_guard(p, settings)
    best = FaceGap(np.inf, None, None)
    for disposition in Disposition.enumerate(p.n_y):
        measure = AffineExpr.zeros(p.n_x, p.n_y)
        for i, side in enumerate(disposition.sides):
            if side is Side.Y_ZERO:
                measure = measure + AffineExpr.from_terms(p.n_x, p.n_y, y={i: 1.0})
            else:
                measure = measure + p.g[i]
        cost = np.zeros(face.n_vars)
        cost[: p.n_vars] = measure.coeffs
        result = solve_lp_with_fixed(face.with_cost(cost, measure.constant), {}, settings)
        if not result.is_optimal:
            continue
        value = max(result.objective, 0.0)
        if value < best.value - settings.objective_tol:
            best = FaceGap(value, Point.from_vector(result.x[: p.n_vars], p.n_x), disposition)
    logger.debug(f"{p.name or 'lpcc'}: face complementarity gap {best.value:.3g}")
    return best
