"""Trade-off certificate: when does the penalty method recover complementarity.

For a linear instance every efficient point is properly efficient. If the
pen-first lexicographic minimum is complementary, every penalty solve with
L above the trade-off bound returns it.
"""

import logging
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from lpcc_core.config import Settings, get_settings
from lpcc_core.exceptions import ValidationError
from lpcc_core.model import MpecProblem, Point, Relation, penalty_expr
from lpcc_core.simplex import LinearProgram, SolveStatus
from lpcc_bicriteria.complementarity import ComplementarityReport, complementarity_report
from lpcc_bicriteria.frontier import (
    Frontier,
    FrontierPoint,
    Order,
    compute_L_bar,
    dichotomic_frontier,
    lexmin,
)
from lpcc_oracle.blackbox import BlackBoxProblem
from lpcc_oracle.grid import GridResult, grid_minimize
from lpcc_penalty.exact import face_complementarity_gap, solve_exact
from lpcc_penalty.reformulation import build_gamma_lp

logger = logging.getLogger(__name__)


class Verdict(StrEnum):
    RECOVERS_FOR_L_GT_LBAR = "recovers-for-L-gt-Lbar"
    NEVER_RECOVERS_AT_MIN_PEN = "never-recovers-at-min-pen"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, eq=False)
class TradeoffCertificate:
    """
    Outcome of certify_theorem4.

    face_gap is the smallest sum_i min(y_i, g_i) over the pen-first
    lexicographic face; it is only computed when the lexicographic vertex
    itself is not complementary.
    """

    L_bar: float
    lexmin_pen_first: FrontierPoint
    lexmin_complementary: bool
    verdict: Verdict
    frontier: Frontier
    face_gap: float | None = None
    exact_value: float | None = None

    def __post_init__(self) -> None:
        if self.verdict is Verdict.RECOVERS_FOR_L_GT_LBAR and not self.lexmin_complementary:
            raise ValidationError("verdict", "recovery requires a complementary lexicographic minimum")

    def recovery_weight(self, margin: float = 1e-3) -> float:
        """A weight strictly above L_bar: L_bar * (1 + margin), or margin when L_bar is 0."""
        return self.L_bar * (1.0 + margin) if self.L_bar > 0 else margin


def pen_first_face(p: MpecProblem, point: FrontierPoint, settings: Settings) -> LinearProgram:
    """LP over Gamma restricted to f^pen <= fpen* + band and f <= f* + band."""
    pen = penalty_expr(p)
    band = settings.lexmin_band
    base = build_gamma_lp(p, p.objective, name=f"{p.name or 'lpcc'} pen-first face")
    rows = np.vstack([pen.coeffs, p.objective.coeffs])
    rhs = [point.fpen - pen.constant + band, point.f - p.objective.constant + band]
    return base.with_rows(rows, [Relation.LE, Relation.LE], rhs)


def certify_theorem4(p: MpecProblem, settings: Settings | None = None) -> TradeoffCertificate:
    """
    Decide whether penalty solves with L > L_bar return complementary points.

    Verdicts:
        RECOVERS_FOR_L_GT_LBAR: the pen-first lexicographic minimum is complementary.
        NEVER_RECOVERS_AT_MIN_PEN: no point of the pen-first lexicographic face
            is complementary while the exact solver finds a complementary
            point elsewhere.
        INCONCLUSIVE: the face holds a complementary alternative optimum
            (reachable but not enforced), or the instance has no complementary
            point at all.

    Only linear instances are certified.
    """
    settings = settings or get_settings()
    frontier = dichotomic_frontier(p, settings)
    last = frontier.lex_pen_first
    L_bar = compute_L_bar(frontier)
    name = p.name or "lpcc"

    if last.complementary:
        logger.info(f"{name}: complementary pen-first lexmin {last.z}, L_bar={L_bar:.9g}")
        return TradeoffCertificate(L_bar, last, True, Verdict.RECOVERS_FOR_L_GT_LBAR, frontier)

    gap = face_complementarity_gap(p, pen_first_face(p, last, settings), settings)
    if gap.value <= settings.objective_tol:
        logger.info(f"{name}: pen-first face holds a complementary alternative optimum")
        return TradeoffCertificate(
            L_bar, last, False, Verdict.INCONCLUSIVE, frontier, face_gap=gap.value
        )

    exact = solve_exact(p, settings)
    if exact.status is SolveStatus.OPTIMAL:
        verdict = Verdict.NEVER_RECOVERS_AT_MIN_PEN
    else:
        verdict = Verdict.INCONCLUSIVE
    logger.info(f"{name}: face gap {gap.value:.9g}, exact {exact.status.value}: {verdict.value}")
    return TradeoffCertificate(
        L_bar, last, False, verdict, frontier, face_gap=gap.value, exact_value=exact.value
    )


def grid_frontier_point(
    bb: BlackBoxProblem, result: GridResult, settings: Settings | None = None
) -> FrontierPoint:
    """
    Split a grid result into (f, f^pen) and check complementarity.

    The complementarity tolerance is Settings.oracle_resolution_factor
    times the final grid step.
    """
    if bb.criteria is None or bb.pairs is None:
        raise ValidationError("bb", "criteria and pairs hooks are required")
    settings = settings or get_settings()
    z = result.z.reshape(1, -1)
    f, fpen = bb.criteria(z)[0]
    y, g = bb.pairs(z)
    report = complementarity_report(y[0], g[0], settings.oracle_resolution_factor * result.step)
    return FrontierPoint(float(f), float(fpen), Point.from_vector(result.z, bb.n_x), report)


def drop_complementarity_solve(
    p: MpecProblem | BlackBoxProblem, settings: Settings | None = None
) -> tuple[FrontierPoint, ComplementarityReport]:
    """
    Solve min f over Gamma without complementarity and check the result.

    Ties in f are broken by minimizing f^pen, so on an LPCC this is the
    f-first lexicographic minimum. Black-box problems go through the grid
    oracle, with a complementarity tolerance tied to the final grid step.
    """
    settings = settings or get_settings()
    if isinstance(p, BlackBoxProblem):
        result = grid_minimize(p.first_criterion(), settings=settings)
        point = grid_frontier_point(p, result, settings)
        report = point.report
    else:
        point = lexmin(p, Order.F_FIRST, settings)
        report = point.report
    logger.info(f"{p.name or 'problem'}: relaxation {report.summary()}")
    return point, report
