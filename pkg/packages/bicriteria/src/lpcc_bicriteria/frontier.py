"""Bicriteria view of the penalty method: (f, f^pen) frontier over Gamma.

Every penalty solve min f + L * f^pen over Gamma is a weighted-sum
scalarization of the two criteria. Dichotomic search between adjacent
known nondominated points enumerates every extreme supported point.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import StrEnum

import numpy as np

from lpcc_core.config import Settings, get_settings
from lpcc_core.exceptions import InfeasibleError, NumericalError, ValidationError
from lpcc_core.model import AffineExpr, MpecProblem, Point, Relation, eval_f, eval_fpen, penalty_expr
from lpcc_core.simplex import SolveStatus, solve_lp
from lpcc_core.solver_utils import require_optimal
from lpcc_bicriteria.complementarity import ComplementarityReport, check_complementarity
from lpcc_penalty.reformulation import build_gamma_lp, build_penalty_lp

logger = logging.getLogger(__name__)


class Order(StrEnum):
    """Priority of the two criteria in a lexicographic minimum."""

    F_FIRST = "f-first"
    PEN_FIRST = "pen-first"


@dataclass(frozen=True, eq=False)
class FrontierPoint:
    """
    Outcome z = (f, f^pen) of a solution.

    L_interval is the half-open range [lo, hi) of penalty weights for which
    the point is weighted-sum optimal; None when not on a computed frontier.
    """

    f: float
    fpen: float
    solution: Point
    report: ComplementarityReport
    L_interval: tuple[float, float] | None = None

    @property
    def z(self) -> tuple[float, float]:
        return (self.f, self.fpen)

    @property
    def complementary(self) -> bool:
        return self.report.satisfied

    def weighted(self, L: float) -> float:
        return self.f + L * self.fpen

    def with_interval(self, lo: float, hi: float) -> "FrontierPoint":
        return replace(self, L_interval=(lo, hi))


@dataclass(frozen=True)
class Probe:
    """One dichotomic weight and what it produced."""

    L: float
    left: tuple[float, float]
    right: tuple[float, float]
    found: tuple[float, float] | None

    @property
    def closed(self) -> bool:
        """True when the probe found no new point and closed its segment."""
        return self.found is None


@dataclass(frozen=True)
class Segment:
    """Adjacent frontier points and the weight at which both are optimal."""

    left: FrontierPoint
    right: FrontierPoint

    @property
    def weight(self) -> float:
        """L = (f_right - f_left) / (fpen_left - fpen_right)."""
        return (self.right.f - self.left.f) / (self.left.fpen - self.right.fpen)

    @property
    def slope(self) -> float:
        """-delta f^pen / delta f."""
        return (self.left.fpen - self.right.fpen) / (self.right.f - self.left.f)


@dataclass(frozen=True, eq=False)
class Frontier:
    """
    Extreme supported nondominated points sorted by increasing f.

    The first point is the f-first lexicographic minimum, the last one the
    pen-first lexicographic minimum.
    """

    points: tuple[FrontierPoint, ...]
    probes: tuple[Probe, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "probes", tuple(self.probes))
        if not self.points:
            raise ValidationError("frontier", "needs at least one point")
        for left, right in zip(self.points, self.points[1:]):
            if not (left.f < right.f and left.fpen > right.fpen):
                raise ValidationError(
                    "frontier",
                    f"points {left.z} and {right.z} are not strictly bi-monotone",
                )

    def __len__(self) -> int:
        return len(self.points)

    @property
    def lex_f_first(self) -> FrontierPoint:
        return self.points[0]

    @property
    def lex_pen_first(self) -> FrontierPoint:
        return self.points[-1]

    def segments(self) -> tuple[Segment, ...]:
        return tuple(Segment(a, b) for a, b in zip(self.points, self.points[1:]))

    def breakpoints(self) -> tuple[float, ...]:
        """Weights at which the optimal point changes."""
        return tuple(segment.weight for segment in self.segments())

    def is_convex(self) -> bool:
        """Segment slopes -delta f^pen / delta f strictly decrease."""
        slopes = [segment.slope for segment in self.segments()]
        return all(a > b for a, b in zip(slopes, slopes[1:]))

    def point_for(self, L: float) -> FrontierPoint:
        """Frontier point whose L_interval contains L."""
        for point in self.points:
            lo, hi = point.L_interval or (0.0, np.inf)
            if lo <= L < hi:
                return point
        return self.points[-1]


def frontier_point(
    p: MpecProblem, pt: Point, tol: float | None = None
) -> FrontierPoint:
    """Evaluate both criteria and complementarity at pt."""
    return FrontierPoint(
        f=eval_f(p, pt),
        fpen=eval_fpen(p, pt),
        solution=pt,
        report=check_complementarity(p, pt, tol),
    )


def _criteria(p: MpecProblem, order: Order) -> tuple[AffineExpr, AffineExpr]:
    if order is Order.F_FIRST:
        return p.objective, penalty_expr(p)
    return penalty_expr(p), p.objective


def lexmin(p: MpecProblem, order: Order, settings: Settings | None = None) -> FrontierPoint:
    """
    Lexicographic minimum of (f, f^pen) or (f^pen, f) over Gamma.

    Stage 1 minimizes the first criterion; stage 2 minimizes the second
    with the first capped at its stage-1 optimum. The returned point must
    keep the first criterion within Settings.lexmin_band of that optimum.

    Raises:
        InfeasibleError: Gamma is empty
        UnboundedError: the first criterion is unbounded below
        NumericalError: stage 2 drifted off the stage-1 optimum
    """
    settings = settings or get_settings()
    order = Order(order)
    first, second = _criteria(p, order)
    label = f"{p.name or 'lpcc'} lexmin {order.value}"

    base = build_gamma_lp(p, first, name=f"{label} stage 1")
    stage1 = solve_lp(base, settings)
    if stage1.status is SolveStatus.INFEASIBLE:
        raise InfeasibleError(f"{label} stage 1", "empty Γ")
    require_optimal(stage1, f"{label} stage 1")

    cap = stage1.objective - first.constant
    stage2_lp = base.with_rows(first.coeffs.reshape(1, -1), [Relation.LE], [cap]).with_cost(
        second.coeffs, second.constant
    )
    stage2 = solve_lp(stage2_lp, settings)
    if stage2.status is SolveStatus.INFEASIBLE:
        # rounding put the stage-1 vertex just outside the cap
        logger.debug(f"{label}: stage 2 infeasible at the cap, keeping the stage-1 vertex")
        z = stage1.x
    else:
        z = require_optimal(stage2, f"{label} stage 2").x

    drift = first.evaluate_stacked(z[: p.n_x + p.n_y]) - stage1.objective
    if drift > settings.lexmin_band:
        raise NumericalError(
            f"{label} stage 2: first criterion drifted by {drift:.3g}", f"{label} stage 2"
        )

    point = frontier_point(p, Point.from_vector(z, p.n_x), settings.complementarity_tol)
    logger.debug(f"{label}: z=({point.f:.9g}, {point.fpen:.9g})")
    return point


def solve_penalty(p: MpecProblem, L: float, settings: Settings | None = None) -> FrontierPoint:
    """
    Weighted-sum optimum of f + L * f^pen with the (f, f^pen) split recomputed.

    Raises:
        ValidationError: L < 0
        InfeasibleError / UnboundedError: propagated from the LP
    """
    if not np.isfinite(L) or L < 0:
        raise ValidationError("L", "must be finite and nonnegative")
    settings = settings or get_settings()
    lp = build_penalty_lp(p, L)
    result = require_optimal(solve_lp(lp, settings), f"penalty L={L:g}")
    point = frontier_point(p, Point.from_vector(result.x, p.n_x), settings.complementarity_tol)
    logger.debug(
        f"{p.name or 'lpcc'} penalty L={L:g}: f={point.f:.9g} fpen={point.fpen:.9g} "
        f"complementary={point.complementary}"
    )
    return point


def dichotomic_frontier(p: MpecProblem, settings: Settings | None = None) -> Frontier:
    """
    Enumerate the extreme supported points of the (f, f^pen) frontier.

    Seeds with both lexicographic minima. For adjacent points a, b the
    weight L = (f_b - f_a) / (fpen_a - fpen_b) is probed; a new point is
    accepted when it beats the line through a and b by more than
    Settings.frontier_rel_tol * (1 + |line value|). Left sub-segments are
    explored before right ones, which fixes the probe order.
    """
    settings = settings or get_settings()
    a = lexmin(p, Order.F_FIRST, settings)
    b = lexmin(p, Order.PEN_FIRST, settings)
    probes: list[Probe] = []

    if b.f - a.f <= settings.objective_tol or a.fpen - b.fpen <= settings.objective_tol:
        logger.info(f"{p.name or 'lpcc'}: lexicographic minima coincide, single-point frontier")
        return Frontier((b.with_interval(0.0, np.inf),), ())

    def explore(left: FrontierPoint, right: FrontierPoint) -> list[FrontierPoint]:
        denominator = left.fpen - right.fpen
        if denominator <= 0:
            return []
        L = (right.f - left.f) / denominator
        candidate = solve_penalty(p, L, settings)
        line = left.weighted(L)
        improvement = line - candidate.weighted(L)
        inside = left.f < candidate.f < right.f and right.fpen < candidate.fpen < left.fpen
        if improvement > settings.frontier_rel_tol * (1.0 + abs(line)) and inside:
            probes.append(Probe(L, left.z, right.z, candidate.z))
            logger.debug(f"probe L={L:.9g}: new point {candidate.z}")
            return explore(left, candidate) + [candidate] + explore(candidate, right)
        if improvement > settings.frontier_rel_tol * (1.0 + abs(line)):
            logger.warning(f"probe L={L:.9g}: improving point {candidate.z} outside its segment")
        probes.append(Probe(L, left.z, right.z, None))
        logger.debug(f"probe L={L:.9g}: segment closed")
        return []

    points = [a] + explore(a, b) + [b]
    weights = [0.0] + [Segment(u, v).weight for u, v in zip(points, points[1:])] + [np.inf]
    points = [point.with_interval(weights[k], weights[k + 1]) for k, point in enumerate(points)]
    frontier = Frontier(tuple(points), tuple(probes))
    logger.info(
        f"{p.name or 'lpcc'}: frontier with {len(frontier)} points after {len(probes)} probes"
    )
    return frontier


def compute_L_bar(frontier: Frontier) -> float:
    """
    Trade-off bound at the pen-first lexicographic minimum.

    Zero for a single-point frontier, otherwise the weight of the last
    segment (f_prev - f_last) / (fpen_last - fpen_prev).
    """
    if len(frontier) == 1:
        return 0.0
    return frontier.segments()[-1].weight


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Penalty solves over a list of weights, in the given order."""

    weights: tuple[float, ...]
    points: tuple[FrontierPoint, ...]
    monotone: bool


def sweep(
    p: MpecProblem, weights: list[float] | tuple[float, ...], settings: Settings | None = None
) -> SweepResult:
    """
    Solve the penalty LP for each weight and check monotone response.

    Along increasing L, f^pen must not increase and f must not decrease
    (within Settings.eval_tol).
    """
    settings = settings or get_settings()
    weights = tuple(float(L) for L in weights)
    points = tuple(solve_penalty(p, L, settings) for L in weights)
    order = np.argsort(weights, kind="stable")
    ordered = [points[k] for k in order]
    tol = settings.eval_tol
    monotone = all(
        b.fpen <= a.fpen + tol and b.f >= a.f - tol for a, b in zip(ordered, ordered[1:])
    )
    if not monotone:
        logger.warning(f"{p.name or 'lpcc'}: penalty sweep is not monotone in L")
    return SweepResult(weights, points, monotone)
