"""Two-phase dense tableau simplex with native variable bounds.

Every LP is first mapped onto structural variables with lower bound 0:

    x_orig = shift + P @ x_struct

(finite lower bound: shift; only an upper bound: mirror; free: split into
x+ - x-). Rows get a slack (<=) or surplus (>=) column, are sign-normalised
to b >= 0 and receive one artificial column each. Nonbasic variables sit at
0 or at their finite upper bound; a ratio test that hits the entering
variable's own bound flips it without a basis change.

Pivoting starts with Dantzig's rule and falls back to Bland's rule after
`bland_factor * (rows + cols)` pivots in a phase, which guarantees
termination on degenerate problems.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from lpcc_core.config import Settings, get_settings
from lpcc_core.exceptions import InvalidProblemError, IterationLimitError, ValidationError
from lpcc_core.model import Relation
from lpcc_core.solver_utils import solver_call

logger = logging.getLogger(__name__)


class SolveStatus(StrEnum):
    """Terminal status of an LP solve."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True, eq=False)
class LinearProgram:
    """
    min cost . x + constant  s.t.  matrix x (relations) rhs,  lower <= x <= upper.

    lower may be -inf, upper may be +inf.
    """

    cost: np.ndarray
    matrix: np.ndarray
    relations: tuple[Relation, ...]
    rhs: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    names: tuple[str, ...] = ()
    constant: float = 0.0
    name: str = ""

    def __post_init__(self) -> None:
        cost = np.array(self.cost, dtype=float).reshape(-1)
        n = len(cost)
        matrix = np.array(self.matrix, dtype=float)
        if matrix.size == 0:
            matrix = matrix.reshape(0, n)
        rhs = np.array(self.rhs, dtype=float).reshape(-1)
        lower = np.array(self.lower, dtype=float).reshape(-1)
        upper = np.array(self.upper, dtype=float).reshape(-1)
        relations = tuple(Relation(r) for r in self.relations)

        if matrix.ndim != 2 or matrix.shape[1] != n:
            raise InvalidProblemError(f"matrix shape {matrix.shape} does not match {n} variables")
        m = matrix.shape[0]
        if len(rhs) != m or len(relations) != m:
            raise InvalidProblemError(
                f"{m} rows but {len(rhs)} right-hand sides and {len(relations)} relations"
            )
        if len(lower) != n or len(upper) != n:
            raise InvalidProblemError("bound vectors must match the number of variables")
        for label, arr in (("cost", cost), ("matrix", matrix), ("rhs", rhs)):
            if not np.isfinite(arr).all():
                raise InvalidProblemError(f"{label} contains NaN or infinite entries")
        if np.isnan(lower).any() or np.isnan(upper).any():
            raise InvalidProblemError("bounds contain NaN")
        if np.isposinf(lower).any() or np.isneginf(upper).any():
            raise InvalidProblemError("lower bounds must be < +inf and upper bounds > -inf")
        if (lower > upper).any():
            raise InvalidProblemError("every bound pair must satisfy lower <= upper")
        if not np.isfinite(self.constant):
            raise InvalidProblemError("objective constant must be finite")

        names = tuple(self.names) or tuple(f"v{i + 1}" for i in range(n))
        if len(names) != n:
            raise InvalidProblemError(f"{len(names)} names for {n} variables")

        for arr in (cost, matrix, rhs, lower, upper):
            arr.setflags(write=False)
        object.__setattr__(self, "cost", cost)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "relations", relations)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "constant", float(self.constant))

    @property
    def n_vars(self) -> int:
        return len(self.cost)

    @property
    def n_rows(self) -> int:
        return self.matrix.shape[0]

    def index_of(self, name: str) -> int:
        """Column index of a named variable."""
        try:
            return self.names.index(name)
        except ValueError:
            raise ValidationError("variable", f"unknown variable {name!r}")

    def objective_value(self, x: np.ndarray) -> float:
        return float(self.cost @ x + self.constant)

    def residual(self, x: np.ndarray) -> float:
        """Largest violation of any row or bound at x."""
        worst = 0.0
        if self.n_vars:
            worst = max(float(np.max(self.lower - x)), float(np.max(x - self.upper)), 0.0)
        if self.n_rows:
            slack = self.matrix @ x - self.rhs
            for value, relation in zip(slack, self.relations):
                if relation is Relation.LE:
                    worst = max(worst, value)
                elif relation is Relation.GE:
                    worst = max(worst, -value)
                else:
                    worst = max(worst, abs(value))
        return worst

    def with_rows(
        self,
        matrix: np.ndarray,
        relations: Sequence[Relation],
        rhs: Sequence[float] | np.ndarray,
    ) -> "LinearProgram":
        """Copy with extra rows appended."""
        extra = np.array(matrix, dtype=float).reshape(-1, self.n_vars)
        return LinearProgram(
            cost=self.cost,
            matrix=np.vstack([self.matrix, extra]),
            relations=self.relations + tuple(relations),
            rhs=np.concatenate([self.rhs, np.asarray(rhs, dtype=float)]),
            lower=self.lower,
            upper=self.upper,
            names=self.names,
            constant=self.constant,
            name=self.name,
        )

    def with_cost(self, cost: np.ndarray, constant: float = 0.0) -> "LinearProgram":
        """Copy with a different objective."""
        return LinearProgram(
            cost=cost,
            matrix=self.matrix,
            relations=self.relations,
            rhs=self.rhs,
            lower=self.lower,
            upper=self.upper,
            names=self.names,
            constant=constant,
            name=self.name,
        )

    def with_bounds(self, lower: np.ndarray, upper: np.ndarray) -> "LinearProgram":
        """Copy with different variable bounds."""
        return LinearProgram(
            cost=self.cost,
            matrix=self.matrix,
            relations=self.relations,
            rhs=self.rhs,
            lower=lower,
            upper=upper,
            names=self.names,
            constant=self.constant,
            name=self.name,
        )


@dataclass(frozen=True, eq=False)
class SolveResult:
    """Outcome of solve_lp. x and objective are set only when optimal."""

    status: SolveStatus
    x: np.ndarray | None = None
    objective: float | None = None
    iterations: int = 0
    ray: np.ndarray | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL


class _Tableau:
    """Working state of one solve."""

    def __init__(self, lp: LinearProgram, settings: Settings):
        self.lp = lp
        self.settings = settings
        self.tol = settings.pivot_tol
        self.iterations = 0
        self.ray: np.ndarray | None = None

        self._standardize()

    # ========== Setup ==========

    def _standardize(self) -> None:
        lp = self.lp
        n = lp.n_vars
        columns: list[tuple[int, float]] = []
        struct_upper: list[float] = []
        shift = np.zeros(n)
        for k in range(n):
            lo, up = lp.lower[k], lp.upper[k]
            if np.isfinite(lo):
                shift[k] = lo
                columns.append((k, 1.0))
                struct_upper.append(up - lo)
            elif np.isfinite(up):
                shift[k] = up
                columns.append((k, -1.0))
                struct_upper.append(np.inf)
            else:
                columns.extend([(k, 1.0), (k, -1.0)])
                struct_upper.extend([np.inf, np.inf])

        n_struct = len(columns)
        P = np.zeros((n, n_struct))
        for c, (k, sign) in enumerate(columns):
            P[k, c] = sign
        self.P = P
        self.shift = shift
        self.n_struct = n_struct

        m = lp.n_rows
        A = lp.matrix @ P
        b = lp.rhs - lp.matrix @ shift
        slack_rows = [i for i, r in enumerate(lp.relations) if r is not Relation.EQ]
        S = np.zeros((m, len(slack_rows)))
        for c, i in enumerate(slack_rows):
            S[i, c] = 1.0 if lp.relations[i] is Relation.LE else -1.0

        A_full = np.hstack([A, S])
        flip = b < 0
        A_full[flip] *= -1.0
        b = np.where(flip, -b, b)

        self.m = m
        self.n_real = A_full.shape[1]
        self.art = np.arange(self.n_real, self.n_real + m)
        self.N = self.n_real + m
        self.b = b
        self.T = np.hstack([A_full, np.eye(m)])
        self.upper = np.concatenate([np.array(struct_upper), np.full(len(slack_rows) + m, np.inf)])

        self.cost = np.zeros(self.N)
        self.cost[:n_struct] = P.T @ lp.cost
        self.constant = lp.constant + float(lp.cost @ shift)

        self.x = np.zeros(self.N)
        self.x[self.art] = b
        self.basis = self.art.copy()
        self.nonbasic = np.ones(self.N, dtype=bool)
        self.nonbasic[self.art] = False
        self.at_upper = np.zeros(self.N, dtype=bool)

    # ========== Pivoting ==========

    def _entering(self, d: np.ndarray, bland: bool) -> tuple[int, float] | None:
        movable = self.nonbasic & (self.upper > self.tol)
        up = movable & ~self.at_upper & (d < -self.tol)
        down = movable & self.at_upper & (d > self.tol)
        candidates = np.flatnonzero(up | down)
        if candidates.size == 0:
            return None
        if bland:
            j = int(candidates[0])
        else:
            j = int(candidates[np.argmax(np.abs(d[candidates]))])
        return j, (1.0 if up[j] else -1.0)

    def _ratio_test(
        self, j: int, sigma: float, bland: bool
    ) -> tuple[float, int | None, bool] | None:
        """Step length, leaving row (None for a bound flip) and leaving-at-upper flag."""
        a = sigma * self.T[:, j]
        xb = self.x[self.basis]
        ub = self.upper[self.basis]

        ratios = np.full(self.m, np.inf)
        to_upper = np.zeros(self.m, dtype=bool)
        dec = a > self.tol
        ratios[dec] = np.maximum(xb[dec], 0.0) / a[dec]
        inc = (a < -self.tol) & np.isfinite(ub)
        ratios[inc] = np.maximum(ub[inc] - xb[inc], 0.0) / -a[inc]
        to_upper[inc] = True

        theta_row = float(ratios.min()) if self.m else np.inf
        theta_flip = float(self.upper[j])
        if not np.isfinite(theta_row) and not np.isfinite(theta_flip):
            return None
        if theta_flip <= theta_row:
            return theta_flip, None, False

        tied = np.flatnonzero(ratios <= theta_row + self.tol)
        if bland:
            r = int(tied[np.argmin(self.basis[tied])])
        else:
            r = int(tied[np.argmax(np.abs(a[tied]))])
        return float(ratios[r]), r, bool(to_upper[r])

    def _pivot(self, r: int, j: int, d: np.ndarray) -> None:
        T = self.T
        T[r] /= T[r, j]
        col = T[:, j].copy()
        col[r] = 0.0
        T -= np.outer(col, T[r])
        T[:, j] = 0.0
        T[r, j] = 1.0
        d -= d[j] * T[r]
        d[j] = 0.0

    def _step(self, j: int, sigma: float, theta: float, r: int | None, to_upper: bool, d: np.ndarray) -> None:
        a = sigma * self.T[:, j]
        self.x[self.basis] -= theta * a
        self.x[j] += sigma * theta
        if r is None:
            self.at_upper[j] = sigma > 0
            self.x[j] = self.upper[j] if sigma > 0 else 0.0
            return
        leaving = int(self.basis[r])
        self._pivot(r, j, d)
        self.x[leaving] = self.upper[leaving] if to_upper else 0.0
        self.at_upper[leaving] = to_upper
        self.nonbasic[leaving] = True
        self.nonbasic[j] = False
        self.at_upper[j] = False
        self.basis[r] = j

    def _optimize(self, cost: np.ndarray, phase: str) -> SolveStatus:
        d = cost - cost[self.basis] @ self.T
        bland_after = self.settings.bland_factor * (self.m + self.N)
        pivots = 0
        while True:
            if self.iterations >= self.settings.max_iterations:
                raise IterationLimitError(self.lp.name or "simplex", self.iterations)
            bland = pivots >= bland_after
            if bland and pivots == bland_after:
                logger.debug(f"{phase}: switching to Bland's rule after {pivots} pivots")
            entering = self._entering(d, bland)
            if entering is None:
                logger.debug(f"{phase}: optimal after {pivots} pivots")
                return SolveStatus.OPTIMAL
            j, sigma = entering
            step = self._ratio_test(j, sigma, bland)
            self.iterations += 1
            if step is None:
                direction = np.zeros(self.N)
                direction[j] = sigma
                direction[self.basis] = -sigma * self.T[:, j]
                self.ray = self.P @ direction[: self.n_struct]
                logger.debug(f"{phase}: unbounded ray along column {j}")
                return SolveStatus.UNBOUNDED
            theta, r, to_upper = step
            self._step(j, sigma, theta, r, to_upper, d)
            pivots += 1

    def _refresh_basic_values(self) -> None:
        """Recompute x_B = B^-1 b - B^-1 N x_N from the artificial block of the tableau."""
        if not self.m:
            return
        binv = self.T[:, self.art]
        nonbasic = np.flatnonzero(self.nonbasic)
        self.x[self.basis] = binv @ self.b - self.T[:, nonbasic] @ self.x[nonbasic]

    def _drive_out_artificials(self) -> None:
        d = np.zeros(self.N)
        for r in range(self.m):
            if self.basis[r] < self.n_real:
                continue
            row = np.abs(self.T[r, : self.n_real]) * self.nonbasic[: self.n_real]
            j = int(np.argmax(row)) if self.n_real else 0
            if self.n_real == 0 or row[j] <= self.tol:
                continue  # redundant row, the artificial stays basic at 0
            leaving = int(self.basis[r])
            self._pivot(r, j, d)
            self.x[leaving] = 0.0
            self.nonbasic[leaving] = True
            self.nonbasic[j] = False
            self.at_upper[j] = False
            self.basis[r] = j
        self.upper[self.art] = 0.0
        self.x[self.art[self.nonbasic[self.art]]] = 0.0

    # ========== Driver ==========

    def solve(self) -> SolveResult:
        phase1_cost = np.zeros(self.N)
        phase1_cost[self.art] = 1.0
        self._optimize(phase1_cost, "phase 1")
        self._refresh_basic_values()
        infeasibility = float(self.x[self.art].sum())
        if infeasibility > self.settings.feasibility_tol:
            logger.debug(f"phase 1 optimum {infeasibility:.3g}: infeasible")
            return SolveResult(SolveStatus.INFEASIBLE, iterations=self.iterations)

        self._drive_out_artificials()
        status = self._optimize(self.cost, "phase 2")
        if status is SolveStatus.UNBOUNDED:
            return SolveResult(SolveStatus.UNBOUNDED, iterations=self.iterations, ray=self.ray)

        self._refresh_basic_values()
        struct = np.clip(self.x[: self.n_struct], 0.0, self.upper[: self.n_struct])
        x = self.shift + self.P @ struct
        x = np.clip(x, self.lp.lower, self.lp.upper)
        residual = self.lp.residual(x)
        if residual > self.settings.feasibility_tol:
            logger.warning(f"{self.lp.name or 'lp'}: primal residual {residual:.3g} above tolerance")
        return SolveResult(
            SolveStatus.OPTIMAL,
            x=x,
            objective=self.lp.objective_value(x),
            iterations=self.iterations,
        )


@solver_call("simplex")
def solve_lp(lp: LinearProgram, settings: Settings | None = None) -> SolveResult:
    """
    Solve an LP with the two-phase bounded simplex.

    Infeasible and unbounded problems are reported through the status, not
    raised. Among alternative optima one vertex is returned; which one is
    deterministic but otherwise unspecified.

    Args:
        lp: Problem to solve
        settings: Tolerances and pivot limits (default: get_settings())

    Returns:
        SolveResult with the optimal vertex, or the unbounded ray
    """
    settings = settings or get_settings()
    with np.errstate(divide="raise", over="raise", invalid="raise"):
        result = _Tableau(lp, settings).solve()
    logger.debug(
        f"{lp.name or 'lp'}: {result.status.value} after {result.iterations} iterations "
        f"({lp.n_rows} rows, {lp.n_vars} columns)"
    )
    return result


def solve_lp_with_fixed(
    lp: LinearProgram,
    fixings: Mapping[int | str, float] | Iterable[tuple[int | str, float]],
    settings: Settings | None = None,
) -> SolveResult:
    """
    Solve with some variables fixed to given values.

    Args:
        lp: Problem to solve
        fixings: {variable index or name: value}
        settings: Tolerances (default: get_settings())

    Returns:
        SolveResult of the restricted problem; Infeasible without pivoting
        when a value lies outside its variable's bounds
    """
    settings = settings or get_settings()
    lower = lp.lower.copy()
    upper = lp.upper.copy()
    items = fixings.items() if isinstance(fixings, Mapping) else fixings
    for key, value in items:
        k = lp.index_of(key) if isinstance(key, str) else int(key)
        value = float(value)
        if not np.isfinite(value):
            raise ValidationError("fixings", f"value for {lp.names[k]} must be finite")
        tol = settings.feasibility_tol
        if value < lp.lower[k] - tol or value > lp.upper[k] + tol:
            logger.debug(f"{lp.name or 'lp'}: fixing {lp.names[k]}={value} outside its bounds")
            return SolveResult(SolveStatus.INFEASIBLE)
        lower[k] = upper[k] = min(max(value, lp.lower[k]), lp.upper[k])
    return solve_lp(lp.with_bounds(lower, upper), settings)
