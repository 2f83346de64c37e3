"""Penalty reformulations of an LPCC as linear programs.

Variable order in every emitted LP is fixed: the x block, the y block and,
for the expanded form only, u, v+ and v- (one entry per complementarity
pair each).
"""

import logging
from dataclasses import dataclass

import numpy as np

from lpcc_core.config import get_settings
from lpcc_core.exceptions import DimensionError, ValidationError
from lpcc_core.model import AffineExpr, MpecProblem, Point, Relation, eval_g, penalty_expr, stack_rows
from lpcc_core.simplex import LinearProgram

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PenaltyScalarization:
    """
    Per-pair penalty weights L_i.

    All-zero weights are the drop-complementarity mode: the penalty
    objective reduces to f.
    """

    weights: np.ndarray

    def __post_init__(self) -> None:
        weights = np.array(self.weights, dtype=float).reshape(-1)
        if not np.isfinite(weights).all():
            raise ValidationError("L", "weights must be finite")
        if (weights < 0).any():
            raise ValidationError("L", "weights must be nonnegative")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, L: float, n_y: int) -> "PenaltyScalarization":
        """Scalar L replicated over n_y pairs."""
        return cls(np.full(n_y, float(L)))

    @property
    def is_uniform(self) -> bool:
        return bool(np.all(self.weights == self.weights[0])) if len(self.weights) else True

    @property
    def drops_complementarity(self) -> bool:
        return not bool(np.any(self.weights))

    def describe(self) -> str:
        if self.is_uniform:
            return f"L={self.weights[0] if len(self.weights) else 0.0:g}"
        return "L=(" + ", ".join(f"{w:g}" for w in self.weights) + ")"


def as_scalarization(p: MpecProblem, s: "PenaltyScalarization | float") -> PenaltyScalarization:
    """Accept a scalar L or a weight vector and check it against p."""
    if not isinstance(s, PenaltyScalarization):
        s = PenaltyScalarization.uniform(s, p.n_y)
    if len(s.weights) != p.n_y:
        raise DimensionError("L", p.n_y, len(s.weights))
    return s


def build_gamma_lp(p: MpecProblem, objective: AffineExpr, name: str = "") -> LinearProgram:
    """
    LP over Gamma (Omega rows, g >= 0, bounds) with the given affine objective.

    Complementarity is dropped; this is the feasible set every scalarized
    solve shares.
    """
    omega, relations, rhs = stack_rows(p, p.omega)
    g_matrix, g_constants = p.g_matrix()
    return LinearProgram(
        cost=objective.coeffs,
        matrix=np.vstack([omega, g_matrix]),
        relations=tuple(relations) + (Relation.GE,) * p.n_y,
        rhs=np.concatenate([rhs, -g_constants]),
        lower=p.lower,
        upper=p.upper,
        names=p.names,
        constant=objective.constant,
        name=name or p.name,
    )


def penalty_objective(p: MpecProblem, s: "PenaltyScalarization | float") -> AffineExpr:
    """f + sum_i L_i (y_i + g_i) / 2 as an affine expression."""
    s = as_scalarization(p, s)
    total = p.objective
    for i, gi in enumerate(p.g):
        weight = s.weights[i] / 2.0
        if weight == 0.0:
            continue
        y_term = AffineExpr.from_terms(p.n_x, p.n_y, y={i: weight})
        total = total + y_term + gi.scaled(weight)
    return total


def build_penalty_lp(p: MpecProblem, s: "PenaltyScalarization | float") -> LinearProgram:
    """
    The simplified penalty LP: min f + sum_i L_i (y_i + g_i)/2 over Gamma.

    Args:
        p: LPCC instance
        s: Scalarization or scalar L (replicated)

    Returns:
        LinearProgram over the stacked (x, y) vector
    """
    s = as_scalarization(p, s)
    lp = build_gamma_lp(p, penalty_objective(p, s), name=f"{p.name or 'lpcc'} penalty {s.describe()}")
    logger.debug(f"{lp.name}: {lp.n_rows} rows, {lp.n_vars} columns")
    return lp


def expansion_names(p: MpecProblem) -> tuple[str, ...]:
    """Names of the u, v+ and v- columns."""
    return (
        tuple(f"u_{name}" for name in p.y_names)
        + tuple(f"vplus_{name}" for name in p.y_names)
        + tuple(f"vminus_{name}" for name in p.y_names)
    )


def expansion_rows(p: MpecProblem) -> tuple[np.ndarray, list[Relation], np.ndarray]:
    """
    The three constraint blocks tying (x, y) to (u, v+, v-):

        u - v+ - v- = 0
        u - (y + g) / 2 = 0
        v+ - v- - (y - g) / 2 = 0

    over the columns (x, y, u, v+, v-).
    """
    n, k = p.n_vars, p.n_y
    g_matrix, g_constants = p.g_matrix()
    e_y = np.zeros((k, n))
    e_y[:, p.n_x :] = np.eye(k)
    eye, zero = np.eye(k), np.zeros((k, k))

    split = np.hstack([np.zeros((k, n)), eye, -eye, -eye])
    mean = np.hstack([-(e_y + g_matrix) / 2.0, eye, zero, zero])
    diff = np.hstack([-(e_y - g_matrix) / 2.0, zero, eye, -eye])

    matrix = np.vstack([split, mean, diff])
    rhs = np.concatenate([np.zeros(k), g_constants / 2.0, -g_constants / 2.0])
    return matrix, [Relation.EQ] * (3 * k), rhs


def build_penalty_expanded(p: MpecProblem, s: "PenaltyScalarization | float") -> LinearProgram:
    """
    The expanded penalty LP over (x, y, u, v+, v-).

    Objective f + sum_i L_i (v+_i + v-_i) subject to Gamma and the
    expansion rows. The rows force v+ = y/2 and v- = g/2, so the optimal
    value equals that of build_penalty_lp.
    """
    s = as_scalarization(p, s)
    k = p.n_y
    gamma = build_gamma_lp(p, p.objective)
    extra, extra_relations, extra_rhs = expansion_rows(p)

    padded = np.hstack([gamma.matrix, np.zeros((gamma.n_rows, 3 * k))])
    cost = np.concatenate([gamma.cost, np.zeros(k), s.weights, s.weights])
    lp = LinearProgram(
        cost=cost,
        matrix=np.vstack([padded, extra]),
        relations=gamma.relations + tuple(extra_relations),
        rhs=np.concatenate([gamma.rhs, extra_rhs]),
        lower=np.concatenate([gamma.lower, np.zeros(3 * k)]),
        upper=np.concatenate([gamma.upper, np.full(3 * k, np.inf)]),
        names=gamma.names + expansion_names(p),
        constant=gamma.constant,
        name=f"{p.name or 'lpcc'} expanded penalty {s.describe()}",
    )
    logger.debug(f"{lp.name}: {lp.n_rows} rows, {lp.n_vars} columns")
    return lp


@dataclass(frozen=True, eq=False)
class SchurExpansion:
    """Auxiliary variables u, v+, v- of the expanded form, one entry per pair."""

    u: np.ndarray
    v_plus: np.ndarray
    v_minus: np.ndarray

    def __post_init__(self) -> None:
        u = np.array(self.u, dtype=float).reshape(-1)
        v_plus = np.array(self.v_plus, dtype=float).reshape(-1)
        v_minus = np.array(self.v_minus, dtype=float).reshape(-1)
        if len(v_plus) != len(u):
            raise DimensionError("v_plus", len(u), len(v_plus))
        if len(v_minus) != len(u):
            raise DimensionError("v_minus", len(u), len(v_minus))
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v_plus", v_plus)
        object.__setattr__(self, "v_minus", v_minus)

    @classmethod
    def from_point(cls, p: MpecProblem, pt: Point) -> "SchurExpansion":
        """
        Canonical expansion of (x, y): u = (y+g)/2, v+ = max((y-g)/2, 0),
        v- = max((g-y)/2, 0).

        Its sos1_gap() equals min(y_i, g_i) componentwise.
        """
        g = eval_g(p, pt)
        half_diff = (pt.y - g) / 2.0
        return cls(
            u=(pt.y + g) / 2.0,
            v_plus=np.maximum(half_diff, 0.0),
            v_minus=np.maximum(-half_diff, 0.0),
        )

    @classmethod
    def from_solution(cls, p: MpecProblem, z: np.ndarray) -> "SchurExpansion":
        """Slice u, v+, v- out of a solution of build_penalty_expanded."""
        n, k = p.n_vars, p.n_y
        z = np.asarray(z, dtype=float)
        if len(z) != n + 3 * k:
            raise DimensionError("z", n + 3 * k, len(z))
        return cls(z[n : n + k], z[n + k : n + 2 * k], z[n + 2 * k :])

    def sos1_gap(self) -> np.ndarray:
        """Residual u - (v+ + v-) of the split row."""
        return self.u - (self.v_plus + self.v_minus)


def check_sos1(expansion: SchurExpansion, tol: float | None = None) -> tuple[bool, ...]:
    """
    Per-pair SOS1 test: pair i passes iff min(v+_i, v-_i) <= tol.

    Args:
        expansion: Auxiliary values to test
        tol: Zero threshold (default: Settings.complementarity_tol)
    """
    tol = get_settings().complementarity_tol if tol is None else tol
    smaller = np.minimum(expansion.v_plus, expansion.v_minus)
    return tuple(bool(value <= tol) for value in smaller)
