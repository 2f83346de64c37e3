"""LPCC instance model: affine data over (x, y) and point evaluation.

An instance is

    min f(x, y)  s.t.  (x, y) in Omega,  y >= 0,  g(x, y) >= 0,  y_i * g_i(x, y) = 0

with f and every g_i affine. Pair i couples y_i with g_i (positional pairing).
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from types import MappingProxyType

import numpy as np

from lpcc_core.config import get_settings
from lpcc_core.exceptions import DimensionError, InvalidProblemError, ValidationError


def _frozen_vector(values: Iterable[float] | np.ndarray, name: str) -> np.ndarray:
    """Copy values into a read-only float vector, rejecting NaN."""
    arr = np.array(values, dtype=float).reshape(-1)
    if np.isnan(arr).any():
        raise InvalidProblemError(f"{name} contains NaN")
    arr.setflags(write=False)
    return arr


class Relation(StrEnum):
    """Row sense of a linear constraint `expr (relation) 0`."""

    LE = "<="
    EQ = "="
    GE = ">="


@dataclass(frozen=True, eq=False)
class AffineExpr:
    """
    Affine function coeffs_x . x + coeffs_y . y + constant.

    Example:
        g1 = AffineExpr.from_terms(2, 1, x={0: -1.0, 1: -1.0}, constant=10.0)
    """

    coeffs_x: np.ndarray
    coeffs_y: np.ndarray
    constant: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs_x", _frozen_vector(self.coeffs_x, "coeffs_x"))
        object.__setattr__(self, "coeffs_y", _frozen_vector(self.coeffs_y, "coeffs_y"))
        constant = float(self.constant)
        if not np.isfinite(constant):
            raise InvalidProblemError("affine constant must be finite")
        if not (np.isfinite(self.coeffs_x).all() and np.isfinite(self.coeffs_y).all()):
            raise InvalidProblemError("affine coefficients must be finite")
        object.__setattr__(self, "constant", constant)

    @classmethod
    def zeros(cls, n_x: int, n_y: int, constant: float = 0.0) -> "AffineExpr":
        """Constant expression over n_x + n_y variables."""
        return cls(np.zeros(n_x), np.zeros(n_y), constant)

    @classmethod
    def from_terms(
        cls,
        n_x: int,
        n_y: int,
        x: Mapping[int, float] | None = None,
        y: Mapping[int, float] | None = None,
        constant: float = 0.0,
    ) -> "AffineExpr":
        """Build from sparse {index: coefficient} maps (0-based)."""
        cx = np.zeros(n_x)
        cy = np.zeros(n_y)
        for idx, value in (x or {}).items():
            cx[idx] += value
        for idx, value in (y or {}).items():
            cy[idx] += value
        return cls(cx, cy, constant)

    @property
    def n_x(self) -> int:
        return len(self.coeffs_x)

    @property
    def n_y(self) -> int:
        return len(self.coeffs_y)

    @property
    def coeffs(self) -> np.ndarray:
        """Coefficients over the stacked (x, y) vector."""
        return np.concatenate([self.coeffs_x, self.coeffs_y])

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> float:
        """Value at (x, y)."""
        return float(self.coeffs_x @ x + self.coeffs_y @ y + self.constant)

    def evaluate_stacked(self, z: np.ndarray) -> float:
        """Value at the stacked vector z = (x, y)."""
        return float(self.coeffs @ z + self.constant)

    def isclose(self, other: "AffineExpr", tol: float = 1e-12) -> bool:
        """Coefficient-wise comparison within an absolute tolerance."""
        return (
            self.n_x == other.n_x
            and self.n_y == other.n_y
            and bool(np.allclose(self.coeffs, other.coeffs, rtol=0.0, atol=tol))
            and abs(self.constant - other.constant) <= tol
        )

    def scaled(self, factor: float) -> "AffineExpr":
        return AffineExpr(self.coeffs_x * factor, self.coeffs_y * factor, self.constant * factor)

    def __add__(self, other: "AffineExpr") -> "AffineExpr":
        return AffineExpr(
            self.coeffs_x + other.coeffs_x,
            self.coeffs_y + other.coeffs_y,
            self.constant + other.constant,
        )

    def __sub__(self, other: "AffineExpr") -> "AffineExpr":
        return self + other.scaled(-1.0)


@dataclass(frozen=True, eq=False)
class LinearConstraint:
    """Row of Omega: `expr (relation) 0`, right-hand side folded into the constant."""

    expr: AffineExpr
    relation: Relation
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "relation", Relation(self.relation))

    def violation(self, x: np.ndarray, y: np.ndarray) -> float:
        """Amount by which (x, y) violates the row (0 when satisfied)."""
        value = self.expr.evaluate(x, y)
        if self.relation is Relation.LE:
            return max(value, 0.0)
        if self.relation is Relation.GE:
            return max(-value, 0.0)
        return abs(value)


@dataclass(frozen=True, eq=False)
class Point:
    """Decision vector (x, y)."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self) -> None:
        x = np.array(self.x, dtype=float).reshape(-1)
        y = np.array(self.y, dtype=float).reshape(-1)
        if not (np.isfinite(x).all() and np.isfinite(y).all()):
            raise ValidationError("point", "entries must be finite")
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_vector(cls, z: np.ndarray, n_x: int) -> "Point":
        """Split a stacked (x, y) vector."""
        z = np.asarray(z, dtype=float)
        return cls(z[:n_x], z[n_x:])

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.x, self.y])


@dataclass(frozen=True, eq=False)
class MpecProblem:
    """
    LPCC instance with affine f, g and polyhedral Omega.

    Bounds default to [0, +inf) for every variable. y is always kept
    nonnegative: Gamma = {(x, y) in Omega : y >= 0, g(x, y) >= 0}.
    """

    n_x: int
    n_y: int
    objective: AffineExpr
    g: tuple[AffineExpr, ...]
    omega: tuple[LinearConstraint, ...] = ()
    lower_x: np.ndarray | None = None
    upper_x: np.ndarray | None = None
    lower_y: np.ndarray | None = None
    upper_y: np.ndarray | None = None
    name: str = ""
    x_names: tuple[str, ...] = ()
    y_names: tuple[str, ...] = ()
    params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n_x < 0 or self.n_y < 0:
            raise InvalidProblemError("dimensions must be nonnegative")
        object.__setattr__(self, "g", tuple(self.g))
        object.__setattr__(self, "omega", tuple(self.omega))
        if len(self.g) != self.n_y:
            raise InvalidProblemError(f"g has {len(self.g)} entries, expected n_y={self.n_y}")

        self._check_expr("objective", self.objective)
        for i, gi in enumerate(self.g):
            self._check_expr(f"g[{i}]", gi)
        for i, row in enumerate(self.omega):
            self._check_expr(f"omega[{i}]", row.expr)

        for attr, size, default in (
            ("lower_x", self.n_x, 0.0),
            ("upper_x", self.n_x, np.inf),
            ("lower_y", self.n_y, 0.0),
            ("upper_y", self.n_y, np.inf),
        ):
            value = getattr(self, attr)
            if value is None:
                vec = np.full(size, default)
            else:
                vec = np.array(value, dtype=float).reshape(-1)
            if len(vec) != size:
                raise InvalidProblemError(f"{attr} has length {len(vec)}, expected {size}")
            object.__setattr__(self, attr, _frozen_vector(vec, attr))

        if (self.lower_x > self.upper_x).any() or (self.lower_y > self.upper_y).any():
            raise InvalidProblemError("every bound pair must satisfy lower <= upper")
        if np.isposinf(self.lower_x).any() or np.isposinf(self.lower_y).any():
            raise InvalidProblemError("lower bounds must be below +inf")

        x_names = tuple(self.x_names) or tuple(f"x{i + 1}" for i in range(self.n_x))
        y_names = tuple(self.y_names) or tuple(f"y{i + 1}" for i in range(self.n_y))
        if len(x_names) != self.n_x or len(y_names) != self.n_y:
            raise InvalidProblemError("variable name count does not match dimensions")
        if len(set(x_names + y_names)) != self.n_x + self.n_y:
            raise InvalidProblemError("variable names must be unique")
        object.__setattr__(self, "x_names", x_names)
        object.__setattr__(self, "y_names", y_names)
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    def _check_expr(self, label: str, expr: AffineExpr) -> None:
        if expr.n_x != self.n_x or expr.n_y != self.n_y:
            raise InvalidProblemError(
                f"{label} is defined over ({expr.n_x}, {expr.n_y}) variables, "
                f"expected ({self.n_x}, {self.n_y})"
            )

    @property
    def n_vars(self) -> int:
        return self.n_x + self.n_y

    @property
    def names(self) -> tuple[str, ...]:
        """Variable names in stacked order (x block, then y block)."""
        return self.x_names + self.y_names

    @property
    def lower(self) -> np.ndarray:
        """Stacked lower bounds with y clipped at 0 (Gamma requires y >= 0)."""
        return np.concatenate([self.lower_x, np.maximum(self.lower_y, 0.0)])

    @property
    def upper(self) -> np.ndarray:
        return np.concatenate([self.upper_x, self.upper_y])

    def g_matrix(self) -> tuple[np.ndarray, np.ndarray]:
        """Rows of g over the stacked vector and their constants."""
        if not self.g:
            return np.zeros((0, self.n_vars)), np.zeros(0)
        return (
            np.vstack([gi.coeffs for gi in self.g]),
            np.array([gi.constant for gi in self.g]),
        )


def _check_point(p: MpecProblem, pt: Point) -> None:
    if len(pt.x) != p.n_x:
        raise DimensionError("x", p.n_x, len(pt.x))
    if len(pt.y) != p.n_y:
        raise DimensionError("y", p.n_y, len(pt.y))


def eval_f(p: MpecProblem, pt: Point) -> float:
    """Upper-level objective f at pt."""
    _check_point(p, pt)
    return p.objective.evaluate(pt.x, pt.y)


def eval_g(p: MpecProblem, pt: Point) -> np.ndarray:
    """Lower-level map g at pt, one entry per complementarity pair."""
    _check_point(p, pt)
    return np.array([gi.evaluate(pt.x, pt.y) for gi in p.g], dtype=float)


def penalty_expr(p: MpecProblem) -> AffineExpr:
    """The penalty term f^pen = sum_i (y_i + g_i) / 2 as an affine expression."""
    total = AffineExpr(np.zeros(p.n_x), np.ones(p.n_y))
    for gi in p.g:
        total = total + gi
    return total.scaled(0.5)


def eval_fpen(p: MpecProblem, pt: Point) -> float:
    """Penalty term f^pen at pt."""
    g = eval_g(p, pt)
    return float(np.sum(pt.y + g) / 2.0)


def weighted_value(p: MpecProblem, pt: Point, L: float) -> float:
    """Scalarized objective f + L * f^pen at pt."""
    return eval_f(p, pt) + L * eval_fpen(p, pt)


def is_feasible(p: MpecProblem, pt: Point, tol: float | None = None) -> bool:
    """
    Check membership in Gamma within tol.

    Omega rows, variable bounds, y >= 0 and g >= 0 are all tested with the
    same absolute tolerance. Complementarity is not part of Gamma.
    """
    tol = get_settings().eval_tol if tol is None else tol
    if tol <= 0:
        raise ValidationError("tol", "must be positive")
    _check_point(p, pt)

    z = pt.as_vector()
    if (z < p.lower - tol).any() or (z > p.upper + tol).any():
        return False
    if (eval_g(p, pt) < -tol).any():
        return False
    return all(row.violation(pt.x, pt.y) <= tol for row in p.omega)


def stack_rows(
    p: MpecProblem, rows: Sequence[LinearConstraint]
) -> tuple[np.ndarray, list[Relation], np.ndarray]:
    """Matrix, senses and right-hand sides of rows over the stacked vector."""
    if not rows:
        return np.zeros((0, p.n_vars)), [], np.zeros(0)
    matrix = np.vstack([row.expr.coeffs for row in rows])
    rhs = np.array([-row.expr.constant for row in rows])
    return matrix, [row.relation for row in rows], rhs
