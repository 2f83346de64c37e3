"""Constructors for the four reference instances."""

import numpy as np

from lpcc_core.exceptions import ValidationError
from lpcc_core.model import AffineExpr, LinearConstraint, MpecProblem, Relation
from lpcc_oracle.blackbox import BlackBoxProblem

EX4_BOX_X = 24.0
EX4_BOX_Y = 12.0


def build_ex1(K: float = 10.0) -> MpecProblem:
    """
    Seven x, three y; the only complementary optimum is x=(7,3,0,0,0,0,3), y=(3,1,0).

    x3 - x4 and x5 - x6 split |x1 - 7| and |x2 - 3| so that f measures the
    distance to (7, 3). K scales y3 in the stationarity row and g3 = K * x2.

    Args:
        K: Positive coupling parameter (10 gives the tabulated instance)

    Raises:
        ValidationError: K <= 0 or not finite
    """
    if not np.isfinite(K) or K <= 0:
        raise ValidationError("K", "must be positive")

    def expr(
        x: dict[int, float] | None = None, y: dict[int, float] | None = None, c: float = 0.0
    ) -> AffineExpr:
        return AffineExpr.from_terms(7, 3, x, y, c)

    omega = (
        LinearConstraint(expr(x={2: 1.0, 3: -1.0, 0: -1.0}, c=7.0), Relation.EQ, "abs1"),
        LinearConstraint(expr(x={4: 1.0, 5: -1.0, 1: -1.0}, c=3.0), Relation.EQ, "abs2"),
        LinearConstraint(expr(y={0: 1.0}, c=-3.0), Relation.EQ, "stat1"),
        LinearConstraint(expr(y={0: 1.0, 1: 1.0, 2: -K}, c=-4.0), Relation.EQ, "stat2"),
    )
    g = (
        expr(x={0: -1.0, 1: -1.0}, c=10.0),
        expr(x={6: 1.0, 1: -1.0}),
        expr(x={1: K}),
    )
    return MpecProblem(
        n_x=7,
        n_y=3,
        objective=expr(x={2: 1.0, 3: 1.0, 4: 1.0, 5: 1.0}),
        g=g,
        omega=omega,
        name="EX1",
        params={"K": float(K)},
    )


def build_ex2() -> MpecProblem:
    """min -y s.t. y <= 4, g = 10 - 2y; every penalty solve lands on y = 4."""
    return MpecProblem(
        n_x=0,
        n_y=1,
        objective=AffineExpr.from_terms(0, 1, y={0: -1.0}),
        g=(AffineExpr.from_terms(0, 1, y={0: -2.0}, constant=10.0),),
        upper_y=np.array([4.0]),
        name="EX2",
        y_names=("y",),
    )


def build_ex3() -> MpecProblem:
    """min -x3 - y2 with x3 <= 20, y2 <= 10, g1 = 10 - x1 - x2, g2 = x3 - x2."""
    return MpecProblem(
        n_x=3,
        n_y=2,
        objective=AffineExpr.from_terms(3, 2, x={2: -1.0}, y={1: -1.0}),
        g=(
            AffineExpr.from_terms(3, 2, x={0: -1.0, 1: -1.0}, constant=10.0),
            AffineExpr.from_terms(3, 2, x={2: 1.0, 1: -1.0}),
        ),
        upper_x=np.array([np.inf, np.inf, 20.0]),
        upper_y=np.array([np.inf, 10.0]),
        name="EX3",
    )


def _ex4_parts(points: np.ndarray) -> tuple[np.ndarray, ...]:
    x, y1, y2 = points[:, 0], points[:, 1], points[:, 2]
    f = (y1 + y2 + x - 12.0) * x
    fpen = 2.0 * (y1 + y2) + x - 12.0
    g1 = x + 2.0 * y1 + y2 - 12.0
    g2 = x + y1 + 2.0 * y2 - 12.0
    return f, fpen, g1, g2


def build_ex4(L: float = 0.0) -> BlackBoxProblem:
    """
    Bilinear instance minimized through the grid oracle.

    Minimizes (y1 + y2 + x - 12) x + L (2 (y1 + y2) + x - 12) subject to
    g1 = x + 2 y1 + y2 - 12 >= 0 and g2 = x + y1 + 2 y2 - 12 >= 0 on the box
    x in [0, 24], y in [0, 12]^2. Complementarity is dropped; at the
    optimum g = (0, 0) for every L >= 0.

    Raises:
        ValidationError: L < 0 or not finite
    """
    if not np.isfinite(L) or L < 0:
        raise ValidationError("L", "must be finite and nonnegative")
    weight = float(L)

    def evaluate(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        f, fpen, g1, g2 = _ex4_parts(points)
        violations = np.column_stack([np.maximum(-g1, 0.0), np.maximum(-g2, 0.0)])
        return f + weight * fpen, violations

    def criteria(points: np.ndarray) -> np.ndarray:
        f, fpen, _, _ = _ex4_parts(points)
        return np.column_stack([f, fpen])

    def pairs(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        _, _, g1, g2 = _ex4_parts(points)
        return points[:, 1:], np.column_stack([g1, g2])

    return BlackBoxProblem(
        evaluate=evaluate,
        lower=np.zeros(3),
        upper=np.array([EX4_BOX_X, EX4_BOX_Y, EX4_BOX_Y]),
        n_x=1,
        name="EX4",
        variable_names=("x", "y1", "y2"),
        criteria=criteria,
        pairs=pairs,
        params={"L": weight},
    )
