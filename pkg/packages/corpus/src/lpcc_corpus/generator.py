"""Small random LPCCs.

Integral mode: Omega rows are difference constraints v_a - v_b <= c and
every g_i is either c_i + v_a - v_b or c_i - v_a, all on the integer box
[0, U]. Fixing y_i = 0 or g_i = 0 keeps every piece's constraint matrix
totally unimodular, so each piece has an integral optimal vertex and an
integer grid of U + 1 points per axis contains the exact optimum.

Float mode: uniform real coefficients. Each g_i leans on its own y_i with
a coefficient of at least 1 in magnitude while every other coefficient
stays below 0.3, and the optional Omega row is a packing row with
nonnegative coefficients. Optima sit anywhere in the box, so grid checks
need a grid-scale tolerance.

In both modes the origin is feasible and complementary.
"""

import numpy as np

from lpcc_core.exceptions import ValidationError
from lpcc_core.model import AffineExpr, LinearConstraint, MpecProblem, Relation

MAX_BOX = 3
FLOAT_OFF_DIAGONAL = 0.3


def _difference(n_x: int, n_y: int, a: int, b: int, constant: float, sign: float) -> AffineExpr:
    coeffs = np.zeros(n_x + n_y)
    coeffs[a] += sign
    coeffs[b] -= sign
    return AffineExpr(coeffs[:n_x], coeffs[n_x:], constant)


def _split(coeffs: np.ndarray, n_x: int, constant: float = 0.0) -> AffineExpr:
    return AffineExpr(coeffs[:n_x], coeffs[n_x:], constant)


def _integral_data(
    rng: np.random.Generator, n_x: int, n_y: int, upper: float, rows: int
) -> tuple[AffineExpr, tuple[AffineExpr, ...], tuple[LinearConstraint, ...]]:
    n = n_x + n_y
    bound = int(upper)
    omega = []
    for k in range(rows):
        a, b = rng.choice(n, size=2, replace=False)
        c = float(rng.integers(0, bound + 1))
        # v_a - v_b - c <= 0
        expr = _difference(n_x, n_y, int(a), int(b), -c, 1.0)
        omega.append(LinearConstraint(expr, Relation.LE, f"r{k + 1}"))

    g = []
    for _ in range(n_y):
        c = float(rng.integers(0, bound + 1))
        a, b = rng.choice(n, size=2, replace=False) if n >= 2 else (0, 0)
        kind = int(rng.integers(0, 3)) if n >= 2 else 2
        if kind == 2:
            coeffs = np.zeros(n)
            coeffs[a] = -1.0
            g.append(_split(coeffs, n_x, c))
        else:
            g.append(_difference(n_x, n_y, int(a), int(b), c, 1.0 if kind == 0 else -1.0))

    cost = rng.integers(-3, 4, size=n).astype(float)
    return _split(cost, n_x), tuple(g), tuple(omega)


def _float_data(
    rng: np.random.Generator, n_x: int, n_y: int, upper: float, rows: int
) -> tuple[AffineExpr, tuple[AffineExpr, ...], tuple[LinearConstraint, ...]]:
    n = n_x + n_y
    g = []
    for i in range(n_y):
        coeffs = rng.uniform(-FLOAT_OFF_DIAGONAL, FLOAT_OFF_DIAGONAL, size=n)
        coeffs[n_x + i] = rng.choice([-1.0, 1.0]) * rng.uniform(1.0, 2.0)
        g.append(_split(coeffs, n_x, float(rng.uniform(0.2, 1.0) * upper)))

    omega = []
    for k in range(min(rows, 1)):
        coeffs = rng.uniform(0.0, 1.0, size=n)
        c = float(rng.uniform(0.5, 1.5) * upper)
        omega.append(LinearConstraint(_split(coeffs, n_x, -c), Relation.LE, f"r{k + 1}"))

    cost = rng.uniform(-1.0, 1.0, size=n)
    return _split(cost, n_x), tuple(g), tuple(omega)


def random_lpcc(
    seed: int,
    n_x: int = 2,
    n_y: int = 2,
    box: int | None = None,
    n_rows: int | None = None,
    integral: bool = True,
) -> MpecProblem:
    """
    Random desk-scale LPCC, reproducible from seed.

    Args:
        seed: Seed for numpy.random.default_rng
        n_x: Number of x variables (0..3)
        n_y: Number of complementarity pairs (1..3)
        box: Upper bound U of every variable, 1..3 (default: drawn)
        n_rows: Number of Omega rows (default: drawn in 0..n_x + n_y;
            float mode keeps at most one)
        integral: Integral pieces (True) or real coefficients (False)

    Raises:
        ValidationError: dimensions or box outside the supported range
    """
    if not 0 <= n_x <= 3:
        raise ValidationError("n_x", "must be in 0..3")
    if not 1 <= n_y <= 3:
        raise ValidationError("n_y", "must be in 1..3")
    if box is not None and not 1 <= box <= MAX_BOX:
        raise ValidationError("box", f"must be in 1..{MAX_BOX}")

    rng = np.random.default_rng(seed)
    n = n_x + n_y
    upper = float(box) if box is not None else float(rng.integers(1, MAX_BOX + 1))
    rows = int(rng.integers(0, n + 1)) if n_rows is None else n_rows
    if n < 2:
        rows = 0

    build = _integral_data if integral else _float_data
    objective, g, omega = build(rng, n_x, n_y, upper, rows)
    return MpecProblem(
        n_x=n_x,
        n_y=n_y,
        objective=objective,
        g=g,
        omega=omega,
        upper_x=np.full(n_x, upper),
        upper_y=np.full(n_y, upper),
        name=f"random-{seed}" if integral else f"random-float-{seed}",
        params={"seed": float(seed), "box": upper, "integral": float(integral)},
    )
