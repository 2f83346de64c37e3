"""Complementarity checks on candidate solutions."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from lpcc_core.config import get_settings
from lpcc_core.exceptions import DimensionError, ValidationError
from lpcc_core.model import MpecProblem, Point, eval_g


@dataclass(frozen=True)
class PairCheck:
    """One complementarity pair at a point."""

    index: int
    name: str
    y: float
    g: float
    product: float
    satisfied: bool


@dataclass(frozen=True)
class ComplementarityReport:
    """Per-pair verdicts; satisfied is their conjunction."""

    pairs: tuple[PairCheck, ...]
    tol: float

    @property
    def satisfied(self) -> bool:
        return all(pair.satisfied for pair in self.pairs)

    @property
    def violated(self) -> tuple[PairCheck, ...]:
        return tuple(pair for pair in self.pairs if not pair.satisfied)

    @property
    def max_product(self) -> float:
        return max((abs(pair.product) for pair in self.pairs), default=0.0)

    def summary(self) -> str:
        if self.satisfied:
            return f"complementary ({len(self.pairs)} pairs, tol {self.tol:g})"
        names = ", ".join(pair.name for pair in self.violated)
        return f"not complementary: {names}"


def complementarity_report(
    y: np.ndarray,
    g: np.ndarray,
    tol: float | None = None,
    names: Sequence[str] | None = None,
) -> ComplementarityReport:
    """
    Test |y_i * g_i| <= tol * (1 + |y_i|) * (1 + |g_i|) for every pair.

    Args:
        y: Lower-level variables
        g: Paired values of g
        tol: Relative tolerance (default: Settings.complementarity_tol)
        names: Pair labels (default: y1, y2, ...)
    """
    tol = get_settings().complementarity_tol if tol is None else tol
    if tol <= 0:
        raise ValidationError("tol", "must be positive")
    y = np.asarray(y, dtype=float).reshape(-1)
    g = np.asarray(g, dtype=float).reshape(-1)
    if len(g) != len(y):
        raise DimensionError("g", len(y), len(g))
    names = list(names) if names is not None else [f"y{i + 1}" for i in range(len(y))]

    pairs = []
    for i, (yi, gi) in enumerate(zip(y, g)):
        product = float(yi * gi)
        bound = tol * (1.0 + abs(yi)) * (1.0 + abs(gi))
        pairs.append(PairCheck(i, names[i], float(yi), float(gi), product, abs(product) <= bound))
    return ComplementarityReport(tuple(pairs), tol)


def check_complementarity(
    p: MpecProblem, pt: Point, tol: float | None = None
) -> ComplementarityReport:
    """Complementarity report for pt on p."""
    return complementarity_report(pt.y, eval_g(p, pt), tol, p.y_names)
