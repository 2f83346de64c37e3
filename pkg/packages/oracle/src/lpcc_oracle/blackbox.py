"""Black-box problem interface for the grid oracle."""

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from lpcc_core.exceptions import DimensionError, InvalidProblemError

# points[N, d] -> (values[N], violations[N, m]); violations are >= 0, 0 when satisfied
Evaluator = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]
# points[N, d] -> columns (f, fpen) of shape [N, 2]
Criteria = Callable[[np.ndarray], np.ndarray]
# points[N, d] -> (y[N, k], g[N, k])
Pairs = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True, eq=False)
class BlackBoxProblem:
    """
    Minimize a vectorized function over a finite box.

    The first n_x coordinates are x, the rest y. criteria and pairs are
    optional hooks that let callers split a result into (f, f^pen) and
    report complementarity.
    """

    evaluate: Evaluator
    lower: np.ndarray
    upper: np.ndarray
    n_x: int
    name: str = ""
    variable_names: tuple[str, ...] = ()
    criteria: Criteria | None = None
    pairs: Pairs | None = None
    params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        lower = np.array(self.lower, dtype=float).reshape(-1)
        upper = np.array(self.upper, dtype=float).reshape(-1)
        if len(lower) != len(upper):
            raise DimensionError("upper", len(lower), len(upper))
        if not (np.isfinite(lower).all() and np.isfinite(upper).all()):
            raise InvalidProblemError("black-box box must be finite")
        if (lower > upper).any():
            raise InvalidProblemError("every bound pair must satisfy lower <= upper")
        if not 0 <= self.n_x <= len(lower):
            raise InvalidProblemError(f"n_x={self.n_x} outside 0..{len(lower)}")
        names = tuple(self.variable_names) or tuple(
            [f"x{i + 1}" for i in range(self.n_x)]
            + [f"y{i + 1}" for i in range(len(lower) - self.n_x)]
        )
        if len(names) != len(lower):
            raise InvalidProblemError(f"{len(names)} names for {len(lower)} variables")
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "variable_names", names)
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    @property
    def dimension(self) -> int:
        return len(self.lower)

    def evaluate_one(self, z: np.ndarray) -> tuple[float, np.ndarray]:
        """Value and violation vector at a single point."""
        z = np.asarray(z, dtype=float).reshape(1, -1)
        if z.shape[1] != self.dimension:
            raise DimensionError("z", self.dimension, z.shape[1])
        values, violations = self.evaluate(z)
        return float(values[0]), np.asarray(violations)[0]

    def restricted(self, lower: np.ndarray, upper: np.ndarray) -> "BlackBoxProblem":
        """Same problem on a sub-box."""
        return BlackBoxProblem(
            evaluate=self.evaluate,
            lower=lower,
            upper=upper,
            n_x=self.n_x,
            name=self.name,
            variable_names=self.variable_names,
            criteria=self.criteria,
            pairs=self.pairs,
            params=self.params,
        )

    def first_criterion(self) -> "BlackBoxProblem":
        """
        The same box and constraints with f alone as the objective.

        Requires criteria.
        """
        if self.criteria is None:
            raise InvalidProblemError(f"{self.name or 'black-box'} has no criteria to split f from f^pen")
        criteria = self.criteria
        evaluate = self.evaluate

        def evaluate_f(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
            _, violations = evaluate(points)
            return criteria(points)[:, 0], violations

        return BlackBoxProblem(
            evaluate=evaluate_f,
            lower=self.lower,
            upper=self.upper,
            n_x=self.n_x,
            name=f"{self.name} f only" if self.name else "f only",
            variable_names=self.variable_names,
            criteria=self.criteria,
            pairs=self.pairs,
            params={**self.params, "L": 0.0},
        )
