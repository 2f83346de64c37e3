"""LPCC Oracle - Grid-refinement minimizer and brute-force checks."""

__version__ = "0.1.0"

from lpcc_oracle.blackbox import BlackBoxProblem
from lpcc_oracle.grid import GridResult, brute_force_complementary_min, grid_minimize, scan_grid

__all__ = [
    "BlackBoxProblem",
    "GridResult",
    "brute_force_complementary_min",
    "grid_minimize",
    "scan_grid",
]
