"""Toolkit configuration."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings

from lpcc_core.exceptions import ConfigurationError


class Settings(BaseSettings):
    """
    Numerical settings loaded from environment variables.

    Prefix: LPCC_
    Example: LPCC_FEASIBILITY_TOL=1e-8
    """

    # Tolerances
    eval_tol: float = Field(default=1e-9, gt=0, description="Point evaluation tolerance")
    feasibility_tol: float = Field(
        default=1e-7, gt=0, description="Solver-level primal feasibility tolerance"
    )
    objective_tol: float = Field(default=1e-6, gt=0, description="Objective comparison tolerance")
    pivot_tol: float = Field(default=1e-9, gt=0, description="Tableau zero threshold")
    complementarity_tol: float = Field(
        default=1e-8, gt=0, description="Default tolerance for complementarity checks"
    )

    # Simplex
    max_iterations: int = Field(default=50_000, ge=1, description="Pivot cap per solve")
    bland_factor: int = Field(
        default=2, ge=0, description="Dantzig pivots allowed per (rows+cols) before Bland's rule"
    )

    # Bicriteria
    lexmin_band: float = Field(
        default=1e-7, gt=0, description="Accepted drift of the first objective in lexmin stage 2"
    )
    frontier_rel_tol: float = Field(
        default=1e-7, gt=0, description="Relative supporting-line test in dichotomic search"
    )

    # Exact enumeration
    exact_max_pairs: int = Field(
        default=20, ge=0, description="Maximum complementarity pairs for full enumeration"
    )

    # Grid oracle
    oracle_rounds: int = Field(default=4, ge=1, description="Refinement rounds")
    oracle_points: int = Field(default=101, ge=11, description="Grid points per axis")
    oracle_shrink: float = Field(default=0.2, gt=0, lt=1, description="Box shrink per round")
    oracle_max_grid: int = Field(default=10**7, ge=1, description="Maximum grid size")
    oracle_chunk: int = Field(default=2**18, ge=1, description="Grid points evaluated per batch")
    oracle_feasibility_tol: float = Field(
        default=1e-6, gt=0, description="Constraint violation allowed per unit box scale"
    )
    oracle_resolution_factor: float = Field(
        default=10.0, gt=0, description="Complementarity tolerance in final grid steps"
    )

    # Output
    output_digits: int = Field(default=9, ge=1, le=17, description="Significant digits")
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING", description="CLI log level"
    )

    model_config = {
        "env_prefix": "LPCC_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }

    def validate_tolerances(self) -> None:
        """Check that the tolerance ladder is ordered."""
        if self.feasibility_tol < self.eval_tol:
            raise ConfigurationError(
                "LPCC_FEASIBILITY_TOL must not be tighter than LPCC_EVAL_TOL"
            )
        if self.objective_tol < self.feasibility_tol:
            raise ConfigurationError(
                "LPCC_OBJECTIVE_TOL must not be tighter than LPCC_FEASIBILITY_TOL"
            )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
