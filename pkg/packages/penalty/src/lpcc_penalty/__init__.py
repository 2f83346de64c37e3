"""LPCC Penalty - Penalty reformulations and the exact disposition solver."""

__version__ = "0.1.0"

from lpcc_penalty.exact import (
    Disposition,
    ExactResult,
    FaceGap,
    PieceResult,
    Side,
    face_complementarity_gap,
    piece_lp,
    solve_exact,
)
from lpcc_penalty.reformulation import (
    PenaltyScalarization,
    SchurExpansion,
    as_scalarization,
    build_gamma_lp,
    build_penalty_expanded,
    build_penalty_lp,
    check_sos1,
    expansion_rows,
    penalty_objective,
)

__all__ = [
    # Reformulation
    "PenaltyScalarization",
    "SchurExpansion",
    "as_scalarization",
    "build_gamma_lp",
    "build_penalty_expanded",
    "build_penalty_lp",
    "check_sos1",
    "expansion_rows",
    "penalty_objective",
    # Exact
    "Disposition",
    "ExactResult",
    "FaceGap",
    "PieceResult",
    "Side",
    "face_complementarity_gap",
    "piece_lp",
    "solve_exact",
]
