"""LPCC Bicriteria - (f, f^pen) frontier, lexicographic minima and trade-off certificates."""

__version__ = "0.1.0"

from lpcc_bicriteria.certificate import (
    TradeoffCertificate,
    Verdict,
    certify_theorem4,
    drop_complementarity_solve,
    grid_frontier_point,
    pen_first_face,
)
from lpcc_bicriteria.complementarity import (
    ComplementarityReport,
    PairCheck,
    check_complementarity,
    complementarity_report,
)
from lpcc_bicriteria.frontier import (
    Frontier,
    FrontierPoint,
    Order,
    Probe,
    Segment,
    SweepResult,
    compute_L_bar,
    dichotomic_frontier,
    frontier_point,
    lexmin,
    solve_penalty,
    sweep,
)

__all__ = [
    # Complementarity
    "ComplementarityReport",
    "PairCheck",
    "check_complementarity",
    "complementarity_report",
    # Frontier
    "Frontier",
    "FrontierPoint",
    "Order",
    "Probe",
    "Segment",
    "SweepResult",
    "compute_L_bar",
    "dichotomic_frontier",
    "frontier_point",
    "lexmin",
    "solve_penalty",
    "sweep",
    # Certificate
    "TradeoffCertificate",
    "Verdict",
    "certify_theorem4",
    "drop_complementarity_solve",
    "grid_frontier_point",
    "pen_first_face",
]
