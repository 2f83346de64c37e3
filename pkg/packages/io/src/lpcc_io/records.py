"""Run records - JSON-serializable results of a CLI run."""

import hashlib
import math

from pydantic import BaseModel, Field

from lpcc_bicriteria.certificate import TradeoffCertificate
from lpcc_bicriteria.frontier import Frontier, FrontierPoint, Probe, Segment
from lpcc_core.config import Settings


def input_hash(text: str) -> str:
    """sha256 of the problem text, as hex."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _finite(value: float) -> float | None:
    return value if math.isfinite(value) else None


# ========== Points ==========


class PointRecord(BaseModel):
    L: float | None = None
    f: float
    fpen: float
    complementary: bool
    x: list[float]
    y: list[float]
    g: list[float]
    L_lo: float | None = None
    L_hi: float | None = Field(default=None, description="None when the interval is unbounded")

    @classmethod
    def from_point(cls, point: FrontierPoint, L: float | None = None) -> "PointRecord":
        lo, hi = point.L_interval if point.L_interval is not None else (None, None)
        return cls(
            L=L,
            f=point.f,
            fpen=point.fpen,
            complementary=point.complementary,
            x=[float(v) for v in point.solution.x],
            y=[float(v) for v in point.solution.y],
            g=[pair.g for pair in point.report.pairs],
            L_lo=lo,
            L_hi=None if hi is None else _finite(hi),
        )


# ========== Frontier ==========


class SegmentRecord(BaseModel):
    left: tuple[float, float]
    right: tuple[float, float]
    weight: float
    slope: float

    @classmethod
    def from_segment(cls, segment: Segment) -> "SegmentRecord":
        return cls(
            left=segment.left.z,
            right=segment.right.z,
            weight=segment.weight,
            slope=segment.slope,
        )


class ProbeRecord(BaseModel):
    L: float
    left: tuple[float, float]
    right: tuple[float, float]
    found: tuple[float, float] | None

    @classmethod
    def from_probe(cls, probe: Probe) -> "ProbeRecord":
        return cls(L=probe.L, left=probe.left, right=probe.right, found=probe.found)


class FrontierRecord(BaseModel):
    points: list[PointRecord]
    segments: list[SegmentRecord]
    probes: list[ProbeRecord]
    L_bar: float

    @classmethod
    def from_frontier(cls, frontier: Frontier, L_bar: float) -> "FrontierRecord":
        return cls(
            points=[PointRecord.from_point(point) for point in frontier.points],
            segments=[SegmentRecord.from_segment(s) for s in frontier.segments()],
            probes=[ProbeRecord.from_probe(probe) for probe in frontier.probes],
            L_bar=L_bar,
        )


# ========== Certificate ==========


class CertificateRecord(BaseModel):
    verdict: str
    L_bar: float
    lexmin_pen_first: PointRecord
    lexmin_complementary: bool
    face_gap: float | None = None
    exact_value: float | None = None
    recovery_weight: float | None = None

    @classmethod
    def from_certificate(cls, certificate: TradeoffCertificate) -> "CertificateRecord":
        recovers = certificate.lexmin_complementary
        return cls(
            verdict=certificate.verdict.value,
            L_bar=certificate.L_bar,
            lexmin_pen_first=PointRecord.from_point(certificate.lexmin_pen_first),
            lexmin_complementary=recovers,
            face_gap=None if certificate.face_gap is None else _finite(certificate.face_gap),
            exact_value=certificate.exact_value,
            recovery_weight=certificate.recovery_weight() if recovers else None,
        )


# ========== Run ==========


class RunRecord(BaseModel):
    """
    One CLI run: the command, its input and every number it produced.

    Re-running `command` on an input with the same hash reproduces the
    numeric fields within the recorded tolerances.
    """

    command: str
    input_name: str = ""
    input_hash: str = ""
    x_names: list[str]
    y_names: list[str]
    L_values: list[float] = Field(default_factory=list)
    points: list[PointRecord] = Field(default_factory=list)
    frontier: FrontierRecord | None = None
    certificate: CertificateRecord | None = None
    status: str = "optimal"
    tolerances: dict[str, float] = Field(default_factory=dict)
    wall_time: float = 0.0

    @staticmethod
    def tolerances_from(settings: Settings) -> dict[str, float]:
        return {
            "eval_tol": settings.eval_tol,
            "feasibility_tol": settings.feasibility_tol,
            "objective_tol": settings.objective_tol,
            "complementarity_tol": settings.complementarity_tol,
            "lexmin_band": settings.lexmin_band,
            "frontier_rel_tol": settings.frontier_rel_tol,
        }
