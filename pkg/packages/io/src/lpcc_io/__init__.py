"""LPCC IO - Problem files, run records and CSV/JSON exports."""

__version__ = "0.1.0"

from lpcc_io.export import (
    frontier_csv,
    point_columns,
    point_row,
    points_csv,
    read_record,
    record_json,
)
from lpcc_io.parser import ProblemParser, parse_problem, read_problem
from lpcc_io.records import (
    CertificateRecord,
    FrontierRecord,
    PointRecord,
    ProbeRecord,
    RunRecord,
    SegmentRecord,
    input_hash,
)
from lpcc_io.serializer import (
    ProblemSerializer,
    format_expr,
    format_number,
    serialize_problem,
    write_problem,
)

__all__ = [
    # Problem files
    "ProblemParser",
    "ProblemSerializer",
    "format_expr",
    "format_number",
    "parse_problem",
    "read_problem",
    "serialize_problem",
    "write_problem",
    # Records
    "CertificateRecord",
    "FrontierRecord",
    "PointRecord",
    "ProbeRecord",
    "RunRecord",
    "SegmentRecord",
    "input_hash",
    # Exports
    "frontier_csv",
    "point_columns",
    "point_row",
    "points_csv",
    "read_record",
    "record_json",
]
