"""CSV and JSON exports of run records.

Point tables always use the column order

    L, f, fpen, complementary, <x names>, <y names>, g_<y names>

with numbers printed to Settings.output_digits significant digits.
"""

import csv
import io
from collections.abc import Iterable, Sequence

from lpcc_core.config import get_settings
from lpcc_io.records import FrontierRecord, PointRecord, RunRecord


def point_columns(x_names: Sequence[str], y_names: Sequence[str]) -> list[str]:
    return ["L", "f", "fpen", "complementary", *x_names, *y_names, *(f"g_{y}" for y in y_names)]


def _number(value: float | None, digits: int) -> str:
    if value is None:
        return ""
    text = f"{value:.{digits}g}"
    return "0" if text == "-0" else text


def point_row(record: PointRecord, digits: int | None = None) -> list[str]:
    digits = get_settings().output_digits if digits is None else digits
    cells = [
        _number(record.L, digits),
        _number(record.f, digits),
        _number(record.fpen, digits),
        "true" if record.complementary else "false",
    ]
    cells += [_number(v, digits) for v in (*record.x, *record.y, *record.g)]
    return cells


def _write(rows: Iterable[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def points_csv(record: RunRecord, digits: int | None = None) -> str:
    """One row per solved point (solve, sweep, exact, relax)."""
    digits = get_settings().output_digits if digits is None else digits
    header = point_columns(record.x_names, record.y_names)
    return _write([header, *(point_row(point, digits) for point in record.points)])


def frontier_csv(frontier: FrontierRecord, record: RunRecord, digits: int | None = None) -> str:
    """
    Three tables separated by `# name` lines: points, segments, probes.

    Frontier points carry their weight interval in L (lower end) and a
    trailing L_hi column (empty when unbounded).
    """
    digits = get_settings().output_digits if digits is None else digits
    rows: list[list[str]] = [["# points"]]
    rows.append([*point_columns(record.x_names, record.y_names), "L_hi"])
    for point in frontier.points:
        row = point_row(point.model_copy(update={"L": point.L_lo}), digits)
        rows.append([*row, _number(point.L_hi, digits)])

    rows += [["# segments"], ["left_f", "left_fpen", "right_f", "right_fpen", "weight", "slope"]]
    for segment in frontier.segments:
        values = (*segment.left, *segment.right, segment.weight, segment.slope)
        rows.append([_number(v, digits) for v in values])

    rows += [
        ["# probes"],
        ["L", "left_f", "left_fpen", "right_f", "right_fpen", "found_f", "found_fpen", "closed"],
    ]
    for probe in frontier.probes:
        found = ["", ""] if probe.found is None else [_number(v, digits) for v in probe.found]
        values = (probe.L, *probe.left, *probe.right)
        rows.append(
            [*(_number(v, digits) for v in values), *found, "true" if probe.found is None else "false"]
        )
    return _write(rows)


def record_json(record: RunRecord) -> str:
    return record.model_dump_json(indent=2) + "\n"


def read_record(text: str) -> RunRecord:
    """Load a RunRecord written by record_json."""
    return RunRecord.model_validate_json(text)
