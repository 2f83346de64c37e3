"""Rendering of run records as csv, json or rich tables."""

import time
from pathlib import Path

from rich.markup import escape
from rich.table import Table

from lpcc_cli.common import OutputFormat, console, emit
from lpcc_core import MpecProblem, Settings
from lpcc_io import (
    CertificateRecord,
    FrontierRecord,
    RunRecord,
    frontier_csv,
    input_hash,
    points_csv,
    record_json,
)


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.6g}"


def _vector(values: list[float]) -> str:
    return "(" + ", ".join(f"{v:.6g}" for v in values) + ")"


def _fmt9(value: float | None) -> str:
    return "" if value is None else f"{value:.9g}"


def _flag(value: bool) -> str:
    return "[green]yes[/green]" if value else "[red]no[/red]"


def points_table(record: RunRecord, title: str) -> Table:
    table = Table(title=title)
    table.add_column("L", style="cyan", justify="right")
    table.add_column("f", justify="right")
    table.add_column("f^pen", justify="right")
    table.add_column("Complementary")
    table.add_column("x")
    table.add_column("y")
    table.add_column("g")
    for point in record.points:
        table.add_row(
            _fmt(point.L),
            _fmt(point.f),
            _fmt(point.fpen),
            _flag(point.complementary),
            _vector(point.x),
            _vector(point.y),
            _vector(point.g),
        )
    return table


def render(record: RunRecord, fmt: OutputFormat, out: Path | None, title: str) -> None:
    """
    Emit a record.

    csv and json go to --out or stdout; table prints to the console and,
    with --out, also saves the JSON record.
    """
    if fmt is OutputFormat.JSON:
        emit(record_json(record), out)
        return
    if fmt is OutputFormat.CSV:
        if record.frontier is not None:
            emit(frontier_csv(record.frontier, record), out)
        elif record.certificate is not None:
            emit(certificate_csv(record.certificate), out)
        else:
            emit(points_csv(record), out)
        return

    if record.frontier is not None:
        console.print(frontier_table(record.frontier, title))
    elif record.certificate is not None:
        console.print(certificate_table(record.certificate, title))
    else:
        console.print(points_table(record, title))
    if out is not None:
        emit(record_json(record), out)


def frontier_table(frontier: FrontierRecord, title: str) -> Table:
    table = Table(title=f"{title} (L_bar = {frontier.L_bar:.6g})")
    table.add_column("L interval", style="cyan")
    table.add_column("f", justify="right")
    table.add_column("f^pen", justify="right")
    table.add_column("Complementary")
    table.add_column("x")
    table.add_column("y")
    for point in frontier.points:
        hi = "inf" if point.L_hi is None else f"{point.L_hi:.6g}"
        table.add_row(
            escape(f"[{_fmt(point.L_lo)}, {hi})"),
            _fmt(point.f),
            _fmt(point.fpen),
            _flag(point.complementary),
            _vector(point.x),
            _vector(point.y),
        )
    probes = ", ".join(
        f"{probe.L:.6g}{'' if probe.found is None else '*'}" for probe in frontier.probes
    )
    table.caption = (
        f"probes: {probes or 'none'} (* found a new point); "
        "weight ranges are half-open, both neighbours are optimal at a breakpoint"
    )
    return table


def certificate_csv(certificate: CertificateRecord) -> str:
    point = certificate.lexmin_pen_first
    header = "verdict,L_bar,lexmin_f,lexmin_fpen,lexmin_complementary,face_gap,exact_value,recovery_weight"
    values = [
        certificate.verdict,
        f"{certificate.L_bar:.9g}",
        f"{point.f:.9g}",
        f"{point.fpen:.9g}",
        "true" if certificate.lexmin_complementary else "false",
        _fmt9(certificate.face_gap),
        _fmt9(certificate.exact_value),
        _fmt9(certificate.recovery_weight),
    ]
    return f"{header}\n{','.join(values)}\n"


def certificate_table(certificate: CertificateRecord, title: str) -> Table:
    point = certificate.lexmin_pen_first
    table = Table(title=title, show_header=False)
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    table.add_row("Verdict", f"[bold]{certificate.verdict}[/bold]")
    table.add_row("L_bar", _fmt(certificate.L_bar))
    table.add_row("Pen-first lexmin", f"z = ({_fmt(point.f)}, {_fmt(point.fpen)})")
    table.add_row("  x", _vector(point.x))
    table.add_row("  y", _vector(point.y))
    table.add_row("  complementary", _flag(certificate.lexmin_complementary))
    if certificate.face_gap is not None:
        table.add_row("Face gap", _fmt(certificate.face_gap))
    if certificate.exact_value is not None:
        table.add_row("Exact optimum", _fmt(certificate.exact_value))
    if certificate.recovery_weight is not None:
        table.add_row("Recovery weight", _fmt(certificate.recovery_weight))
    return table


def build_record(
    command: str,
    file: Path | None,
    text: str,
    problem: MpecProblem,
    settings: Settings,
    start: float,
    **fields: object,
) -> RunRecord:
    """RunRecord with input identity, tolerances and wall time filled in."""
    return RunRecord(
        command=command,
        input_name=str(file) if file is not None else problem.name,
        input_hash=input_hash(text),
        x_names=list(problem.x_names),
        y_names=list(problem.y_names),
        tolerances=RunRecord.tolerances_from(settings),
        wall_time=time.perf_counter() - start,
        **fields,
    )
