"""Corpus commands: corpus, export-corpus, generate."""

import csv
import io
import json
from pathlib import Path

import typer
from rich.markup import escape
from rich.table import Table

from lpcc_cli.common import (
    EXIT_SOLVER,
    OutputFormat,
    console,
    emit,
    err_console,
    handle_errors,
    settings_with,
)
from lpcc_corpus import (
    ReplayReport,
    get_entry,
    golden_ids,
    golden_name,
    golden_text,
    random_lpcc,
    replay,
)
from lpcc_io import serialize_problem, write_problem

REPLAY_COLUMNS = [
    "row",
    "path",
    "L",
    "f",
    "fpen",
    "complementary",
    "expected_f",
    "expected_fpen",
    "expected_complementary",
    "passed",
    "citation",
]


def _cell(value: float | None, digits: int = 9) -> str:
    return "" if value is None else f"{value:.{digits}g}"


def _replay_rows(report: ReplayReport) -> list[dict[str, object]]:
    rows = []
    for outcome in report.outcomes:
        row, point = outcome.row, outcome.point
        rows.append(
            {
                "row": row.label,
                "path": row.path.value,
                "L": row.L,
                "f": None if point is None else point.f,
                "fpen": None if point is None else point.fpen,
                "complementary": None if point is None else point.complementary,
                "expected_f": row.f,
                "expected_fpen": row.fpen,
                "expected_complementary": row.complementary,
                "passed": outcome.passed,
                "citation": row.citation,
                "mismatches": list(outcome.mismatches),
            }
        )
    return rows


def _replay_csv(rows: list[dict[str, object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(REPLAY_COLUMNS)
    for row in rows:
        cells = []
        for column in REPLAY_COLUMNS:
            value = row[column]
            if isinstance(value, bool):
                cells.append("true" if value else "false")
            elif isinstance(value, float):
                cells.append(_cell(value))
            else:
                cells.append("" if value is None else str(value))
        writer.writerow(cells)
    return buffer.getvalue()


def _replay_table(report: ReplayReport) -> Table:
    entry = report.entry
    table = Table(title=f"{entry.id}: {entry.title}")
    table.add_column("Row", style="cyan")
    table.add_column("Path")
    table.add_column("f", justify="right")
    table.add_column("f^pen", justify="right")
    table.add_column("Complementary")
    table.add_column("Status")
    for outcome in report.outcomes:
        point = outcome.point
        status = "[green]ok[/green]" if outcome.passed else "[red]FAIL[/red]"
        table.add_row(
            escape(outcome.row.label),
            outcome.row.path.value,
            "" if point is None else _cell(point.f, 6),
            "" if point is None else _cell(point.fpen, 6),
            "" if point is None else ("yes" if point.complementary else "no"),
            status,
        )
    table.caption = escape(entry.provenance)
    return table


def corpus(
    entry_id: str = typer.Argument(..., metavar="ID", help="Corpus entry: EX1, EX2, EX3 or EX4"),
    tol: float | None = typer.Option(None, "--tol", help="Complementarity tolerance"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write output to a file"),
):
    """Replay a corpus entry's documented outcomes; exit 1 if any row fails."""
    with handle_errors():
        entry = get_entry(entry_id)
        report = replay(entry, settings_with(tol))
        rows = _replay_rows(report)
        if fmt is OutputFormat.JSON:
            emit(json.dumps({"id": entry.id.value, "passed": report.passed, "rows": rows}, indent=2) + "\n", out)
        elif fmt is OutputFormat.CSV:
            emit(_replay_csv(rows), out)
        else:
            console.print(_replay_table(report))
        for failure in report.failures:
            err_console.print(
                f"[red]{escape(failure.row.label)}:[/red] {escape('; '.join(failure.mismatches))}"
            )
        if not report.passed:
            raise typer.Exit(EXIT_SOLVER)


def export_corpus(
    directory: Path = typer.Argument(..., metavar="DIR", help="Output directory"),
    check: bool = typer.Option(
        False, "--check", help="Also compare against the shipped golden files"
    ),
):
    """Write the linear corpus instances as .lpcc problem files."""
    with handle_errors():
        mismatched = []
        for entry_id in golden_ids():
            problem = get_entry(entry_id).build()
            path = write_problem(problem, directory / golden_name(entry_id))
            console.print(f"[green]wrote[/green] {path}")
            if check and path.read_text(encoding="utf-8") != golden_text(entry_id):
                mismatched.append(entry_id.value)
        if mismatched:
            err_console.print(f"[red]differs from golden file:[/red] {', '.join(mismatched)}")
            raise typer.Exit(EXIT_SOLVER)


def generate(
    seed: int = typer.Option(..., "--seed", help="Random seed"),
    n_x: int = typer.Option(2, "--n-x", help="Number of x variables (0..3)"),
    n_y: int = typer.Option(2, "--n-y", help="Number of complementarity pairs (1..3)"),
    box: int | None = typer.Option(None, "--box", help="Variable upper bound, 1..3"),
    integral: bool = typer.Option(
        True, "--integral/--real", help="Integral pieces or real coefficients"
    ),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write output to a file"),
):
    """Random desk-scale LPCC as a problem file."""
    with handle_errors():
        problem = random_lpcc(seed, n_x=n_x, n_y=n_y, box=box, integral=integral)
        emit(serialize_problem(problem), out)
