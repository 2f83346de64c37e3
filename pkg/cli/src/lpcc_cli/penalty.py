"""Penalty solves: solve, sweep, exact, relax."""

import time
from pathlib import Path

import typer

from lpcc_bicriteria import drop_complementarity_solve, frontier_point, solve_penalty, sweep
from lpcc_cli.common import (
    EXIT_SOLVER,
    OutputFormat,
    err_console,
    handle_errors,
    load_problem,
    parse_weights,
    settings_with,
)
from lpcc_cli.render import build_record, render
from lpcc_io import PointRecord
from lpcc_penalty import solve_exact


def solve(
    file: Path = typer.Argument(..., help="Problem file (.lpcc)"),
    L: float = typer.Option(..., "--L", help="Penalty weight, L >= 0"),
    tol: float | None = typer.Option(None, "--tol", help="Complementarity tolerance"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write output to a file"),
):
    """Minimize f + L * f^pen over Gamma once."""
    with handle_errors():
        problem, text = load_problem(file)
        settings = settings_with(tol)
        start = time.perf_counter()
        point = solve_penalty(problem, L, settings)
        record = build_record(
            "solve",
            file,
            text,
            problem,
            settings,
            start,
            L_values=[L],
            points=[PointRecord.from_point(point, L)],
        )
        render(record, fmt, out, f"{problem.name or file.name}: penalty L={L:g}")


def sweep_weights(
    file: Path = typer.Argument(..., help="Problem file (.lpcc)"),
    L_list: str = typer.Option(..., "--L-list", help="Comma-separated weights, e.g. 0.1,1,10"),
    tol: float | None = typer.Option(None, "--tol", help="Complementarity tolerance"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write output to a file"),
):
    """Solve the penalty LP for each weight and check the monotone response."""
    with handle_errors():
        weights = parse_weights(L_list)
        problem, text = load_problem(file)
        settings = settings_with(tol)
        start = time.perf_counter()
        result = sweep(problem, weights, settings)
        if not result.monotone:
            err_console.print("[yellow]Warning:[/yellow] f^pen or f is not monotone in L")
        record = build_record(
            "sweep",
            file,
            text,
            problem,
            settings,
            start,
            L_values=list(result.weights),
            points=[PointRecord.from_point(p, L) for L, p in zip(result.weights, result.points)],
        )
        render(record, fmt, out, f"{problem.name or file.name}: penalty sweep")


def exact(
    file: Path = typer.Argument(..., help="Problem file (.lpcc)"),
    tol: float | None = typer.Option(None, "--tol", help="Complementarity tolerance"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write output to a file"),
):
    """Global optimum over the complementary set by enumerating dispositions."""
    with handle_errors():
        problem, text = load_problem(file)
        settings = settings_with(tol)
        start = time.perf_counter()
        result = solve_exact(problem, settings)
        if not result.is_optimal:
            err_console.print(f"[red]Solver:[/red] exact solve is {result.status.value}")
            raise typer.Exit(EXIT_SOLVER)
        point = frontier_point(problem, result.point, settings.complementarity_tol)
        record = build_record(
            "exact",
            file,
            text,
            problem,
            settings,
            start,
            points=[PointRecord.from_point(point)],
        )
        err_console.print(f"[dim]disposition {result.disposition}[/dim]")
        render(record, fmt, out, f"{problem.name or file.name}: exact optimum")


def relax(
    file: Path = typer.Argument(..., help="Problem file (.lpcc)"),
    tol: float | None = typer.Option(None, "--tol", help="Complementarity tolerance"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write output to a file"),
):
    """Drop complementarity, minimize f over Gamma and check the result."""
    with handle_errors():
        problem, text = load_problem(file)
        settings = settings_with(tol)
        start = time.perf_counter()
        point, report = drop_complementarity_solve(problem, settings)
        style = "green" if report.satisfied else "yellow"
        err_console.print(f"[{style}]{report.summary()}[/{style}]", highlight=False)
        record = build_record(
            "relax",
            file,
            text,
            problem,
            settings,
            start,
            points=[PointRecord.from_point(point)],
        )
        render(record, fmt, out, f"{problem.name or file.name}: without complementarity")
