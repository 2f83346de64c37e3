"""Bicriteria analysis: frontier, certify."""

import time
from pathlib import Path

import typer

from lpcc_bicriteria import Verdict, certify_theorem4, compute_L_bar, dichotomic_frontier
from lpcc_cli.common import OutputFormat, err_console, handle_errors, load_problem, settings_with
from lpcc_cli.render import build_record, render
from lpcc_io import CertificateRecord, FrontierRecord


def frontier(
    file: Path = typer.Argument(..., help="Problem file (.lpcc)"),
    tol: float | None = typer.Option(None, "--tol", help="Complementarity tolerance"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write output to a file"),
):
    """Extreme supported points of (f, f^pen), segments and probe history."""
    with handle_errors():
        problem, text = load_problem(file)
        settings = settings_with(tol)
        start = time.perf_counter()
        result = dichotomic_frontier(problem, settings)
        record = build_record(
            "frontier",
            file,
            text,
            problem,
            settings,
            start,
            L_values=[probe.L for probe in result.probes],
            frontier=FrontierRecord.from_frontier(result, compute_L_bar(result)),
        )
        render(record, fmt, out, f"{problem.name or file.name}: frontier")


def certify(
    file: Path = typer.Argument(..., help="Problem file (.lpcc)"),
    tol: float | None = typer.Option(None, "--tol", help="Complementarity tolerance"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f", help="Output format"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write output to a file"),
):
    """Decide whether penalty solves with L > L_bar return complementary points."""
    with handle_errors():
        problem, text = load_problem(file)
        settings = settings_with(tol)
        start = time.perf_counter()
        certificate = certify_theorem4(problem, settings)
        record = build_record(
            "certify",
            file,
            text,
            problem,
            settings,
            start,
            certificate=CertificateRecord.from_certificate(certificate),
        )
        if certificate.verdict is Verdict.RECOVERS_FOR_L_GT_LBAR:
            err_console.print(
                f"[green]complementary for every L > {certificate.L_bar:.6g}[/green]"
            )
        else:
            err_console.print(f"[yellow]{certificate.verdict.value}[/yellow]")
        render(record, fmt, out, f"{problem.name or file.name}: trade-off certificate")
