"""Shared CLI plumbing: consoles, output routing and exit codes."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from enum import StrEnum
from pathlib import Path

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from lpcc_core import (
    ConfigurationError,
    EnumerationLimitError,
    GridTooLargeError,
    InvalidProblemError,
    LPCCError,
    MpecProblem,
    ParseError,
    Settings,
    SolverError,
    ValidationError,
    get_settings,
)
from lpcc_io import parse_problem

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_SOLVER = 1
EXIT_INPUT = 2

INPUT_ERRORS = (
    ParseError,
    ValidationError,
    InvalidProblemError,
    ConfigurationError,
    EnumerationLimitError,
    GridTooLargeError,
)


class OutputFormat(StrEnum):
    CSV = "csv"
    JSON = "json"
    TABLE = "table"


def configure_logging(verbose: bool, settings: Settings | None = None) -> None:
    """Route library logs to stderr through rich."""
    settings = settings or get_settings()
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level)
    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)
    handler = RichHandler(console=err_console, show_path=False, show_time=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(level)


@contextmanager
def handle_errors() -> Iterator[None]:
    """
    Map toolkit errors to exit codes.

    2 for bad input (files, arguments, problem data), 1 for solver outcomes
    such as infeasible or unbounded problems.
    """
    try:
        yield
    except typer.Exit:
        raise
    except FileNotFoundError as e:
        err_console.print(f"[red]Error:[/red] file not found: {escape(str(e.filename))}")
        raise typer.Exit(EXIT_INPUT)
    except UnicodeDecodeError as e:
        err_console.print(f"[red]Error:[/red] not UTF-8 text: {escape(e.reason)} at byte {e.start}")
        raise typer.Exit(EXIT_INPUT)
    except OSError as e:
        target = e.filename if e.filename is not None else e
        err_console.print(f"[red]Error:[/red] cannot access {escape(str(target))}: {escape(e.strerror or str(e))}")
        raise typer.Exit(EXIT_INPUT)
    except INPUT_ERRORS as e:
        err_console.print(f"[red]Error:[/red] {escape(e.message)}", highlight=False)
        raise typer.Exit(EXIT_INPUT)
    except SolverError as e:
        err_console.print(f"[red]Solver:[/red] {escape(e.message)}", highlight=False)
        raise typer.Exit(EXIT_SOLVER)
    except LPCCError as e:
        err_console.print(f"[red]Error:[/red] {escape(e.message)}", highlight=False)
        raise typer.Exit(EXIT_SOLVER)


def settings_with(tol: float | None) -> Settings:
    """Active settings, with complementarity_tol replaced when --tol is given."""
    settings = get_settings()
    if tol is None:
        return settings
    if not tol > 0:
        raise ValidationError("tol", "must be positive")
    return settings.model_copy(update={"complementarity_tol": tol})


def load_problem(path: Path) -> tuple[MpecProblem, str]:
    """Parsed problem and its source text."""
    text = path.read_text(encoding="utf-8")
    try:
        return parse_problem(text), text
    except ParseError as e:
        err_console.print(f"[red]Error:[/red] {escape(str(path))}:{escape(e.message)}", highlight=False)
        raise typer.Exit(EXIT_INPUT)


def parse_weights(text: str) -> list[float]:
    """Comma-separated nonnegative weights, e.g. `0.1,1,10`."""
    weights: list[float] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            value = float(part)
        except ValueError:
            raise ValidationError("L-list", f"not a number: {part!r}")
        if not value >= 0 or value == float("inf"):
            raise ValidationError("L-list", f"weights must be finite and nonnegative, got {part}")
        weights.append(value)
    if not weights:
        raise ValidationError("L-list", "no weights given")
    return weights


def emit(text: str, out: Path | None) -> None:
    """Write machine-readable output to --out or stdout."""
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        err_console.print(f"[green]wrote[/green] {out}")
    else:
        typer.echo(text, nl=False)
