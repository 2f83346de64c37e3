"""Main CLI entry point using Typer."""

import typer
from rich.table import Table

from lpcc_cli import __version__, analysis, corpus, penalty
from lpcc_cli.common import configure_logging, console

app = typer.Typer(
    name="lpcc",
    help="LPCC toolkit - penalty solves, trade-off frontier and recovery certificates",
    no_args_is_help=True,
)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
):
    configure_logging(verbose)


# Register commands
app.command("solve")(penalty.solve)
app.command("sweep")(penalty.sweep_weights)
app.command("exact")(penalty.exact)
app.command("relax")(penalty.relax)
app.command("frontier")(analysis.frontier)
app.command("certify")(analysis.certify)
app.command("corpus")(corpus.corpus)
app.command("export-corpus")(corpus.export_corpus)
app.command("generate")(corpus.generate)


@app.command()
def config():
    """Show the active numerical settings."""
    from lpcc_core import get_settings

    settings = get_settings()

    table = Table(title="LPCC Settings")
    table.add_column("Setting", style="cyan")
    table.add_column("Value", style="green")
    table.add_column("Description", style="dim")

    table.add_row("version", __version__, "")
    for name, field in type(settings).model_fields.items():
        table.add_row(f"LPCC_{name.upper()}", str(getattr(settings, name)), field.description or "")

    console.print(table)


if __name__ == "__main__":
    app()
