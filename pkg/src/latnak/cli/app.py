from pathlib import Path

import typer
from rich.console import Console

from latnak.cli import emit, family_check, init, pairs, verify
from latnak.cli.session import build_session, guarded

app = typer.Typer(
    name="latnak",
    help="Exact derived-category computations for Nakayama and lattice algebras",
    add_completion=False,
)

console = Console()


app.command()(init.init)
app.command()(pairs.pairs)
app.command()(verify.verify)
app.command()(emit.emit)
app.command(name="family-check")(family_check.family_check)


def version_callback(value: bool):
    if value:
        from latnak import __version__

        console.print(f"latnak version {__version__}")

        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        None,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit.",
    ),
    config: Path | None = typer.Option(None, "--config", "-c", help="Path to latnak.toml (searched upwards by default)."),
    field: str | None = typer.Option(None, "--field", help="Coefficient field: rationals or prime."),
    prime: int | None = typer.Option(None, "--prime", help="Characteristic of the prime field."),
    output_format: str | None = typer.Option(None, "--format", "-f", help="Output format: json, csv or text."),
    max_dim: int | None = typer.Option(None, "--max-dim", help="Largest algebra dimension verified with complexes."),
    seed: int | None = typer.Option(None, "--seed", help="Seed of the random property suites."),
    verbose: bool = typer.Option(False, "--verbose", help="Show per-step details and debug logging."),
):
    """
    latnak - Exact derived-category computations for Nakayama and lattice algebras
    """

    if ctx.invoked_subcommand == "init":
        return

    with guarded():
        ctx.obj = build_session(config, field, prime, output_format, max_dim, seed, verbose)


if __name__ == "__main__":
    app()
