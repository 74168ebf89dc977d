from pathlib import Path

import typer
from rich.console import Console
from rich.prompt import Confirm

from latnak.config import DEFAULT_LATNAK_TOML
from latnak.constants import CONFIG_FILENAME

console = Console()


def init(
    root: str = typer.Option(
        ".",
        "--root",
        "-r",
        help="Directory where latnak.toml will be created.",
    ),
    force: bool = typer.Option(False, "--force", help="Overwrite existing latnak.toml file."),
) -> None:
    """
    Initialize a new latnak.toml configuration file

    This command creates a latnak.toml file with the default field, size caps, output and run settings. Commands work without one; the file only changes the defaults.

    Examples:

        # Create latnak.toml in current directory
        latnak init

        # Create latnak.toml in a specific directory
        latnak init --root ./runs

        # Overwrite existing latnak.toml
        latnak init --force
    """

    target_path = Path(root).resolve() / CONFIG_FILENAME

    if target_path.exists() and not force:
        overwrite = Confirm.ask(f"[yellow]{target_path} already exists. Overwrite?[/yellow]")
        if not overwrite:
            console.print("[blue]Initialization cancelled.[/blue]")
            raise typer.Exit(0)

    try:
        target_path.parent.mkdir(parents=True, exist_ok=True)
        target_path.write_text(DEFAULT_LATNAK_TOML, encoding="utf-8")
        console.print(f"[green]✓[/green] Created {target_path}")

    except Exception as e:
        console.print(f"[red]Error creating configuration:[/red] {str(e)}")
        raise typer.Exit(1) from e
