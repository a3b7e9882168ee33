"""Main CLI entry point for tradenet."""

import sys
from importlib.metadata import version
from pathlib import Path
from typing import Any, Optional

import click
import typer
from typer.core import TyperGroup

from tradenet import ui
from tradenet.cli.aggregate import aggregate_app
from tradenet.cli.centrality import centrality_command
from tradenet.cli.config import config_app
from tradenet.cli.study import study_app, subset_command
from tradenet.constants import EXIT_DATA, EXIT_OK, EXIT_USAGE
from tradenet.logging_setup import configure_logging, get_logger

logger = get_logger(__name__)

# click 8.2+ raises this for a bare invocation; older releases print help and exit
_HELP_REQUESTS = tuple(
    exc for exc in (getattr(click.exceptions, "NoArgsIsHelpError", None),) if exc is not None
)


class TradenetGroup(TyperGroup):
    """
    Root command group with tradenet's exit-code contract.

    Click reports usage errors with exit status 2, which tradenet reserves for
    data errors; here they exit 1 with a single ``error[USAGE]:`` line.
    Anything unexpected exits 2 as ``error[INTERNAL]:``.
    """

    def main(self, *args: Any, standalone_mode: bool = True, **kwargs: Any) -> Any:
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except _HELP_REQUESTS as exc:
            typer.echo(exc.format_message(), err=True)
            rv = EXIT_USAGE
        except click.exceptions.ClickException as exc:
            ui.error("USAGE", exc.format_message())
            rv = EXIT_USAGE
        except click.exceptions.Abort:
            ui.error("USAGE", "Aborted")
            rv = EXIT_USAGE
        except Exception as exc:
            logger.debug("Unhandled exception", exc_info=True)
            ui.error("INTERNAL", f"{type(exc).__name__}: {exc}")
            rv = EXIT_DATA
        if not standalone_mode:
            return rv
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


app = typer.Typer(
    cls=TradenetGroup,
    help="tradenet - centrality and correlation studies on international trade networks",
    no_args_is_help=True,
)
app.command("centrality")(centrality_command)
app.add_typer(study_app, name="study")
app.command("subset")(subset_command)
app.add_typer(aggregate_app, name="aggregate")
app.add_typer(config_app, name="config")


def _verbose_to_log_level(count: int) -> Optional[str]:
    """Map verbose count to log level string."""
    if count == 0:
        return None
    if count == 1:
        return "INFO"
    return "DEBUG"


def _version() -> str:
    try:
        return version("tradenet")
    except Exception:
        # Source checkout without an install
        pyproject_path = Path(__file__).parent.parent.parent / "pyproject.toml"
        if sys.version_info >= (3, 11):
            import tomllib
        else:
            import tomli as tomllib
        with open(pyproject_path, "rb") as f:
            return tomllib.load(f)["project"]["version"]


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    verbose: int = typer.Option(
        0,
        "--verbose",
        "-v",
        count=True,
        help="Increase verbosity: -v for INFO, -vv for DEBUG",
    ),
    version_flag: bool = typer.Option(
        False,
        "--version",
        help="Show version and exit",
    ),
) -> None:
    """
    Centrality and correlation studies on yearly trade networks.

    Examples:
        tradenet centrality --trade trade.csv --year 2016 --measure eigenvector --direction in
        tradenet study gdp --trade trade.csv --gdp gdp.csv --measure randomwalk --groups groups.csv --out report.json
        tradenet aggregate gdp --fixture eigenvector.csv --fixture randomwalk.csv --fixture degree.csv
    """
    if version_flag:
        try:
            typer.echo(_version())
        except Exception:
            ui.error("INTERNAL", "Could not determine version")
            raise typer.Exit(EXIT_DATA)
        raise typer.Exit(EXIT_OK)

    level = _verbose_to_log_level(verbose)
    if level is not None:
        configure_logging(level)
        logger.debug("Verbosity %s, subcommand %s", level, ctx.invoked_subcommand)


def run() -> None:
    """Console-script entry point."""
    app()
