"""``tradenet config show|init``."""

import typer

from tradenet import ui
from tradenet.cli.flags import exit_on_error
from tradenet.configuration import TradenetConfig, get_config_path, load_config, save_config

config_app = typer.Typer(help="Inspect or create the tradenet config file", no_args_is_help=True)


@config_app.command("show")
def show_config() -> None:
    """Print the effective settings."""
    with exit_on_error():
        path = get_config_path()
        config = load_config(path)
        source = str(path) if path.exists() else f"built-in defaults (no file at {path})"
        ui.print_configuration_summary(config, source)


@config_app.command("init")
def init_config(
    force: bool = typer.Option(False, "--force", help="Overwrite an existing config file"),
) -> None:
    """Write a config file holding the defaults."""
    with exit_on_error():
        path = save_config(TradenetConfig(), overwrite=force)
        ui.success(f"Configuration written to {path}")
