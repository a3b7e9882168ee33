"""Basic output functions for the tradenet CLI.

Standard output carries data only. Errors and status messages go to stderr.
"""

import os
import sys

import typer
from rich.console import Console
from rich.text import Text

from tradenet.constants import ENV_TRADENET_PLAIN, UI_TEXT_STYLE_WARNING


def _is_tty() -> bool:
    """Check if stderr is a TTY."""
    try:
        return sys.stderr.isatty()
    except Exception:
        return False


# Detect plain mode: enabled when TRADENET_PLAIN=1 or not a TTY
PLAIN_MODE = os.getenv(ENV_TRADENET_PLAIN, "").strip() == "1" or not _is_tty()

# No file is bound, so the console follows sys.stdout/sys.stderr when they are swapped
console = Console(
    highlight=False,
    force_terminal=not PLAIN_MODE,
    color_system=None if PLAIN_MODE else "auto",
    soft_wrap=True,
)

_stderr_console = Console(
    stderr=True,
    highlight=False,
    force_terminal=not PLAIN_MODE,
    color_system=None if PLAIN_MODE else "auto",
    soft_wrap=True,
)


def error(code: str, msg: str) -> None:
    """Print ``error[<CODE>]: <msg>`` to stderr as one uncolored line."""
    single_line = " ".join(str(msg).split())
    typer.echo(f"error[{code}]: {single_line}", err=True)


def info(msg: str) -> None:
    """Print an info message to stderr."""
    _stderr_console.print(msg)


def warn(msg: str) -> None:
    """Print a warning message to stderr."""
    if PLAIN_MODE:
        _stderr_console.print(f"Warning: {msg}")
    else:
        _stderr_console.print(Text(msg, style=UI_TEXT_STYLE_WARNING))


def success(msg: str) -> None:
    """Print a success message to stderr."""
    if PLAIN_MODE:
        _stderr_console.print(msg)
    else:
        _stderr_console.print(Text(msg, style="bold green"))


def data(text: str) -> None:
    """Write payload text to stdout unchanged."""
    typer.echo(text, nl=not text.endswith("\n") and bool(text))
