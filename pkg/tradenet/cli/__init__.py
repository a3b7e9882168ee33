"""CLI entry points and command parsing for tradenet."""

from tradenet.cli.main import app, run

__all__ = ["app", "run"]
