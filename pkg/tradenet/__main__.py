"""Entry point for running tradenet as a module."""

import logging

from tradenet.logging_setup import configure_logging

if __name__ == "__main__":
    # Configure logging BEFORE importing numpy/scipy to get early debug output
    configure_logging()
    logging.getLogger(__name__).debug("tradenet module entry starting up")

    from tradenet.cli.main import run

    run()
