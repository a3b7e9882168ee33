"""Nox sessions for tradenet: tests per Python version, benchmarks and lint."""

import nox

nox.options.sessions = ["tests", "lint"]
nox.options.default_venv_backend = "uv"
nox.options.reuse_venv = "no"

PYTHON_VERSIONS = ["3.10", "3.11", "3.12", "3.13"]


def _sync(session: nox.Session) -> None:
    session.run("uv", "sync", "--active", external=True)


@nox.session(python=PYTHON_VERSIONS)
def tests(session: nox.Session) -> None:
    """Unit and integration tests; benchmarks are left to their own session."""
    _sync(session)
    session.run(
        "pytest",
        "tests/",
        "-m",
        "not performance",
        "--cov=tradenet",
        "--cov-report=term-missing",
        *session.posargs,
    )


@nox.session(python="3.12")
def benchmarks(session: nox.Session) -> None:
    """Solver and study timings on a full-size synthetic panel."""
    _sync(session)
    session.run("pytest", "tests/performance", "-m", "performance", *session.posargs)


@nox.session(python="3.12")
def lint(session: nox.Session) -> None:
    session.install("ruff")
    session.run("ruff", "check", "tradenet/", "tests/")
