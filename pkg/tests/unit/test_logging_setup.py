"""Tests for logging configuration."""

import logging

import pytest

from tradenet.logging_setup import category_of, configure_logging, resolve_level

DEPENDENCY_LOGGERS = ("concurrent.futures", "networkx", "scipy")


@pytest.fixture
def restore_logging():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    deps = {name: (logging.getLogger(name).level, logging.getLogger(name).propagate) for name in DEPENDENCY_LOGGERS}
    yield
    for handler in list(root.handlers):
        root.removeHandler(handler)
    for handler in handlers:
        root.addHandler(handler)
    root.setLevel(level)
    for name, (dep_level, propagate) in deps.items():
        logging.getLogger(name).setLevel(dep_level)
        logging.getLogger(name).propagate = propagate


def _record(name: str, **extra) -> logging.LogRecord:
    record = logging.LogRecord(name, logging.INFO, __file__, 1, "msg", None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_resolve_level_precedence(monkeypatch):
    monkeypatch.setenv("TRADENET_LOG_LEVEL", "warning")
    assert resolve_level("debug") == logging.DEBUG
    assert resolve_level() == logging.WARNING
    monkeypatch.delenv("TRADENET_LOG_LEVEL")
    assert resolve_level() == logging.CRITICAL


def test_resolve_level_unknown_name_is_critical():
    assert resolve_level("chatty") == logging.CRITICAL


@pytest.mark.parametrize(
    "name, extra, expected",
    [
        ("tradenet.centrality.eigenvector", {}, "solver"),
        ("tradenet.io.trade", {}, "io"),
        ("tradenet.pipeline.studies", {}, "study"),
        ("tradenet.utils.perf_logger", {}, "perf"),
        ("tradenet.iox", {}, None),
        ("tradenet.cli.study", {"category": "io"}, "io"),
    ],
)
def test_category_of(name, extra, expected):
    assert category_of(_record(name, **extra)) == expected


def test_configure_logging_installs_one_handler(restore_logging, monkeypatch):
    monkeypatch.delenv("TRADENET_VERBOSE_DEPS", raising=False)
    configure_logging("INFO")
    configure_logging("DEBUG")

    root = logging.getLogger()
    assert len(root.handlers) == 1
    assert root.level == logging.DEBUG
    for name in DEPENDENCY_LOGGERS:
        assert logging.getLogger(name).level == logging.CRITICAL
        assert logging.getLogger(name).propagate is False


def test_verbose_deps_keeps_dependency_loggers(restore_logging, monkeypatch):
    monkeypatch.setenv("TRADENET_VERBOSE_DEPS", "1")
    logging.getLogger("scipy").propagate = True
    configure_logging("INFO")
    assert logging.getLogger("scipy").propagate is True
