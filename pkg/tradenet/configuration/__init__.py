"""Configuration management for tradenet."""

from tradenet.configuration.user_config import (
    ConfigExistsError,
    InvalidConfigError,
    RuntimeConfig,
    SolverConfig,
    StudyConfig,
    TradenetConfig,
    get_config_dir,
    get_config_path,
    load_config,
    save_config,
)

__all__ = [
    "ConfigExistsError",
    "InvalidConfigError",
    "RuntimeConfig",
    "SolverConfig",
    "StudyConfig",
    "TradenetConfig",
    "get_config_dir",
    "get_config_path",
    "load_config",
    "save_config",
]
