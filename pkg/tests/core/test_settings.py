import logging
import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from core.errors import (
    ConfigError,
    ConvergenceError,
    DegenerateSeedError,
    EmptyBandError,
    EmptyFieldError,
    GridMismatchError,
)
from core.settings import LogLevel, Settings


def test_settings_default_values(mock_env):
    settings = Settings(_env_file=None)
    assert settings.LOG_LEVEL == LogLevel.INFO
    assert settings.OUTPUT_DIR == "runs"
    assert settings.PRESET_DIR == "config/presets"
    assert settings.THREADS == 1
    assert settings.DEFAULT_SEED == 20210101
    assert settings.DEGENERATE_FLOOR == 1e-6
    assert settings.RETAINED_ENERGY_TOLERANCE == 1e-6


def test_settings_from_environment():
    with patch.dict(
        os.environ,
        {"THREADS": "4", "OUTPUT_DIR": "/tmp/out", "RETAINED_ENERGY_TOLERANCE": "1e-4"},
        clear=True,
    ):
        settings = Settings(_env_file=None)
        assert settings.THREADS == 4
        assert settings.OUTPUT_DIR == "/tmp/out"
        assert settings.RETAINED_ENERGY_TOLERANCE == pytest.approx(1e-4)


def test_settings_rejects_bad_values():
    with patch.dict(os.environ, {"THREADS": "0"}, clear=True):
        with pytest.raises(ValidationError):
            Settings(_env_file=None)
    with patch.dict(os.environ, {"DEGENERATE_FLOOR": "2.0"}, clear=True):
        with pytest.raises(ValueError, match="DEGENERATE_FLOOR"):
            Settings(_env_file=None)


@pytest.mark.parametrize(
    "level,expected",
    [
        (LogLevel.DEBUG, logging.DEBUG),
        (LogLevel.INFO, logging.INFO),
        (LogLevel.WARNING, logging.WARNING),
        (LogLevel.ERROR, logging.ERROR),
        (LogLevel.CRITICAL, logging.CRITICAL),
    ],
)
def test_log_level_to_logging_level(level, expected):
    assert level.to_logging_level() == expected


def test_error_hierarchy():
    for error in (GridMismatchError, EmptyFieldError, EmptyBandError, DegenerateSeedError):
        assert issubclass(error, ValueError)
    assert issubclass(ConfigError, ValueError)
    assert issubclass(ConvergenceError, RuntimeError)


def test_settings_ignore_unknown_environment(mock_env):
    with patch.dict(os.environ, {"MODE": "dev", "LOG_LEVEL": "DEBUG"}):
        settings = Settings(_env_file=None)
    assert settings.LOG_LEVEL == LogLevel.DEBUG
    assert "MODE" not in settings.model_dump()
