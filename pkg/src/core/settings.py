from enum import StrEnum
from typing import Any

from dotenv import find_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogLevel(StrEnum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"

    def to_logging_level(self) -> int:
        """Convert to Python logging level constant."""
        import logging

        mapping = {
            LogLevel.DEBUG: logging.DEBUG,
            LogLevel.INFO: logging.INFO,
            LogLevel.WARNING: logging.WARNING,
            LogLevel.ERROR: logging.ERROR,
            LogLevel.CRITICAL: logging.CRITICAL,
        }
        return mapping[self]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=find_dotenv(),
        env_file_encoding="utf-8",
        env_ignore_empty=True,
        extra="ignore",
        validate_default=False,
    )
    LOG_LEVEL: LogLevel = LogLevel.INFO

    # Run layout
    OUTPUT_DIR: str = "runs"
    PRESET_DIR: str = "config/presets"
    THREADS: int = Field(default=1, ge=1)
    DEFAULT_SEED: int = Field(default=20210101, ge=0)

    # Numerical tolerances shared by the spectral, oracle and iteration layers
    DEGENERATE_FLOOR: float = Field(default=1e-6, gt=0)
    ORTHONORMAL_TOLERANCE: float = Field(default=1e-6, gt=0)
    RETAINED_ENERGY_TOLERANCE: float = Field(default=1e-6, gt=0, lt=1)
    DEGENERATE_SINGULAR_GAP: float = Field(default=1e-10, ge=0)
    ISLAND_THRESHOLD: float = Field(default=0.01, gt=0, lt=1)

    def model_post_init(self, __context: Any) -> None:
        if self.DEGENERATE_FLOOR >= 1:
            raise ValueError("DEGENERATE_FLOOR must be a fraction of the input norm (< 1)")
        if self.ORTHONORMAL_TOLERANCE >= 1:
            raise ValueError("ORTHONORMAL_TOLERANCE must be < 1")


settings = Settings()
