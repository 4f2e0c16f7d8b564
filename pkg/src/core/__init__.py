from core.errors import (
    ConfigError,
    ConvergenceError,
    DegenerateSeedError,
    EmptyBandError,
    EmptyFieldError,
    GridMismatchError,
)
from core.settings import settings

__all__ = [
    "settings",
    "ConfigError",
    "ConvergenceError",
    "DegenerateSeedError",
    "EmptyBandError",
    "EmptyFieldError",
    "GridMismatchError",
]
