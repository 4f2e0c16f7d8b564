import json
import logging
from pathlib import Path

from pydantic import BaseModel, ValidationError

from core import settings
from core.errors import ConfigError
from schema import SCHEMA_VERSION, ExperimentConfig

logger = logging.getLogger(__name__)

REPO_ROOT = Path(__file__).resolve().parents[2]


def preset_dir() -> Path:
    configured = Path(settings.PRESET_DIR)
    if configured.is_absolute() or configured.exists():
        return configured
    return REPO_ROOT / configured


def list_presets() -> list[str]:
    return sorted(path.stem for path in preset_dir().glob("*.json"))


def load_config(path: Path) -> ExperimentConfig:
    """Parse an experiment file; every failure surfaces as ConfigError."""
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from exc
    try:
        return ExperimentConfig.model_validate_json(text)
    except ValidationError as exc:
        raise ConfigError(f"invalid config {path}:\n{exc}") from exc


def load_preset(name: str) -> ExperimentConfig:
    path = preset_dir() / f"{name}.json"
    if not path.exists():
        raise ConfigError(f"unknown preset '{name}'; available: {', '.join(list_presets())}")
    return load_config(path)


class ResolvedConfig(BaseModel):
    schema_tag: str = SCHEMA_VERSION
    config: ExperimentConfig


def write_resolved_config(config: ExperimentConfig, out_dir: Path) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "resolved_config.json"
    path.write_text(ResolvedConfig(config=config).model_dump_json(indent=2))
    return path


def read_resolved_config(path: Path) -> ExperimentConfig:
    payload = json.loads(path.read_text())
    if payload.get("schema_tag") != SCHEMA_VERSION:
        found = payload.get("schema_tag")
        raise ConfigError(f"{path} has schema {found!r}, need {SCHEMA_VERSION!r}")
    return ExperimentConfig.model_validate(payload["config"])
