"""Load ArnoldConfig from an optional JSON file."""

import json
from pathlib import Path

from pydantic import ValidationError

from src.core.errors import ConfigError
from src.models.config import ArnoldConfig
from src.presets import apply_overrides


def load_config(path: Path | None = None) -> ArnoldConfig:
    """Defaults (presets included) with the file's values merged on top."""
    if path is None:
        return ArnoldConfig()

    try:
        raw = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"config {path} must hold a JSON object")

    data = apply_overrides(ArnoldConfig().model_dump(mode="json"), raw)
    try:
        return ArnoldConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"invalid config {path}: {e}") from e
