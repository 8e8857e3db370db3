"""Runtime defaults: `config.json` "defaults" section, overridden by INFODIST_* env vars."""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Dict

from pydantic import BaseModel, Field, ValidationError

from utils.logger import get_logger

logger = get_logger(__name__)

ENV_PREFIX = "INFODIST_"
DEFAULT_CONFIG = Path(__file__).resolve().parents[1] / "config.json"


class Settings(BaseModel):
    seed: int = Field(default=0, ge=0)
    jobs: int = Field(default=1, ge=1)
    precision: int = Field(default=6, ge=0, le=15)
    kt_order: int = Field(default=0, ge=0)
    min_entropy: float = Field(default=1e-3, ge=0.0)


def _read_defaults(path: Path) -> Dict[str, Any]:
    if not path.is_file():
        return {}
    try:
        return json.loads(path.read_text()).get("defaults", {})
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON in config: {e}") from e


def load_settings(config_path: str | Path | None = None) -> Settings:
    """Build Settings from the config file, then apply INFODIST_<FIELD> environment overrides."""
    values = _read_defaults(Path(config_path) if config_path else DEFAULT_CONFIG)
    for name in Settings.model_fields:
        env_value = os.getenv(f"{ENV_PREFIX}{name.upper()}")
        if env_value is not None:
            values[name] = env_value
    try:
        return Settings(**values)
    except ValidationError as e:
        logger.error("invalid_settings", errors=e.errors(include_url=False))
        raise ValueError(f"Invalid settings: {e}") from e
