import json
import os
from pathlib import Path
from typing import Dict, Any, Optional

from src.utils.logging import get_logger

logger = get_logger("config")

BUDGET_ENV_VAR = "SPECIES_ORACLE_BUDGET"

DEFAULT_SETTINGS: Dict[str, Any] = {
    "oracle": {
        "budget": 1_000_000_000,
        "exhaustive": False,
    },
    "cli": {
        "format": "text",
    },
    "cycle_index": {
        "max_degree": 4,
    },
    "enumeration": {
        "threads": 1,
    },
}


class ConfigError(Exception):
    pass


def _deep_merge(a: dict, b: dict) -> dict:
    """Shallow for lists, recursive for dicts."""
    out = dict(a or {})
    for k, v in (b or {}).items():
        if isinstance(v, dict) and isinstance(out.get(k), dict):
            out[k] = _deep_merge(out[k], v)
        else:
            out[k] = v
    return out


class Config:
    def __init__(self, config_path: Optional[Path] = None):
        self._config: Dict[str, Any] = _deep_merge({}, DEFAULT_SETTINGS)
        self.load(config_path)

    def load(self, config_path: Optional[Path] = None):
        """Load configuration from a JSON file on top of the built-in defaults."""
        explicit = config_path is not None
        if config_path is None:
            config_path = Path(os.getcwd()) / "config" / "settings.json"

        if not config_path.exists():
            if explicit:
                raise ConfigError(f"Config file not found at {config_path}")
            logger.debug(f"No config file at {config_path}; using defaults")
            return

        try:
            with open(config_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Failed to parse config file: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"Config file {config_path} must hold a JSON object")
        self._config = _deep_merge(self._config, data)

    def get(self, key: str, default: Any = None) -> Any:
        """Retrieve a value by dot-notation key (e.g., 'oracle.budget')."""
        keys = key.split(".")
        value = self._config
        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
            else:
                return default
            if value is None:
                return default
        return value

    def oracle_budget(self, override: Optional[int] = None) -> int:
        """Budget precedence: explicit override, then environment, then file/defaults."""
        if override is not None:
            return int(override)
        env_value = os.environ.get(BUDGET_ENV_VAR)
        if env_value:
            try:
                return int(env_value)
            except ValueError:
                raise ConfigError(f"{BUDGET_ENV_VAR} must be an integer, got {env_value!r}")
        return int(self.get("oracle.budget"))
