"""
User settings for the thagkl CLI.

Defaults, then ~/.thagkl/settings.json, then the THAG_MAX_N environment
variable (max_n only). The file is only written by `thagkl settings --set`.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Dict, Optional, Set

from .errors import InvalidInputError
from .partitions import DIMENSION_GUARD
from .render import FORMATS
from .series import MAX_IDENTITY_ORDER, MIN_IDENTITY_ORDER

logger = logging.getLogger(__name__)

ENV_MAX_N = "THAG_MAX_N"


@dataclass
class Settings:
    max_n: int = 10
    series_order: int = 9
    default_format: str = "text"

    def validate(self):
        if not 0 <= self.max_n <= DIMENSION_GUARD:
            raise InvalidInputError(f"max_n must be between 0 and {DIMENSION_GUARD}, got {self.max_n}")
        if not MIN_IDENTITY_ORDER <= self.series_order <= MAX_IDENTITY_ORDER:
            raise InvalidInputError(
                f"series_order must be between {MIN_IDENTITY_ORDER} and {MAX_IDENTITY_ORDER}, got {self.series_order}"
            )
        if self.default_format not in FORMATS:
            raise InvalidInputError(f"default_format must be one of {', '.join(FORMATS)}, got {self.default_format!r}")

    def to_dict(self) -> Dict:
        return asdict(self)


SETTING_TYPES = {f.name: f.type for f in fields(Settings)}


def _coerce(key: str, raw) -> object:
    expected = SETTING_TYPES[key]
    if expected in (int, "int"):
        try:
            return int(raw)
        except (TypeError, ValueError):
            raise InvalidInputError(f"{key} must be an integer, got {raw!r}") from None
    return str(raw)


class SettingsStore:
    """Loads and saves Settings under the user's home directory"""

    def __init__(self, home: Optional[Path] = None):
        self.config_dir = (home or Path.home()) / ".thagkl"
        self.config_file = self.config_dir / "settings.json"
        self.overridden: Set[str] = set()

    def load_file(self) -> Dict:
        """Raw values from the settings file; unreadable files count as empty"""
        if self.config_file.exists():
            try:
                with open(self.config_file, "r") as f:
                    data = json.load(f)
                if isinstance(data, dict):
                    return data
            except (json.JSONDecodeError, IOError) as e:
                logger.warning("ignoring unreadable settings file %s: %s", self.config_file, e)
        return {}

    def load(self) -> Settings:
        settings = Settings()
        for key, raw in self.load_file().items():
            if key not in SETTING_TYPES:
                logger.warning("ignoring unknown setting %r", key)
                continue
            try:
                setattr(settings, key, _coerce(key, raw))
            except InvalidInputError as e:
                logger.warning("ignoring setting: %s", e)
        self.overridden = set()
        env_value = os.environ.get(ENV_MAX_N)
        if env_value:
            try:
                settings.max_n = int(env_value)
                self.overridden.add("max_n")
            except ValueError:
                logger.warning("ignoring %s=%r: not an integer", ENV_MAX_N, env_value)
        try:
            settings.validate()
        except InvalidInputError as e:
            logger.warning("falling back to default settings: %s", e)
            self.overridden = set()
            return Settings()
        return settings

    def save(self, settings: Settings):
        """Write settings to the file, creating ~/.thagkl if needed"""
        settings.validate()
        self.config_dir.mkdir(parents=True, exist_ok=True)
        with open(self.config_file, "w") as f:
            json.dump(settings.to_dict(), f, indent=2)

    def set_value(self, key: str, raw: str) -> Settings:
        """Persist one KEY=VALUE change on top of the file contents"""
        if key not in SETTING_TYPES:
            raise InvalidInputError(f"unknown setting {key!r}; known settings: {', '.join(SETTING_TYPES)}")
        settings = Settings()
        for name, value in self.load_file().items():
            if name in SETTING_TYPES:
                try:
                    setattr(settings, name, _coerce(name, value))
                except InvalidInputError:
                    pass
        setattr(settings, key, _coerce(key, raw))
        self.save(settings)
        return settings


def load_settings() -> Settings:
    return SettingsStore().load()
