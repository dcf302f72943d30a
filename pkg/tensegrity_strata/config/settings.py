"""Configuration settings for tensegrity-strata."""

from __future__ import annotations

import logging
import os

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from ..exceptions import ConfigError
from . import defaults

logger = logging.getLogger(__name__)


@dataclass
class SamplingConfig:
    """Random configuration sampling."""

    seed: int = defaults.DEFAULT_SEED
    samples: int = defaults.DEFAULT_SAMPLES
    coordinate_bound: int = defaults.COORDINATE_BOUND


@dataclass
class CatalogConfig:
    """Catalog verification settings."""

    witness_samples: int = defaults.WITNESS_SAMPLES
    visibility_threshold: int = defaults.VISIBILITY_THRESHOLD


@dataclass
class RenderConfig:
    """SVG rendering settings."""

    margin: float = defaults.RENDER_MARGIN
    width: int = defaults.RENDER_WIDTH
    theme: str = "paper"


def _typed(section: str, key: str, value: Any, kind: type) -> Any:
    # bool is an int subclass; TOML booleans are never valid counts
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        return float(value)
    if isinstance(value, bool) or not isinstance(value, kind):
        raise ConfigError(f"[{section}] {key} must be {kind.__name__}, got {value!r}")
    return value


@dataclass
class Config:
    """Main configuration class for tensegrity-strata."""

    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    catalog: CatalogConfig = field(default_factory=CatalogConfig)
    render: RenderConfig = field(default_factory=RenderConfig)

    # XDG config directory
    CONFIG_DIR = Path(os.environ.get("XDG_CONFIG_HOME") or (Path.home() / ".config")) / "tensegrity-strata"
    CONFIG_FILE = CONFIG_DIR / "config.toml"
    PROJECT_CONFIG_FILE = ".tensegrity-strata.toml"

    @classmethod
    def load(cls, project_path: Optional[Path] = None) -> "Config":
        """Load configuration from files.

        Priority (highest to lowest):
        1. Project-specific config (.tensegrity-strata.toml in project root)
        2. User config (~/.config/tensegrity-strata/config.toml)
        3. Default values
        """
        config = cls()

        if cls.CONFIG_FILE.exists():
            config._load_from_file(cls.CONFIG_FILE)

        if project_path:
            project_config = project_path / cls.PROJECT_CONFIG_FILE
            if project_config.exists():
                config._load_from_file(project_config)

        config.validate()
        return config

    def _load_from_file(self, path: Path) -> None:
        """Load configuration from a TOML file.

        Args:
            path: Path to the TOML configuration file.

        Note:
            Unreadable files and invalid TOML are logged and skipped. Values of
            the wrong type raise :class:`ConfigError`.
        """
        try:
            with open(path, "rb") as f:
                data = tomllib.load(f)
        except FileNotFoundError:
            return
        except tomllib.TOMLDecodeError as e:
            logger.warning("Invalid TOML in %s: %s", path, e)
            return
        except OSError as e:
            logger.warning("Cannot read config file %s: %s", path, e)
            return

        sections = {"sampling": self.sampling, "catalog": self.catalog, "render": self.render}
        for name, target in sections.items():
            values = data.get(name, {})
            if not isinstance(values, dict):
                raise ConfigError(f"[{name}] must be a table")
            for key, value in values.items():
                if not hasattr(target, key):
                    logger.warning("Unknown setting [%s] %s in %s", name, key, path)
                    continue
                current = getattr(target, key)
                setattr(target, key, _typed(name, key, value, type(current)))

    def validate(self) -> None:
        if self.sampling.samples < 1:
            raise ConfigError("[sampling] samples must be at least 1")
        if self.sampling.coordinate_bound < 1:
            raise ConfigError("[sampling] coordinate_bound must be positive")
        if not 0 <= self.catalog.visibility_threshold <= self.catalog.witness_samples:
            raise ConfigError("[catalog] visibility_threshold must lie in 0..witness_samples")
        if not 0 <= self.render.margin < 1:
            raise ConfigError("[render] margin must lie in [0, 1)")
        if self.render.theme not in defaults.RENDER_THEMES:
            raise ConfigError(f"[render] unknown theme {self.render.theme!r}")

    def save(self) -> None:
        """Save configuration to user config file."""
        self.CONFIG_DIR.mkdir(parents=True, exist_ok=True)

        content = f"""# tensegrity-strata configuration

[sampling]
seed = {self.sampling.seed}
samples = {self.sampling.samples}
coordinate_bound = {self.sampling.coordinate_bound}

[catalog]
witness_samples = {self.catalog.witness_samples}
visibility_threshold = {self.catalog.visibility_threshold}

[render]
margin = {self.render.margin}
width = {self.render.width}
theme = "{self.render.theme}"
"""
        with open(self.CONFIG_FILE, "w") as f:
            f.write(content)
