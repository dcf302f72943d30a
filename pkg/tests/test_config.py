"""Tests for tensegrity-strata configuration."""

import logging

import pytest

from tensegrity_strata.config import CatalogConfig, Config, RenderConfig, SamplingConfig
from tensegrity_strata.exceptions import ConfigError
from tensegrity_strata.themes import get_palette


@pytest.fixture(autouse=True)
def no_user_config(monkeypatch, tmp_path):
    """Keep the developer's own config file out of the tests."""
    monkeypatch.setattr(Config, "CONFIG_FILE", tmp_path / "user" / "config.toml")


def write_project_config(tmp_path, text):
    (tmp_path / Config.PROJECT_CONFIG_FILE).write_text(text)
    return tmp_path


class TestSamplingConfig:
    """Tests for SamplingConfig dataclass."""

    def test_default_values(self):
        """Seed 1 and three samples unless configured."""
        config = SamplingConfig()

        assert config.seed == 1
        assert config.samples == 3
        assert config.coordinate_bound == 1_000_000


class TestCatalogConfig:
    """Tests for CatalogConfig dataclass."""

    def test_default_values(self):
        """Visibility needs 25 of 30 witness samples."""
        config = CatalogConfig()

        assert config.witness_samples == 30
        assert config.visibility_threshold == 25


class TestRenderConfig:
    """Tests for RenderConfig dataclass."""

    def test_default_values(self):
        """RenderConfig should have sensible defaults."""
        config = RenderConfig()

        assert config.theme == "paper"
        assert 0 <= config.margin < 1

    def test_palette_lookup(self):
        """Known themes resolve, unknown ones are a config error."""
        assert get_palette("slate").background != get_palette("paper").background
        with pytest.raises(ConfigError):
            get_palette("neon")


class TestConfig:
    """Tests for main Config class."""

    def test_load_returns_config(self):
        """Config.load should return a Config instance."""
        config = Config.load()

        assert isinstance(config, Config)
        assert isinstance(config.sampling, SamplingConfig)
        assert isinstance(config.catalog, CatalogConfig)
        assert isinstance(config.render, RenderConfig)

    def test_project_file_overrides_defaults(self, tmp_path):
        """Values in the project file replace defaults."""
        path = write_project_config(tmp_path, "[sampling]\nseed = 42\n\n[render]\ntheme = \"slate\"\n")
        config = Config.load(path)

        assert config.sampling.seed == 42
        assert config.sampling.samples == 3
        assert config.render.theme == "slate"

    def test_integer_margin_is_accepted(self, tmp_path):
        """An integer is a valid float setting."""
        config = Config.load(write_project_config(tmp_path, "[render]\nmargin = 0\n"))

        assert config.render.margin == 0.0

    def test_wrong_type(self, tmp_path):
        """A string where a count belongs is a config error."""
        path = write_project_config(tmp_path, "[sampling]\nsamples = \"many\"\n")
        with pytest.raises(ConfigError):
            Config.load(path)

    def test_boolean_is_not_a_count(self, tmp_path):
        """TOML booleans are rejected for integer settings."""
        path = write_project_config(tmp_path, "[sampling]\nseed = true\n")
        with pytest.raises(ConfigError):
            Config.load(path)

    def test_invalid_toml_is_skipped(self, tmp_path, caplog):
        """A broken file is logged and the defaults stay."""
        path = write_project_config(tmp_path, "[sampling\nseed = 2\n")
        with caplog.at_level(logging.WARNING):
            config = Config.load(path)

        assert config.sampling.seed == 1
        assert "Invalid TOML" in caplog.text

    def test_unknown_key_is_logged(self, tmp_path, caplog):
        """Unknown settings are ignored with a warning."""
        path = write_project_config(tmp_path, "[sampling]\ncolour = 3\n")
        with caplog.at_level(logging.WARNING):
            Config.load(path)

        assert "Unknown setting" in caplog.text

    @pytest.mark.parametrize(
        "text",
        [
            "[sampling]\nsamples = 0\n",
            "[catalog]\nwitness_samples = 10\nvisibility_threshold = 11\n",
            "[render]\nmargin = 1.5\n",
            "[render]\ntheme = \"neon\"\n",
        ],
    )
    def test_validate(self, tmp_path, text):
        """Out-of-range values fail validation."""
        with pytest.raises(ConfigError):
            Config.load(write_project_config(tmp_path, text))

    def test_config_file_paths(self):
        """Config should define standard config paths."""
        assert Config.CONFIG_FILE.name == "config.toml"
        assert Config.PROJECT_CONFIG_FILE == ".tensegrity-strata.toml"
