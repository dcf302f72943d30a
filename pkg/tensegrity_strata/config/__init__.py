"""Configuration module for tensegrity-strata."""

from .settings import CatalogConfig, Config, RenderConfig, SamplingConfig

__all__ = ["Config", "SamplingConfig", "CatalogConfig", "RenderConfig"]
