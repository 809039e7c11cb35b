"""Configuration settings for the qtoric toolkit."""

import logging
from pathlib import Path
from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings with environment variable support (prefix ``QTORIC_``)."""

    model_config = SettingsConfigDict(
        env_prefix="QTORIC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # On-disk graded-piece cache; unset disables disk caching
    cache_dir: Path | None = None

    # Logging goes to stderr; stdout carries tables only
    log_level: str = "WARNING"
    log_format: Literal["json", "console"] = "json"

    # Export OpenTelemetry spans to stderr
    trace_console: bool = False

    # Prometheus text exposition written by the CLI at exit
    metrics_file: Path | None = None

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate and normalize the log level name."""
        if not v:
            msg = "Log level cannot be empty"
            raise ValueError(msg)
        level = v.upper()
        if level not in logging.getLevelNamesMapping():
            msg = f"Unknown log level '{v}'"
            raise ValueError(msg)
        return level


# Global settings instance
settings = Settings()
