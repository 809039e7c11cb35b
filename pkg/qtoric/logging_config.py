"""Logging configuration for the qtoric toolkit."""

from common.logging_config import configure_structlog, get_logger
from qtoric.config import settings

configure_structlog("qtoric", settings.log_level, settings.log_format)

# Re-export get_logger
__all__ = ["configure_structlog", "get_logger"]
