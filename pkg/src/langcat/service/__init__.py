"""HTTP API over the catalogue: entries, search, review, analytics."""

from langcat.service.app import create_app
from langcat.service.config import ServiceConfig, load_config

__all__ = ["ServiceConfig", "create_app", "load_config"]
