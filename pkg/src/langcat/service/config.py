"""Service configuration: a JSON file with environment overrides.

File keys mirror the model fields.  Environment variables win over the
file: ``CATALOGUE_DATA_DIR``, ``CATALOGUE_HOST``, ``CATALOGUE_PORT``,
``CATALOGUE_CORS_ORIGIN``.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from pydantic import BaseModel, ConfigDict, ValidationError

_ENV_KEYS = {
    "CATALOGUE_DATA_DIR": "data_dir",
    "CATALOGUE_HOST": "host",
    "CATALOGUE_PORT": "port",
    "CATALOGUE_CORS_ORIGIN": "cors_origin",
}


class ServiceConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    data_dir: str = "./catalogue-data"
    host: str = "127.0.0.1"
    port: int = 8000
    cors_origin: str | None = None


def load_config(path: str | Path | None = None) -> ServiceConfig:
    data: dict = {}
    if path is not None:
        raw = Path(path).read_text("utf-8")
        data = json.loads(raw)
        if not isinstance(data, dict):
            raise ValueError(f"config file {path} must hold a JSON object")
    for env_key, field in _ENV_KEYS.items():
        value = os.environ.get(env_key)
        if value is not None:
            data[field] = value
    try:
        return ServiceConfig.model_validate(data)
    except ValidationError as exc:
        raise ValueError(f"bad service configuration: {exc}") from None
