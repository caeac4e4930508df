import json
import os
from functools import lru_cache
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from src.utils.errors import InvalidConfig

CONFIG_FILE = "config.json"
ENV_MAX_PER_N = "CONGRUENCE_LAB_MAX_PER_N"


class EngineSettings(BaseModel):
    max_per_n: int = Field(28, ge=1, le=32)
    ryser_chunks: int = Field(1, ge=1)
    ryser_jobs: int = Field(1, ge=1)


class GateSettings(BaseModel):
    # largest p for the permanent parts of C7/C8/C9 and of C5/C6
    per_pmax_small: int = 17
    per_pmax_large: int = 13
    det_pmax: int = 1000
    valuation_cap: int = Field(5, ge=1, le=5)


class LoggingSettings(BaseModel):
    level: str = "INFO"
    alerts_file: str | None = None


class Settings(BaseModel):
    engines: EngineSettings = EngineSettings()
    gates: GateSettings = GateSettings()
    logging: LoggingSettings = LoggingSettings()


def load_settings(path: str | os.PathLike | None = CONFIG_FILE) -> Settings:
    """
    Read config.json if present, then apply environment overrides.
    """
    raw: dict = {}
    if path is not None and Path(path).exists():
        try:
            with open(path, encoding="utf-8") as f:
                raw = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidConfig(f"{path}: {e}") from None

    override = os.environ.get(ENV_MAX_PER_N)
    if override is not None:
        try:
            raw.setdefault("engines", {})["max_per_n"] = int(override)
        except ValueError:
            raise InvalidConfig(f"{ENV_MAX_PER_N}={override!r} is not an integer") from None

    try:
        return Settings.model_validate(raw)
    except ValidationError as e:
        raise InvalidConfig(str(e)) from None


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
