"""Application configuration using Pydantic Settings."""
from __future__ import annotations

from pathlib import Path
from typing import List

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings

DEFAULTS_PATH = Path(__file__).with_name("defaults.yaml")


class BettiSettings(BaseModel):
    lcm_cap: int = 1 << 16


class EnumerationSettings(BaseModel):
    cap: int = 200_000


class SamplingSettings(BaseModel):
    max_degree: int | None = None
    extra_generators: int = 3


class VerifySettings(BaseModel):
    seed: int = 0
    trials: int = 100
    linkage_degrees: List[str] = Field(default_factory=lambda: ["2,2", "2,3", "3,3", "2,2,2"])
    spp_degrees: List[str] = Field(default_factory=lambda: ["2,2", "2,3", "3,3"])
    main_theorem_degrees: List[str] = Field(default_factory=lambda: ["2,3"])
    stable_max_degree: int = 4
    stable_variables: int = 3


class Settings(BaseSettings):
    """Runtime settings loaded from env and config file."""

    log_json: bool = False
    log_level: str = "WARNING"

    betti: BettiSettings = Field(default_factory=BettiSettings)
    enumeration: EnumerationSettings = Field(default_factory=EnumerationSettings)
    sampling: SamplingSettings = Field(default_factory=SamplingSettings)
    verify: VerifySettings = Field(default_factory=VerifySettings)

    model_config = {
        "env_prefix": "LEXPOW_",
        "case_sensitive": False,
        "env_file": ".env",
        "env_file_encoding": "utf-8",
    }

    @classmethod
    def load(cls, config_path: Path | None = None) -> "Settings":
        config_data: dict = {}
        if DEFAULTS_PATH.exists():
            config_data.update(yaml.safe_load(DEFAULTS_PATH.read_text()) or {})
        if config_path and config_path.exists():
            config_data.update(yaml.safe_load(config_path.read_text()) or {})
        return cls(**config_data)
