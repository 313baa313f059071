"""Application Configuration.

This module handles application configuration using Pydantic Settings.
"""

from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SolverSettings(BaseSettings):
    """External SAT solver settings."""

    model_config = SettingsConfigDict(env_prefix="SOLVER_")

    command: str | None = Field(
        default=None,
        description="Solver command template; '{instance}' is replaced by the DIMACS path",
    )
    time_limit: float = Field(default=600.0, gt=0, description="Per-instance limit in seconds")
    workers: int = Field(default=1, ge=1, description="Concurrent solver processes")


class LimitSettings(BaseSettings):
    """Capacity limits for exhaustive operations."""

    model_config = SettingsConfigDict(env_prefix="LIMITS_")

    scan_max_n: int = Field(default=20, description="Largest n of a default sensitivity scan")
    extended_scan_max_n: int = Field(default=25, description="Largest n with --allow-large")
    bs_scan_max_n: int = Field(default=12, description="Largest n of a full bs(f) scan")
    bs_input_max_n: int = Field(default=16, description="Largest n of a per-input bs search")
    oracle_max_n: int = Field(default=4, description="Largest n enumerated by the oracle")
    oracle_extended_max_n: int = Field(default=5, description="Oracle limit with --allow-large")


class SearchSettings(BaseSettings):
    """Search orchestration settings."""

    model_config = SettingsConfigDict(env_prefix="SEARCH_")

    records_path: Path = Field(default=Path("records.jsonl"), description="Record log file")
    prune_singletons: bool = Field(
        default=True, description="Skip partitions with more singleton parts than s"
    )
    table_max_n: int = Field(default=9, ge=1, description="Default max n of the table command")


class AppSettings(BaseSettings):
    """Application configuration settings."""

    model_config = SettingsConfigDict(env_prefix="APP_")

    name: str = Field(default="sensitivity-workbench", description="Application name")
    version: str = Field(default="0.1.0", description="Application version")


class LogSettings(BaseSettings):
    """Logging configuration settings."""

    model_config = SettingsConfigDict(env_prefix="LOG_")

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="INFO", description="Log level"
    )
    format: Literal["json", "console", "auto"] = Field(
        default="console", description="Log format (json, console, or auto by terminal)"
    )

    @field_validator("level", mode="before")
    @classmethod
    def _upper_level(cls, value: object) -> object:
        return value.strip().upper() if isinstance(value, str) else value


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8")

    solver: SolverSettings = Field(default_factory=SolverSettings)
    limits: LimitSettings = Field(default_factory=LimitSettings)
    search: SearchSettings = Field(default_factory=SearchSettings)
    app: AppSettings = Field(default_factory=AppSettings)
    log: LogSettings = Field(default_factory=LogSettings)


# Global settings instance
settings = Settings()
