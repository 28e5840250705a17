"""Application settings configuration."""

from functools import lru_cache
from typing import Any, Dict, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Defaults for experiments, loaded from FDMAC_* environment variables and .env files.

    Command-line flags and scenario files take precedence over these values.
    """

    model_config = SettingsConfigDict(
        env_prefix="FDMAC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    app_name: str = "fdmac"
    app_version: str = "1.0.0"

    # Simulation run lengths, in transmission attempts
    warmup_attempts: int = Field(default=10_000, ge=0)
    measure_attempts: int = Field(default=100_000, ge=1)
    full_scale_measure_attempts: int = Field(default=1_000_000, ge=1)
    replications: int = Field(default=5, ge=1)
    seed_base: int = Field(default=0, ge=0)
    max_workers: Optional[int] = Field(default=None, ge=1)

    # Analysis
    tolerance: float = Field(default=0.01, gt=0.0)
    solver_tolerance: float = Field(default=1e-10, gt=0.0)
    solver_max_iterations: int = Field(default=200, ge=1)

    # Output
    output_dir: str = "data/output"

    # Logging settings
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.upper()

    def get_logging_config(self, level: Optional[str] = None) -> Dict[str, Any]:
        """Get logging configuration."""
        return {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "default": {
                    "format": self.log_format,
                },
            },
            "handlers": {
                "default": {
                    "formatter": "default",
                    "class": "logging.StreamHandler",
                    "stream": "ext://sys.stderr",
                },
            },
            "root": {
                "level": level or self.log_level,
                "handlers": ["default"],
            },
        }


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
