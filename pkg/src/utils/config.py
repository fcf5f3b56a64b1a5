"""Configuration management using environment variables and pydantic."""

from typing import Literal
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Enumeration Configuration
    enumeration_cap: int = 20  # Max ground-set size for brute-force paths
    lex_verify: bool = True  # Re-check lex_max against enumeration within the cap

    # Numeric Configuration
    tolerance: float = 1e-9
    interval_precision_bits: int = 40  # Rational grid for irrational interval lengths

    # Sampling Configuration
    default_seed: int = 0
    bit_exponent_low: int = -4
    bit_exponent_high: int = 4
    bit_function_samples: int = 1000
    escalation_samples: int = 10000  # Budget used when structural predicates disagree
    minor_depth: int = 2

    # Merge Configuration
    merge_samples: int = 64
    d2_bit_budget: int = 4096  # Larger D2 values collapse to +inf

    # Logging Configuration
    log_level: str = "INFO"
    log_format: Literal["json", "text"] = "text"
    log_file_path: str = ""  # Empty disables the file sink
    log_max_size_mb: int = 100
    log_backup_count: int = 5

    # Development/Testing
    debug_mode: bool = False


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get or create the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings
