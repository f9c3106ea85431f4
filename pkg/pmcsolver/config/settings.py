"""Application configuration using Pydantic settings."""
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import model_validator


class Settings(BaseSettings):
    """Solver settings loaded from environment variables (prefix ``PMC_``)."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="PMC_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    environment: str = "development"
    log_level: str = "INFO"

    # Enumeration budgets
    default_budget: int = 200_000
    pmc_scan_max_n: int = 22
    all_pmcs_max_n: int = 16

    # Exact treewidth and brute-force oracles
    treewidth_max_n: int = 24
    brute_force_max_n: int = 16
    definition_oracle_max_n: int = 7

    # Instance generation and verification sweeps
    generator_max_rejections: int = 2000
    verify_instances: int = 30
    verify_max_n: int = 9
    seed: int = 0

    @model_validator(mode="after")
    def validate_limits(self) -> "Settings":
        """Validate that budgets and size caps are positive."""
        for name in (
            "default_budget",
            "pmc_scan_max_n",
            "all_pmcs_max_n",
            "treewidth_max_n",
            "brute_force_max_n",
            "definition_oracle_max_n",
            "generator_max_rejections",
            "verify_instances",
            "verify_max_n",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name.upper()} must be positive")
        return self


# Global settings instance
settings = Settings()
