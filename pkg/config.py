"""Configuration for the Bass-Serre workbench."""
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "text"  # "text" or "json"

    # Rewriting
    REWRITE_FUEL: int = 1_000_000

    # Formal languages
    PDA_FUEL: int = 200_000
    PDA_STACK_SLACK: int = 2
    SLICE_LENGTH: int = 8

    # Finite groups
    ASSOCIATIVITY_FULL_CHECK_MAX: int = 64
    ASSOCIATIVITY_SAMPLES: int = 20_000
    INFINITE_ORDER_CHECK: int = 16

    # Cayley balls, tree decompositions and cuts
    DEFAULT_RADIUS: int = 4
    DEFAULT_MAX_CUT_WEIGHT: int = 6
    TREEWIDTH_MAX_VERTICES: int = 16

    # Reports
    DEFAULT_SEED: int = 0
    REPORT_SCHEMA_VERSION: int = 1

    class Config:
        env_file = ".env"
        case_sensitive = True


settings = Settings()
