"""
Application configuration module
"""
import os
from typing import List

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """Application settings"""

    model_config = SettingsConfigDict(env_file=".env", env_prefix="BQALG_", extra="ignore")

    # Application
    app_name: str = os.getenv("BQALG_APP_NAME", "bqalg")
    app_version: str = os.getenv("BQALG_APP_VERSION", "1.0.0")
    debug: bool = os.getenv("BQALG_DEBUG", "False").lower() == "true"
    log_level: str = os.getenv("BQALG_LOG_LEVEL", "WARNING")

    # Algebra
    default_backend: str = os.getenv("BQALG_DEFAULT_BACKEND", "exact")
    approx_tolerance: float = float(os.getenv("BQALG_APPROX_TOLERANCE", "1e-9"))

    # Generation and verification
    default_seed: int = int(os.getenv("BQALG_DEFAULT_SEED", "0"))
    verify_workers: int = int(os.getenv("BQALG_VERIFY_WORKERS", "1"))
    max_count: int = int(os.getenv("BQALG_MAX_COUNT", "100000"))
    max_trials: int = int(os.getenv("BQALG_MAX_TRIALS", "1000000"))

    # CORS
    allowed_origins: List[str] = ["*"]


# Global settings instance
settings = Settings()
