# superal/core/config.py
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict

from superal.core.settings import DEFAULT_RANDOM_RANGE, MERSENNE_61


class Settings(BaseSettings):
    # --- Verification run defaults ---
    AL_JOBS: int = 1
    AL_PRIME: int = MERSENNE_61
    AL_CHUNK_SIZE: int = 2048
    AL_MAX_WITNESSES: int = 5
    AL_CACHE_SIZE: int = 1 << 17
    AL_RANDOM_RANGE: int = DEFAULT_RANDOM_RANGE

    # --- Optional extras (lower-case to match env exactly) ---
    log_level: Optional[str] = None
    log_dir: Optional[str] = None
    metrics_json: Optional[str] = None

    # Pydantic v2 settings
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="allow",   # accept unknown env keys without error
    )

settings = Settings()
