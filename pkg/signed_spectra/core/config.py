from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    THREADS: int = 1
    LOG_LEVEL: str = "WARNING"

    EIGENSOLVER: Literal["jacobi", "lapack"] = "jacobi"
    JACOBI_TOLERANCE: float = 1e-12
    JACOBI_MAX_SWEEPS: int = 100

    # enumeration states allowed for exact Cheeger constants
    EXACT_BUDGET: int = 2_000_000
    FRUSTRATION_EXACT_CAP: int = 24
    LOCAL_SEARCH_RESTARTS: int = 20

    PARTITION_RETRY_CAP: int = 200
    KMEANS_MAX_ITER: int = 100

    CHECK_INVARIANTS: bool = True
    DEFAULT_SEED: int = 0

    model_config = SettingsConfigDict(
        env_prefix="SIGNED_SPECTRA_",
        env_file=".env",
        extra="ignore",
    )


settings = Settings()
