from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application configuration loaded from ``LINHASH_*`` environment variables.

    Attributes:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        ball_stream_limit: Largest ball the verifier will stream
        max_info_bits: Largest L - l for which codewords are enumerated
        pairwise_info_limit: Largest L - l for which the pairwise distance oracle also runs
        exhaustive_verify_limit: Largest |D| verified exhaustively after a general construction
        verification_samples: Sample size when |D| exceeds the exhaustive limit
        fuzz_trials: Default trial count for the round-trip fuzzer
    """

    log_level: str = "INFO"
    ball_stream_limit: int = 2**24
    max_info_bits: int = 16
    pairwise_info_limit: int = 13
    exhaustive_verify_limit: int = 2**20
    verification_samples: int = 4096
    fuzz_trials: int = 10_000

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="LINHASH_",
        env_ignore_empty=True,
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
