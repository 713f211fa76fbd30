from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    # Truncation
    DEFAULT_ORDER: int = 64
    SYMBOLIC_VERIFY_ORDER: int = 64

    # Decision procedures
    TELESCOPER_NMAX: int = 6
    CERTIFY_GUARD_BAND: int = 8

    # Acceptance suite
    ACCEPTANCE_WORKERS: int = 4
    PROPERTY_SEED: int = 20211

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"

    model_config = SettingsConfigDict(env_file=".env", env_prefix="TAUCERT_", extra="ignore")

settings = Settings()
