import logging
import os
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer, using %d", name, raw, default)
        return default


class Settings:
    """Toolkit settings, read from the environment (and a local .env file)."""
    # Default seed for the property corpora. Reports are reproducible given this value.
    DEFAULT_SEED = _int_from_env("REES_SEED", 20240917) % (1 << 64)

    # Worker processes for sweep cells and corpus trials; 1 keeps everything in-process.
    MAX_WORKERS = max(1, _int_from_env("REES_MAX_WORKERS", 1))

    LOG_LEVEL = os.getenv("REES_LOG_LEVEL", "WARNING").upper()

    CORPUS_TRIALS = max(0, _int_from_env("REES_CORPUS_TRIALS", 200))

    # Comma-separated browser origins allowed to call the API; empty disables CORS.
    CORS_ORIGINS = [o.strip() for o in os.getenv("REES_CORS_ORIGINS", "").split(",") if o.strip()]

settings = Settings()
