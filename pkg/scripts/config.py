import os
from dotenv import load_dotenv

load_dotenv()


def _int_env(name, default):
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        return default


class Config:
    # Parallélisme du balayage (sweep)
    WORKERS = _int_env("SCHUBERT_WORKERS", os.cpu_count() or 1)

    # Logs
    LOG_LEVEL = os.getenv("SCHUBERT_LOG_LEVEL", "INFO").upper()
    LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

    # Paths
    OUTPUT_DIR = os.getenv("SCHUBERT_OUTPUT_DIR", "data/processed")

    # Taille des caches LRU (coefficients LR, poussées par niveau)
    CACHE_SIZE = _int_env("SCHUBERT_CACHE_SIZE", 200_000)
