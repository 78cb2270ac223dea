import logging
import os
import sys
from types import SimpleNamespace

from dotenv import load_dotenv

from relmin.errors import MalformedInputError


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise MalformedInputError(f"{name} must be an integer; got {raw!r}")


def load_settings():
    """
    Read runtime defaults from the environment (a local .env file is honoured).
    CLI flags take precedence over everything returned here.
    """
    load_dotenv()

    settings = SimpleNamespace(
        samples=_int_env("RELMIN_SAMPLES", 200),
        seed=_int_env("RELMIN_SEED", 0),
        coeff_magnitude=_int_env("RELMIN_COEFF_MAGNITUDE", 10),
        level=_int_env("RELMIN_LEVEL", 0),
        dim=_int_env("RELMIN_DIM", 2),
        report_directory=os.getenv("RELMIN_REPORT_DIRECTORY", "relmin_reports"),
        log_level=os.getenv("RELMIN_LOG_LEVEL", "WARNING").upper(),
    )
    return settings


def configure_logging(level: str) -> None:
    """Send log records to stderr; stdout is reserved for JSON output."""
    level = level.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise MalformedInputError(f"unknown log level {level!r}")
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
