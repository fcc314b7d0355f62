"""
Configuration constants for the skein engine.

Sources, in order of precedence:
  - command-line flags (handled in app/cli)
  - environment variables (optionally loaded from a project-root .env)
  - an optional TOML file with a [limits] table (SKEIN_CONFIG or --config)
  - the defaults below
"""
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, fields, replace
from pathlib import Path

from app.core.errors import ConfigError
from app.core.log import get_logger

# Load environment variables from .env file if it exists
try:
    from dotenv import load_dotenv
    env_path = Path(__file__).resolve().parent.parent.parent / '.env'
    load_dotenv(dotenv_path=env_path)
except ImportError:
    # python-dotenv not installed, rely on os.environ directly
    pass

logger = get_logger(__name__, "CONFIG")

DEFAULT_PRECISION_BITS = 192
MIN_PRECISION_BITS = 53


def _read_precision() -> int:
    raw = os.getenv("SKEIN_PRECISION_BITS", "").strip()
    if not raw:
        return DEFAULT_PRECISION_BITS
    try:
        bits = int(raw)
    except ValueError:
        logger.warning("SKEIN_PRECISION_BITS=%r is not an integer; using %d", raw, DEFAULT_PRECISION_BITS)
        return DEFAULT_PRECISION_BITS
    if bits < MIN_PRECISION_BITS:
        logger.warning("SKEIN_PRECISION_BITS=%d below %d; using %d", bits, MIN_PRECISION_BITS, MIN_PRECISION_BITS)
        return MIN_PRECISION_BITS
    return bits


# Default binary precision for mpmath numerics (scans, Gauss sums, embeddings).
PRECISION_BITS = _read_precision()

# Optional path to a TOML file carrying a [limits] table.
CONFIG_PATH = os.getenv("SKEIN_CONFIG", "").strip()


@dataclass(frozen=True)
class Limits:
    """Caps and thresholds; every field can be overridden from [limits]."""
    oracle_cap: int = 8
    theta_cap: int = 12
    tet_cap: int = 8
    unit_search_max: int | None = None
    max_label: int = 40
    scan_zero_threshold: float = 1e-10


def load_limits(path: str | Path | None = None) -> Limits:
    """
    Read the [limits] table of a TOML file.

    - Missing path (and no SKEIN_CONFIG) gives the defaults.
    - Unknown keys are ignored with a warning.
    - Wrong value types raise ConfigError.
    """
    source = path if path is not None else CONFIG_PATH
    if not source:
        return Limits()

    config_file = Path(source)
    try:
        with config_file.open("rb") as fh:
            data = tomllib.load(fh)
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {config_file}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config file {config_file} is not valid TOML: {exc}") from exc

    table = data.get("limits", {})
    if not isinstance(table, dict):
        raise ConfigError("[limits] must be a table")

    known = {f.name: f for f in fields(Limits)}
    overrides = {}
    for key, value in table.items():
        if key not in known:
            logger.warning("ignoring unknown [limits] key %r in %s", key, config_file)
            continue
        if key == "scan_zero_threshold":
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"[limits] {key} must be a number, got {value!r}")
            overrides[key] = float(value)
        else:
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"[limits] {key} must be a positive integer, got {value!r}")
            overrides[key] = value

    limits = replace(Limits(), **overrides)
    logger.info("limits loaded from %s: %s", config_file, overrides or "defaults")
    return limits
