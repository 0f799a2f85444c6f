"""
Configuration file for the regrade toolkit
Contains environment variables and constants
"""

import os
import logging

logger = logging.getLogger(__name__)

# Default constants
DEFAULT_MAX_N = 6  # degree cap for codimension computations (720 rows)
DEFAULT_STATE_CAP = 4096  # BFS safety valve for condition (i)
BRUTE_FORCE_DEPTH = 6

# Logging configuration
LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name, '')
    if not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        logger.warning(f"Ignoring malformed {name}={raw!r}, using {default}")
        return default
    if value < 1:
        logger.warning(f"Ignoring non-positive {name}={value}, using {default}")
        return default
    return value


def get_max_n() -> int:
    """Get the codimension degree cap from environment"""
    return _int_from_env('REGRADE_MAX_N', DEFAULT_MAX_N)


def get_state_cap() -> int:
    """Get the condition (i) state cap from environment"""
    return _int_from_env('REGRADE_STATE_CAP', DEFAULT_STATE_CAP)


def get_log_level() -> str:
    """Get log level from environment"""
    return os.getenv('REGRADE_LOG_LEVEL', LOG_LEVEL).upper()


def get_log_file() -> str:
    """Get optional log file path from environment"""
    return os.getenv('REGRADE_LOG_FILE', '')


# Application settings
DEBUG = os.getenv('REGRADE_DEBUG', 'False').lower() == 'true'
