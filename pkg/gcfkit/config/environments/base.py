"""
Base settings for gcfkit.

Values are read from the environment (optionally populated from a ``.env`` file).
Environment-specific modules import everything from here and override.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

from gcfkit.project_logging import get_logging_config

BASE_DIR = Path(__file__).resolve().parent.parent.parent.parent

load_dotenv(BASE_DIR / '.env', override=False)


def _env_flag(name: str, default: bool = False) -> bool:
    value = os.environ.get(name)
    if value is None:
        return default
    return value.lower() in {'1', 'true', 'yes', 'on'}


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None or value == '':
        return default
    return int(value)


def _env_float(name: str, default: float) -> float:
    value = os.environ.get(name)
    if value is None or value == '':
        return default
    return float(value)


ENVIRONMENT = os.environ.get('GCFKIT_ENVIRONMENT', 'local')
SERVICE_NAME = os.environ.get('SERVICE_NAME', 'gcfkit')
LOG_LEVEL = os.environ.get('GCFKIT_LOG_LEVEL', 'INFO')
LOG_TO_CONSOLE = _env_flag('GCFKIT_LOG_TO_CONSOLE', default=True)

# Approximation
NET_MAX_CENTERS = _env_int('GCFKIT_NET_MAX_CENTERS', 2_000_000)

# Relative band within which transport argmax candidates count as tied
TIE_TOL = _env_float('GCFKIT_TIE_TOL', 1e-12)

# Kernel registration checks
KERNEL_FD_STEP = _env_float('GCFKIT_KERNEL_FD_STEP', 1e-6)
KERNEL_FD_TOLERANCE = _env_float('GCFKIT_KERNEL_FD_TOLERANCE', 1e-5)
KERNEL_FD_SAMPLES = _env_int('GCFKIT_KERNEL_FD_SAMPLES', 16)

# Monte Carlo reductions; chunk size is fixed so sums do not depend on thread count
MC_CHUNK_SIZE = _env_int('GCFKIT_MC_CHUNK_SIZE', 16384)
DEFAULT_THREADS = _env_int('GCFKIT_THREADS', 1)

DEFAULT_OUT_DIR = Path(os.environ.get('GCFKIT_OUT_DIR', 'runs'))

LOGGING = get_logging_config(
    environment=ENVIRONMENT,
    log_level=LOG_LEVEL,
    service_name=SERVICE_NAME,
    enable_console=LOG_TO_CONSOLE,
)
