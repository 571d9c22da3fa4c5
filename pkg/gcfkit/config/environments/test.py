"""Test settings for running unit tests."""
import os

os.environ.setdefault('GCFKIT_ENVIRONMENT', 'test')

from .base import *  # noqa: F401,F403,E402

from gcfkit.project_logging import get_logging_config  # noqa: E402

# Small caps keep resource-limit tests fast
NET_MAX_CENTERS = 200_000
MC_CHUNK_SIZE = 4096
DEFAULT_THREADS = 1

# Disable logging during tests to reduce noise
LOGGING = get_logging_config(
    environment='test',
    log_level='WARNING',
    enable_console=False,
    enable_runs_console=False,
)
