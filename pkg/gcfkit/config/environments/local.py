"""Settings for interactive local runs."""
from .base import *  # noqa: F401,F403
