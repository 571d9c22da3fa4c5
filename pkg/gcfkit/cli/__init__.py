"""Command-line entry point: ``gcfkit auction|ot|validate|export-grid``."""
from .main import main

__all__ = ['main']
