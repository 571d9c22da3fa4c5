"""Bundled transport instances."""
from pathlib import Path

FIXTURES_DIR = Path(__file__).resolve().parent


def fixture_path(name: str) -> Path:
    return FIXTURES_DIR / name
