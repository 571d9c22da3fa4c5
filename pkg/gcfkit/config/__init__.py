"""Lazy access to the active settings module.

``GCFKIT_SETTINGS_MODULE`` wins; otherwise ``GCFKIT_ENVIRONMENT`` selects one of the
modules under ``gcfkit.config.environments``.
"""
from __future__ import annotations

import importlib
import os
from types import ModuleType
from typing import Any, Optional

SETTINGS_MAP = {
    'local': 'gcfkit.config.environments.local',
    'test': 'gcfkit.config.environments.test',
}


class LazySettings:
    """Resolve the settings module on first attribute access."""

    def __init__(self) -> None:
        self._wrapped: Optional[ModuleType] = None

    def _setup(self) -> ModuleType:
        module_name = os.environ.get('GCFKIT_SETTINGS_MODULE')
        if not module_name:
            env = os.environ.get('GCFKIT_ENVIRONMENT', 'local').lower()
            module_name = SETTINGS_MAP.get(env, SETTINGS_MAP['local'])
        self._wrapped = importlib.import_module(module_name)
        return self._wrapped

    def __getattr__(self, name: str) -> Any:
        wrapped = self._wrapped or self._setup()
        return getattr(wrapped, name)

    def reset(self) -> None:
        self._wrapped = None


settings = LazySettings()

__all__ = ['settings', 'SETTINGS_MAP']
