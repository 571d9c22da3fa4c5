"""Run manifests: enough metadata to reproduce a CLI run exactly."""
from __future__ import annotations

import json
import logging as std_logging
import platform
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import scipy

from gcfkit import __version__, project_logging

RUNS_LOGGER_NAME = 'gcfkit.runs'


def library_versions() -> Dict[str, str]:
    return {
        'gcfkit': __version__,
        'numpy': np.__version__,
        'scipy': scipy.__version__,
        'python': platform.python_version(),
    }


@dataclass
class RunManifest:
    """Structured record of a single command invocation."""

    command: str
    seed: int
    config: Dict[str, Any]
    run_id: str = field(default_factory=project_logging.generate_run_id)
    status: str = 'success'
    exit_code: int = 0
    outputs: List[str] = field(default_factory=list)
    versions: Dict[str, str] = field(default_factory=library_versions)
    started_at: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    description: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            'command': self.command,
            'seed': self.seed,
            'config': self.config,
            'run_id': self.run_id,
            'status': self.status,
            'exit_code': self.exit_code,
            'outputs': list(self.outputs),
            'versions': self.versions,
            'started_at': self.started_at,
            'description': self.description,
        }
        return {key: value for key, value in payload.items() if value is not None}

    def write(self, out_dir: Path) -> Path:
        path = Path(out_dir) / 'manifest.json'
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True))
        return path


def log_run_event(manifest: RunManifest, *, level: Optional[int] = None) -> None:
    """Emit a manifest via the dedicated runs logger."""
    logger = std_logging.getLogger(RUNS_LOGGER_NAME)
    if level is None:
        level = std_logging.INFO if manifest.exit_code == 0 else std_logging.WARNING

    with project_logging.log_context(run_id=manifest.run_id, command=manifest.command, seed=manifest.seed):
        logger.log(
            level,
            manifest.description or f'{manifest.command} finished',
            extra={
                'event': f'runs.{manifest.command}.{manifest.status}',
                'extra': manifest.to_dict(),
            },
        )


__all__ = ['RunManifest', 'log_run_event', 'library_versions', 'RUNS_LOGGER_NAME']
