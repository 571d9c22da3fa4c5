"""Run configuration: a flat JSON file merged with command-line flags.

Flags that were given override file values; unknown keys in either are
rejected.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, ClassVar, Mapping, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field

from gcfkit.approx.services.suites import DEFAULT_SEED
from gcfkit.auction.models import TrainConfig
from gcfkit.config import settings
from gcfkit.exceptions import ConfigError, InstanceParseError
from gcfkit.optim.models import AdamConfig
from gcfkit.ot.models import DualSolveConfig

C = TypeVar('C', bound='RunConfig')


class RunConfig(BaseModel):
    """Settings every command shares."""

    model_config = ConfigDict(extra='forbid', frozen=True)

    seed: int = 0
    out: Optional[Path] = None
    threads: Optional[int] = Field(default=None, ge=1)

    # Keys consumed by the command itself rather than the solver config
    run_fields: ClassVar[frozenset] = frozenset({'seed', 'out', 'threads'})

    def output_dir(self, command: str) -> Path:
        return self.out if self.out is not None else Path(settings.DEFAULT_OUT_DIR) / command

    def worker_threads(self) -> int:
        return self.threads or settings.DEFAULT_THREADS

    def _solver_values(self, *extra_run_fields: str) -> dict:
        exclude = set(self.run_fields) | set(extra_run_fields)
        return self.model_dump(exclude=exclude, exclude_none=True)


class AuctionRunConfig(RunConfig):
    items: int = Field(ge=1)
    export_grid: Optional[int] = Field(default=None, ge=1)
    kernel: Optional[str] = None
    menu_size: Optional[int] = Field(default=None, ge=2)
    samples: Optional[int] = Field(default=None, ge=1)
    batch_size: Optional[int] = Field(default=None, ge=1)
    epochs: Optional[int] = Field(default=None, ge=1)
    tau_schedule: Optional[Tuple[float, ...]] = None
    adam: Optional[AdamConfig] = None
    eval_samples: Optional[int] = Field(default=None, ge=1)
    production_cost: Optional[Tuple[float, ...]] = None
    init_price_scale: Optional[float] = Field(default=None, gt=0)

    def train_config(self) -> TrainConfig:
        return TrainConfig(seed=self.seed, **self._solver_values('export_grid'))


class OtRunConfig(RunConfig):
    instance: Optional[Path] = None
    max_iterations: Optional[int] = Field(default=None, ge=1)
    step_scale: Optional[float] = Field(default=None, gt=0)
    tolerance: Optional[float] = Field(default=None, ge=0)
    window: Optional[int] = Field(default=None, ge=1)
    polish: Optional[bool] = None

    def solve_config(self) -> DualSolveConfig:
        return DualSolveConfig(**self._solver_values('instance'))


class ValidateRunConfig(RunConfig):
    seed: int = DEFAULT_SEED
    suite: str = 'all'


class ExportGridRunConfig(RunConfig):
    mechanism: Optional[Path] = None
    resolution: int = Field(default=64, ge=1)


def read_config_file(path: Optional[Path]) -> dict:
    """Top-level JSON object of ``path``; an empty mapping when no file was given."""
    if path is None:
        return {}
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f'config file not found: {path}')
    try:
        payload = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InstanceParseError(None, f'invalid JSON in {path}: {exc.msg} (line {exc.lineno})') from exc
    if not isinstance(payload, dict):
        raise InstanceParseError(None, f'{path} must hold a JSON object')
    return payload


def load_run_config(config_cls: Type[C], path: Optional[Path], flags: Mapping[str, Any]) -> C:
    values = read_config_file(path)
    values.update({key: value for key, value in flags.items() if value is not None})
    return config_cls.model_validate(values)


__all__ = [
    'RunConfig', 'AuctionRunConfig', 'OtRunConfig', 'ValidateRunConfig', 'ExportGridRunConfig',
    'read_config_file', 'load_run_config',
]
