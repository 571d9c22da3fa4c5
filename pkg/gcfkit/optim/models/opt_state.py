"""State of the adaptive moment rule."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from gcfkit.exceptions import DimensionMismatchError


class AdamConfig(BaseModel):
    """Step-size hyperparameters, read from the run config file."""

    model_config = ConfigDict(extra='forbid', frozen=True)

    learning_rate: float = Field(default=1e-2, gt=0)
    beta1: float = Field(default=0.9, ge=0, lt=1)
    beta2: float = Field(default=0.999, ge=0, lt=1)
    eps: float = Field(default=1e-8, gt=0)


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class OptState:
    """Flat parameter vector with first and second moment estimates.

    ``frozen`` marks coordinates the rule never moves. Steps return a new state.
    """

    params: np.ndarray
    m: np.ndarray
    v: np.ndarray
    frozen: np.ndarray
    step_count: int = 0
    config: AdamConfig = field(default_factory=AdamConfig)

    @classmethod
    def create(
        cls,
        params,
        *,
        config: Optional[AdamConfig] = None,
        frozen: Optional[np.ndarray] = None,
    ) -> 'OptState':
        params = np.array(params, dtype=float).reshape(-1)
        mask = np.zeros(params.size, dtype=bool) if frozen is None else np.array(frozen, dtype=bool).reshape(-1)
        if mask.size != params.size:
            raise DimensionMismatchError(params.size, mask.size, what='frozen mask')
        return cls(
            params=_readonly(params),
            m=_readonly(np.zeros_like(params)),
            v=_readonly(np.zeros_like(params)),
            frozen=_readonly(mask),
            config=config or AdamConfig(),
        )

    @property
    def size(self) -> int:
        return int(self.params.size)

    def with_params(self, params: np.ndarray) -> 'OptState':
        """Replace parameters (after a projection); frozen coordinates are kept."""
        params = np.where(self.frozen, self.params, np.asarray(params, dtype=float).reshape(-1))
        return replace(self, params=_readonly(params))
