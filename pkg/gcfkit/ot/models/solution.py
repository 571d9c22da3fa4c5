"""Dual solver configuration and results."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from gcfkit.core.models import FiniteGCF

from .measure import SampleMeasure


class DualSolveConfig(BaseModel):
    """Subgradient phase settings.

    ``step_scale`` defaults to the spread of the surplus values. The phase stops
    early once the best objective improves by less than ``tolerance`` over
    ``window`` iterations; ``polish`` then solves the finite dual exactly.
    """

    model_config = ConfigDict(extra='forbid', frozen=True)

    max_iterations: int = Field(default=2000, ge=1)
    step_scale: Optional[float] = Field(default=None, gt=0)
    tolerance: float = Field(default=1e-9, ge=0)
    window: int = Field(default=200, ge=1)
    polish: bool = True
    polish_max_constraints: int = Field(default=2_000_000, ge=1)


@dataclass(frozen=True, eq=False)
class DualSolution:
    """``potential`` is ``phi = r^Y`` with support on the target atoms."""

    potential: FiniteGCF
    value: float
    iterations: int
    trace: Tuple[float, ...]
    converged: bool
    mu: SampleMeasure
    eta: SampleMeasure
    polished: bool = False


@dataclass(frozen=True, eq=False)
class TransportAssignment:
    """Target index for every source point and the surplus it collects."""

    indices: np.ndarray
    objective: float

    def as_mapping(self) -> dict[int, int]:
        return {source: int(target) for source, target in enumerate(self.indices)}
