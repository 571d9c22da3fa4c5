"""Training configuration for menu mechanisms."""
from __future__ import annotations

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from gcfkit.optim.models import AdamConfig
from gcfkit.optim.services.schedule import geometric_schedule, validate_schedule
from gcfkit.exceptions import InputError

# Menu sizes per item count; other counts fall back to 32 entries per item
DEFAULT_MENU_SIZES = {1: 8, 2: 32, 5: 128, 10: 256, 20: 512}
DEFAULT_SCHEDULE = geometric_schedule(10.0, 1000.0, 5)


def default_menu_size(items: int) -> int:
    return DEFAULT_MENU_SIZES.get(items, 32 * items)


class TrainConfig(BaseModel):
    """Everything that determines a training run.

    Randomness comes from ``seed`` alone: separate child streams draw the initial
    menu, the training pool and the evaluation sample.
    """

    model_config = ConfigDict(extra='forbid', frozen=True)

    items: int = Field(ge=1)
    kernel: str = 'bilinear'
    menu_size: Optional[int] = Field(default=None, ge=2)
    samples: int = Field(default=100_000, ge=1)
    batch_size: int = Field(default=10_000, ge=1)
    epochs: int = Field(default=40, ge=1)
    tau_schedule: Tuple[float, ...] = DEFAULT_SCHEDULE
    adam: AdamConfig = Field(default_factory=AdamConfig)
    seed: int = 0
    eval_samples: int = Field(default=200_000, ge=1)
    production_cost: Optional[Tuple[float, ...]] = None
    init_price_scale: Optional[float] = Field(default=None, gt=0)

    @field_validator('tau_schedule')
    @classmethod
    def _increasing(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        try:
            return validate_schedule(value)
        except InputError as exc:
            raise ValueError(str(exc)) from exc

    @model_validator(mode='after')
    def _cost_matches_items(self) -> 'TrainConfig':
        if self.production_cost is not None and len(self.production_cost) != self.items:
            raise ValueError(f'production_cost has {len(self.production_cost)} entries for {self.items} items')
        return self

    @property
    def resolved_menu_size(self) -> int:
        return self.menu_size or default_menu_size(self.items)

    @property
    def price_scale(self) -> float:
        """Initial prices are uniform on ``[0, price_scale]``; ``items / 2`` by default."""
        return self.init_price_scale or self.items / 2.0

    @property
    def stages(self) -> int:
        return len(self.tau_schedule)
