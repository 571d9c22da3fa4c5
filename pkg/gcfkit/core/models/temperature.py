"""Temperature of the log-sum-exp smoothing."""
from __future__ import annotations

import math
from dataclasses import dataclass

from gcfkit.exceptions import InputError


@dataclass(frozen=True)
class Temperature:
    """Inverse smoothing scale; larger ``tau`` is closer to the hard maximum."""

    tau: float

    def __post_init__(self) -> None:
        tau = float(self.tau)
        if not math.isfinite(tau) or tau <= 0:
            raise InputError(f"temperature must be a positive finite real, got {self.tau!r}")
        object.__setattr__(self, 'tau', tau)

    def smoothing_bound(self, support_size: int) -> float:
        """Upper bound ``ln(m)/tau`` on smoothed minus hard evaluation."""
        return math.log(support_size) / self.tau

    def __float__(self) -> float:
        return self.tau
