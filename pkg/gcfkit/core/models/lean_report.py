"""Outcome of a grid-relative leanness check."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class LeanReport:
    """Per support index: the best witness point on the grid and its slack.

    ``slack[i]`` is ``max_x Phi(x, y_i) - r_i - f(x)`` over the grid (always <= 0);
    index ``i`` attains when the slack is at least ``-tol``.
    """

    lean: bool
    witnesses: Tuple[Optional[np.ndarray], ...]
    slack: np.ndarray
    tol: float

    def __bool__(self) -> bool:
        return self.lean

    @property
    def non_attaining(self) -> list[int]:
        return [index for index, witness in enumerate(self.witnesses) if witness is None]
