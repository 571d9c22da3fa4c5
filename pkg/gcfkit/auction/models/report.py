"""Monte Carlo summaries of a mechanism."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

import numpy as np


@dataclass(frozen=True)
class MechanismReport:
    """Per-item means of profit, surplus and utility with their standard errors.

    Surplus is ``Phi(a(y), y)`` minus production cost, so surplus equals profit
    plus utility sample by sample.
    """

    items: int
    samples: int
    mean_profit_per_item: float
    mean_surplus_per_item: float
    mean_utility_per_item: float
    stderr_profit_per_item: float
    stderr_surplus_per_item: float
    stderr_utility_per_item: float
    purchase_rate: float
    seed: Optional[int] = None
    soft_revenue: Optional[float] = None
    tau: Optional[float] = None

    @property
    def revenue(self) -> float:
        return self.mean_profit_per_item * self.items

    @property
    def hard_soft_gap(self) -> Optional[float]:
        if self.soft_revenue is None:
            return None
        return self.soft_revenue - self.revenue

    def table_row(self) -> str:
        return (
            f'n={self.items:<3d} profit/item={self.mean_profit_per_item:.3f} '
            f'surplus/item={self.mean_surplus_per_item:.3f} utility/item={self.mean_utility_per_item:.3f}'
        )

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        payload['revenue'] = self.revenue
        payload['hard_soft_gap'] = self.hard_soft_gap
        return payload


@dataclass(frozen=True, eq=False)
class MenuUsage:
    """Share of types choosing each entry and the revenue each entry collects."""

    shares: np.ndarray
    revenue: np.ndarray

    @property
    def active(self) -> np.ndarray:
        return np.flatnonzero(self.shares > 0)
