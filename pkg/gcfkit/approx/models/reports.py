"""Check outcomes shared by tests, suites and the ``validate`` command."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class GradCheckReport:
    """Worst gradient discrepancy over a sample set.

    ``step`` is the finite-difference step for oracle checks and the final
    sup-distance to the limit for convergence checks. ``errors`` holds one entry
    per sequence member when a sequence was checked.
    """

    max_rel_error: float
    worst_point: Optional[np.ndarray]
    step: float
    errors: Tuple[float, ...] = ()
    checked_points: int = 0


@dataclass
class ValidationReport:
    check_name: str
    instances: int
    max_error: float
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            'check_name': self.check_name,
            'instances': self.instances,
            'max_error': float(self.max_error),
            'pass': bool(self.passed),
        }
        if self.details:
            payload['details'] = self.details
        return payload
