"""Temperature schedules for log-sum-exp annealing."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from gcfkit.core.models import Temperature
from gcfkit.exceptions import InputError


def geometric_schedule(start: float, stop: float, stages: int) -> tuple[float, ...]:
    """``stages`` temperatures from ``start`` to ``stop`` with a constant ratio."""
    if stages < 1:
        raise InputError('a schedule needs at least one stage')
    if start <= 0 or stop <= 0:
        raise InputError('temperatures must be positive')
    if stages == 1:
        return (float(stop),)
    return tuple(float(tau) for tau in np.geomspace(start, stop, stages))


def validate_schedule(schedule: Sequence[float]) -> tuple[float, ...]:
    values = tuple(float(tau) for tau in schedule)
    if not values:
        raise InputError('temperature schedule is empty')
    if any(tau <= 0 or not np.isfinite(tau) for tau in values):
        raise InputError('temperatures must be positive and finite')
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InputError('temperatures must be strictly increasing')
    return values


def anneal(schedule: Sequence[float], stage: int) -> Temperature:
    values = validate_schedule(schedule)
    if not 0 <= stage < len(values):
        raise InputError(f'stage {stage} outside a {len(values)}-stage schedule')
    return Temperature(values[stage])
