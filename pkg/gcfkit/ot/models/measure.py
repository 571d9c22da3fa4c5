"""Finitely supported probability measures."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gcfkit.core.models import Box
from gcfkit.exceptions import InvalidMeasureError

WEIGHT_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class SampleMeasure:
    """Points with nonnegative weights summing to one."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        points = np.array(self.points, dtype=float)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        weights = np.array(self.weights, dtype=float).reshape(-1)
        if points.shape[0] == 0:
            raise InvalidMeasureError('a measure needs at least one point')
        if weights.size != points.shape[0]:
            raise InvalidMeasureError(f'{weights.size} weights for {points.shape[0]} points')
        if not np.all(np.isfinite(points)) or not np.all(np.isfinite(weights)):
            raise InvalidMeasureError('points and weights must be finite')
        if np.any(weights < 0):
            raise InvalidMeasureError('weights must be nonnegative')
        if abs(float(np.sum(weights)) - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise InvalidMeasureError(f'weights sum to {float(np.sum(weights))!r}, expected 1')
        points.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'weights', weights)

    @classmethod
    def uniform(cls, points) -> 'SampleMeasure':
        points = np.atleast_2d(np.asarray(points, dtype=float))
        count = points.shape[0]
        return cls(points, np.full(count, 1.0 / count))

    @property
    def size(self) -> int:
        return int(self.points.shape[0])

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    def bounding_box(self) -> Box:
        return Box(self.points.min(axis=0), self.points.max(axis=0))

    def is_uniform(self) -> bool:
        return bool(np.allclose(self.weights, 1.0 / self.size, rtol=0.0, atol=WEIGHT_SUM_TOLERANCE))
