"""Negative squared distance ``Phi(x, y) = -|x - y|^2`` (quadratic transport cost)."""
from __future__ import annotations

from typing import Optional

import numpy as np

from gcfkit.core.models.box import Box
from gcfkit.exceptions import DimensionMismatchError

from .base import BaseKernel

SEMICONVEXITY = 2.0


class NegativeSquaredDistanceKernel(BaseKernel):
    """Semiconvex with constant 2; transforms are power-diagram maxima."""

    kind = 'negative-squared-distance'

    def __init__(self, *, lipschitz: float, dim: Optional[int] = None):
        super().__init__(lipschitz=lipschitz, semiconvexity=SEMICONVEXITY, dim_x=dim, dim_y=dim)

    @classmethod
    def for_boxes(cls, x_box: Box, y_box: Box) -> 'NegativeSquaredDistanceKernel':
        """Kernel with ``lipschitz = 2 * max |x - y|`` over the two boxes."""
        if x_box.dim != y_box.dim:
            raise DimensionMismatchError(x_box.dim, y_box.dim, what='squared-distance y box')
        reach = np.maximum(np.abs(x_box.upper - y_box.lower), np.abs(y_box.upper - x_box.lower))
        return cls(lipschitz=2.0 * float(np.linalg.norm(reach)), dim=x_box.dim)

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        diff = np.subtract(x, y)
        return -np.sum(diff * diff, axis=-1)

    def grad_x(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return -2.0 * np.subtract(x, y)

    def grad_y(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return 2.0 * np.subtract(x, y)

    def weighted_grad_x(self, xs: np.ndarray, ys: np.ndarray, weights: np.ndarray) -> np.ndarray:
        weights = np.asarray(weights)
        xs = np.atleast_2d(xs)
        return -2.0 * (weights.sum(axis=1)[:, None] * xs - weights @ np.atleast_2d(ys))

    def weighted_grad_y(self, xs: np.ndarray, ys: np.ndarray, weights: np.ndarray) -> np.ndarray:
        weights = np.asarray(weights)
        ys = np.atleast_2d(ys)
        return 2.0 * (weights.T @ np.atleast_2d(xs) - weights.sum(axis=0)[:, None] * ys)
