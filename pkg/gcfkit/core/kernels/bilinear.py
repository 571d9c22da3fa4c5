"""Inner-product surplus ``Phi(x, y) = <x, y>``."""
from __future__ import annotations

from typing import Optional

import numpy as np

from gcfkit.core.models.box import Box
from gcfkit.exceptions import DimensionMismatchError

from .base import BaseKernel


class BilinearKernel(BaseKernel):
    """Classical convexity: transforms reduce to max-affine functions."""

    kind = 'bilinear'

    def __init__(self, *, lipschitz: float, dim: Optional[int] = None):
        super().__init__(lipschitz=lipschitz, semiconvexity=0.0, dim_x=dim, dim_y=dim)

    @classmethod
    def for_boxes(cls, x_box: Box, y_box: Box) -> 'BilinearKernel':
        """Kernel with ``lipschitz = max(|x|, |y|)`` over the two boxes."""
        if x_box.dim != y_box.dim:
            raise DimensionMismatchError(x_box.dim, y_box.dim, what='bilinear y box')
        return cls(lipschitz=max(x_box.max_norm(), y_box.max_norm()), dim=x_box.dim)

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.sum(np.multiply(x, y), axis=-1)

    def grad_x(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(x, y)
        return np.array(y, dtype=float, copy=True)

    def grad_y(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(x, y)
        return np.array(x, dtype=float, copy=True)

    def pairwise(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return np.atleast_2d(xs) @ np.atleast_2d(ys).T

    def weighted_grad_x(self, xs: np.ndarray, ys: np.ndarray, weights: np.ndarray) -> np.ndarray:
        return np.asarray(weights) @ np.atleast_2d(ys)

    def weighted_grad_y(self, xs: np.ndarray, ys: np.ndarray, weights: np.ndarray) -> np.ndarray:
        return np.asarray(weights).T @ np.atleast_2d(xs)
