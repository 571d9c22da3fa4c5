"""User-supplied kernels built from vectorised callables."""
from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np

from gcfkit.core.models.box import Box
from gcfkit.exceptions import KernelValidationError

from .base import BaseKernel

logger = logging.getLogger(__name__)

KernelFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


class CallableKernel(BaseKernel):
    """Kernel whose value and partial gradients come from user callables.

    The callables must broadcast over leading axes like the built-in kernels:
    ``evaluate(x, y)`` drops the trailing axis, the gradients keep it.
    """

    kind = 'user-supplied'

    def __init__(
        self,
        name: str,
        evaluate: KernelFn,
        grad_x: KernelFn,
        grad_y: KernelFn,
        *,
        lipschitz: float,
        semiconvexity: float = 0.0,
        dim_x: Optional[int] = None,
        dim_y: Optional[int] = None,
    ):
        super().__init__(lipschitz=lipschitz, semiconvexity=semiconvexity, dim_x=dim_x, dim_y=dim_y, name=name)
        self._evaluate = evaluate
        self._grad_x = grad_x
        self._grad_y = grad_y

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.asarray(self._evaluate(np.asarray(x, dtype=float), np.asarray(y, dtype=float)), dtype=float)

    def grad_x(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        return np.broadcast_to(self._grad_x(x, y), x.shape).astype(float)

    def grad_y(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        return np.broadcast_to(self._grad_y(x, y), y.shape).astype(float)


def _scaled_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    return float(np.linalg.norm(analytic - numeric) / max(1.0, float(np.linalg.norm(numeric))))


def finite_difference_error(
    kernel: BaseKernel,
    x_box: Box,
    y_box: Box,
    *,
    rng: np.random.Generator,
    samples: int,
    step: float,
) -> float:
    """Worst scaled error of both partial gradients against central differences.

    Sample points are drawn from the middle 80% of each box so the stencil stays inside.
    """
    worst = 0.0
    for _ in range(samples):
        x = x_box.lower + x_box.widths * rng.uniform(0.1, 0.9, size=x_box.dim)
        y = y_box.lower + y_box.widths * rng.uniform(0.1, 0.9, size=y_box.dim)
        numeric_x = np.empty(x_box.dim)
        for axis in range(x_box.dim):
            shift = np.zeros(x_box.dim)
            shift[axis] = step
            numeric_x[axis] = (kernel.evaluate(x + shift, y) - kernel.evaluate(x - shift, y)) / (2 * step)
        numeric_y = np.empty(y_box.dim)
        for axis in range(y_box.dim):
            shift = np.zeros(y_box.dim)
            shift[axis] = step
            numeric_y[axis] = (kernel.evaluate(x, y + shift) - kernel.evaluate(x, y - shift)) / (2 * step)
        worst = max(
            worst,
            _scaled_error(np.asarray(kernel.grad_x(x, y)), numeric_x),
            _scaled_error(np.asarray(kernel.grad_y(x, y)), numeric_y),
        )
    return worst


def validate_kernel_gradients(
    kernel: BaseKernel,
    x_box: Box,
    y_box: Box,
    *,
    seed: int = 0,
    samples: int = 16,
    step: float = 1e-6,
    tolerance: float = 1e-5,
) -> float:
    """Raise :class:`KernelValidationError` unless gradients match finite differences."""
    error = finite_difference_error(
        kernel, x_box, y_box, rng=np.random.default_rng(seed), samples=samples, step=step
    )
    if not np.isfinite(error) or error > tolerance:
        logger.warning(
            'Kernel gradient check failed',
            extra={
                'event': 'kernels.validation_failed',
                'extra': {'kernel': kernel.name, 'relative_error': error, 'tolerance': tolerance},
            },
        )
        raise KernelValidationError(kernel.name, error, tolerance)
    return error
