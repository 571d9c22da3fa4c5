"""Kernel resolution with registration of user-supplied kernels."""
from __future__ import annotations

import logging
from typing import Dict, Optional

from gcfkit import project_logging
from gcfkit.config import settings
from gcfkit.core.models.box import Box
from gcfkit.exceptions import InputError

from .base import BaseKernel
from .bilinear import BilinearKernel
from .custom import CallableKernel, KernelFn, validate_kernel_gradients
from .squared_distance import NegativeSquaredDistanceKernel

logger = logging.getLogger(__name__)

BUILTIN_KINDS = {
    BilinearKernel.kind: BilinearKernel,
    NegativeSquaredDistanceKernel.kind: NegativeSquaredDistanceKernel,
}


class KernelService:
    """Builds built-in kernels for a pair of boxes and stores validated custom ones."""

    _registered: Dict[str, CallableKernel] = {}

    @classmethod
    def get_kernel(cls, kind: str, x_box: Box, y_box: Optional[Box] = None) -> BaseKernel:
        """Resolve ``kind`` (a built-in kind or a registered custom name)."""
        y_box = y_box or x_box
        builder = BUILTIN_KINDS.get(kind)
        if builder is not None:
            return builder.for_boxes(x_box, y_box)
        if kind in cls._registered:
            return cls._registered[kind]
        logger.error(
            'Unknown kernel requested',
            extra={'event': 'kernels.unknown', 'extra': {'kind': kind, 'registered': sorted(cls._registered)}},
        )
        raise InputError(f"unknown kernel kind: {kind}")

    @classmethod
    def register(
        cls,
        name: str,
        evaluate: KernelFn,
        grad_x: KernelFn,
        grad_y: KernelFn,
        *,
        x_box: Box,
        y_box: Box,
        lipschitz: float,
        semiconvexity: float = 0.0,
        seed: int = 0,
    ) -> CallableKernel:
        """Validate gradients by central differences, then store the kernel under ``name``."""
        if name in BUILTIN_KINDS:
            raise InputError(f"'{name}' is a built-in kernel kind")
        kernel = CallableKernel(
            name,
            evaluate,
            grad_x,
            grad_y,
            lipschitz=lipschitz,
            semiconvexity=semiconvexity,
            dim_x=x_box.dim,
            dim_y=y_box.dim,
        )
        with project_logging.log_context(kernel=name):
            error = validate_kernel_gradients(
                kernel,
                x_box,
                y_box,
                seed=seed,
                samples=settings.KERNEL_FD_SAMPLES,
                step=settings.KERNEL_FD_STEP,
                tolerance=settings.KERNEL_FD_TOLERANCE,
            )
            cls._registered[name] = kernel
            logger.info(
                'Kernel registered',
                extra={'event': 'kernels.registered', 'extra': {'kernel': name, 'gradient_error': error}},
            )
        return kernel

    @classmethod
    def unregister(cls, name: str) -> None:
        cls._registered.pop(name, None)

    @classmethod
    def registered_names(cls) -> list[str]:
        return sorted(cls._registered)


def get_kernel(kind: str, x_box: Box, y_box: Optional[Box] = None) -> BaseKernel:
    return KernelService.get_kernel(kind, x_box, y_box)


def register_kernel(name: str, evaluate: KernelFn, grad_x: KernelFn, grad_y: KernelFn, **kwargs) -> CallableKernel:
    return KernelService.register(name, evaluate, grad_x, grad_y, **kwargs)
