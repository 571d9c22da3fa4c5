from .base import BaseKernel, TransposedKernel
from .bilinear import BilinearKernel
from .custom import CallableKernel, finite_difference_error, validate_kernel_gradients
from .registry import BUILTIN_KINDS, KernelService, get_kernel, register_kernel
from .squared_distance import NegativeSquaredDistanceKernel

__all__ = [
    'BaseKernel', 'TransposedKernel', 'BilinearKernel', 'NegativeSquaredDistanceKernel',
    'CallableKernel', 'finite_difference_error', 'validate_kernel_gradients',
    'BUILTIN_KINDS', 'KernelService', 'get_kernel', 'register_kernel',
]
