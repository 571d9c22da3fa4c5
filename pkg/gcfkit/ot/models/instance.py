"""Transport instances as read from JSON files."""
from __future__ import annotations

from dataclasses import dataclass

from gcfkit.core.kernels import BaseKernel, get_kernel

from .measure import SampleMeasure


@dataclass(frozen=True)
class TransportInstance:
    mu: SampleMeasure
    eta: SampleMeasure
    kernel_kind: str = 'bilinear'

    def kernel(self) -> BaseKernel:
        return get_kernel(self.kernel_kind, self.mu.bounding_box(), self.eta.bounding_box())
