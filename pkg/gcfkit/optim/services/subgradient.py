"""Diminishing-step subgradient descent with iterate averaging."""
from __future__ import annotations

import math

import numpy as np

from gcfkit.exceptions import DimensionMismatchError, NonFiniteGradientError


class AveragedSubgradient:
    """Minimize a convex nonsmooth objective with steps ``scale / sqrt(t)``.

    ``average`` is the uniform average of all iterates visited so far, which is
    the point with the ``O(1/sqrt(T))`` guarantee.
    """

    def __init__(self, params, scale: float):
        if scale <= 0:
            raise ValueError('step scale must be positive')
        self.params = np.array(params, dtype=float).reshape(-1)
        self.average = self.params.copy()
        self.scale = float(scale)
        self.count = 0

    def step_size(self) -> float:
        return self.scale / math.sqrt(self.count + 1)

    def step(self, subgradient) -> np.ndarray:
        subgradient = np.asarray(subgradient, dtype=float).reshape(-1)
        if subgradient.size != self.params.size:
            raise DimensionMismatchError(self.params.size, subgradient.size, what='subgradient')
        bad = np.flatnonzero(~np.isfinite(subgradient))
        if bad.size:
            raise NonFiniteGradientError(int(bad[0]), float(subgradient[bad[0]]))
        self.params = self.params - self.step_size() * subgradient
        self.count += 1
        self.average += (self.params - self.average) / (self.count + 1)
        return self.params
