"""Finitely generalized-convex function ``f = r^Y~``."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from gcfkit.core.kernels.base import BaseKernel
from gcfkit.exceptions import DimensionMismatchError, InputError

from .box import Box

SUPPORT_TOLERANCE = 1e-12


def _frozen_matrix(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    if array.ndim == 1:
        array = array.reshape(-1, 1)
    array.setflags(write=False)
    return array


def _frozen_vector(values) -> np.ndarray:
    array = np.array(values, dtype=float).reshape(-1)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FiniteGCF:
    """``x -> max_i Phi(x, support[i]) - potentials[i]`` on ``domain``.

    ``support_box`` is the box the support points live in; it defaults to the
    domain when both spaces share a dimension, else to the support's bounding box.
    Instances never change; use :meth:`with_potentials` to derive new ones.
    """

    support: np.ndarray
    potentials: np.ndarray
    kernel: BaseKernel
    domain: Box
    support_box: Optional[Box] = field(default=None)

    def __post_init__(self) -> None:
        support = _frozen_matrix(self.support)
        potentials = _frozen_vector(self.potentials)
        if support.shape[0] < 1:
            raise InputError('a finite GCF needs at least one support point')
        if potentials.size != support.shape[0]:
            raise InputError(
                f"{potentials.size} potentials for {support.shape[0]} support points"
            )
        if not np.all(np.isfinite(potentials)) or not np.all(np.isfinite(support)):
            raise InputError('support and potentials must be finite')

        support_box = self.support_box
        if support_box is None:
            if support.shape[1] == self.domain.dim:
                support_box = self.domain
            else:
                support_box = Box(support.min(axis=0), support.max(axis=0))
        if support.shape[1] != support_box.dim:
            raise DimensionMismatchError(support_box.dim, support.shape[1], what='support point')
        if not support_box.contains_all(support, tol=SUPPORT_TOLERANCE):
            raise InputError('every support point must lie inside the support box')
        self.kernel.check_dims(self.domain.dim, support_box.dim)

        object.__setattr__(self, 'support', support)
        object.__setattr__(self, 'potentials', potentials)
        object.__setattr__(self, 'support_box', support_box)

    @property
    def size(self) -> int:
        return int(self.support.shape[0])

    @property
    def dim(self) -> int:
        return self.domain.dim

    def with_potentials(self, potentials: Sequence[float] | np.ndarray) -> 'FiniteGCF':
        return FiniteGCF(self.support, potentials, self.kernel, self.domain, self.support_box)

    def shifted(self, constant: float) -> 'FiniteGCF':
        """Same support, every potential increased by ``constant``."""
        return self.with_potentials(self.potentials + constant)

    def __repr__(self) -> str:
        return f"FiniteGCF(m={self.size}, dim={self.dim}, kernel={self.kernel.name!r})"
