"""Axis-aligned covering lattices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gcfkit.core.models import Box


@dataclass(frozen=True, eq=False)
class EpsilonNet:
    """Lattice ``centers`` covering ``box`` with balls of ``radius``.

    ``counts`` is the number of centers per axis; ``covering_radius`` is the
    half-diagonal of one lattice cell and never exceeds ``radius``.
    """

    centers: np.ndarray
    radius: float
    box: Box
    counts: tuple[int, ...]

    @property
    def size(self) -> int:
        return int(self.centers.shape[0])

    @property
    def spacing(self) -> np.ndarray:
        return self.box.widths / np.asarray(self.counts, dtype=float)

    @property
    def covering_radius(self) -> float:
        return float(0.5 * np.linalg.norm(self.spacing))

    def __repr__(self) -> str:
        return f"EpsilonNet(size={self.size}, radius={self.radius:g}, counts={self.counts})"
