"""Axis-aligned compact boxes housing the type and outcome spaces."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from gcfkit.exceptions import DimensionMismatchError, InputError


def _frozen(values: Sequence[float] | np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=float).reshape(-1)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Box:
    """Product of closed intervals ``[lower[i], upper[i]]``."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self) -> None:
        lower = _frozen(self.lower)
        upper = _frozen(self.upper)
        if lower.shape != upper.shape:
            raise DimensionMismatchError(lower.size, upper.size, what='upper bound')
        if lower.size == 0:
            raise InputError('box dimension must be positive')
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise InputError('box bounds must be finite')
        if np.any(lower > upper):
            raise InputError('box lower bound exceeds upper bound')
        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)

    @classmethod
    def unit(cls, dim: int) -> 'Box':
        return cls(np.zeros(dim), np.ones(dim))

    @property
    def dim(self) -> int:
        return int(self.lower.size)

    @property
    def widths(self) -> np.ndarray:
        return self.upper - self.lower

    @property
    def diameter(self) -> float:
        return float(np.linalg.norm(self.widths))

    @property
    def midpoint(self) -> np.ndarray:
        return 0.5 * (self.lower + self.upper)

    def max_norm(self) -> float:
        """Largest Euclidean norm of any point in the box."""
        corner = np.maximum(np.abs(self.lower), np.abs(self.upper))
        return float(np.linalg.norm(corner))

    def contains(self, point: np.ndarray, tol: float = 1e-12) -> bool:
        point = np.asarray(point, dtype=float)
        return bool(np.all(point >= self.lower - tol) and np.all(point <= self.upper + tol))

    def contains_all(self, points: np.ndarray, tol: float = 1e-12) -> bool:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return bool(np.all(points >= self.lower - tol) and np.all(points <= self.upper + tol))

    def clip(self, points: np.ndarray) -> np.ndarray:
        return np.clip(points, self.lower, self.upper)

    def vertices(self) -> np.ndarray:
        """All ``2**dim`` corners, lexicographic in (lower, upper) per axis."""
        corners = itertools.product(*zip(self.lower, self.upper))
        return np.array(list(corners), dtype=float)

    def grid(self, resolution: int | Sequence[int]) -> np.ndarray:
        """Regular lattice including the faces, ``resolution`` points per axis."""
        if np.isscalar(resolution):
            counts = [int(resolution)] * self.dim
        else:
            counts = [int(value) for value in resolution]
        if len(counts) != self.dim:
            raise DimensionMismatchError(self.dim, len(counts), what='resolution')
        if min(counts) < 1:
            raise InputError('grid resolution must be at least 1 per axis')
        axes = [
            np.linspace(lo, hi, count) if count > 1 else np.array([0.5 * (lo + hi)])
            for lo, hi, count in zip(self.lower, self.upper, counts)
        ]
        mesh = np.meshgrid(*axes, indexing='ij')
        return np.stack([axis.reshape(-1) for axis in mesh], axis=1)

    def grid_spacing(self, resolution: int) -> float:
        """Largest per-axis spacing of :meth:`grid` at ``resolution``."""
        if resolution <= 1:
            return float(np.max(self.widths))
        return float(np.max(self.widths) / (resolution - 1))

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.uniform(self.lower, self.upper, size=(size, self.dim))

    def to_dict(self) -> dict:
        return {'lower': [float(v) for v in self.lower], 'upper': [float(v) for v in self.upper]}

    @classmethod
    def from_dict(cls, payload: dict) -> 'Box':
        return cls(np.asarray(payload['lower'], dtype=float), np.asarray(payload['upper'], dtype=float))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Box):
            return NotImplemented
        return bool(np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper))

    def __hash__(self) -> int:
        return hash((self.lower.tobytes(), self.upper.tobytes()))

    def __repr__(self) -> str:
        return f"Box(lower={self.lower.tolist()}, upper={self.upper.tolist()})"
