"""Pytest configuration for gcfkit tests."""
from __future__ import annotations

import os

os.environ.setdefault('GCFKIT_ENVIRONMENT', 'test')

import logging  # noqa: E402

import numpy as np  # noqa: E402
import pytest  # noqa: E402

from gcfkit.config import settings  # noqa: E402
from gcfkit.core.kernels import BilinearKernel, NegativeSquaredDistanceKernel  # noqa: E402
from gcfkit.core.models import Box, FiniteGCF  # noqa: E402

KERNELS = {
    'bilinear': BilinearKernel,
    'negative-squared-distance': NegativeSquaredDistanceKernel,
}


@pytest.fixture(autouse=True)
def _test_settings():
    settings.reset()
    yield
    settings.reset()


@pytest.fixture(autouse=True)
def _propagating_loggers():
    """Let caplog see package records even after a command applied dictConfig."""
    for name in ('gcfkit', 'gcfkit.runs'):
        logger = logging.getLogger(name)
        logger.propagate = True
        logger.setLevel(logging.NOTSET)
    yield


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def make_gcf():
    """Factory for random finite transforms on unit boxes."""

    def factory(
        rng: np.random.Generator,
        *,
        size: int = 7,
        dim: int = 2,
        kind: str = 'bilinear',
        scale: float = 1.0,
    ) -> FiniteGCF:
        box = Box.unit(dim)
        kernel = KERNELS[kind].for_boxes(box, box)
        support = rng.uniform(0.0, 1.0, size=(size, dim))
        potentials = rng.uniform(0.0, scale, size=size)
        return FiniteGCF(support, potentials, kernel, box)

    return factory
