"""Covering nets for the approximation bounds."""
from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np

from gcfkit.approx.models import EpsilonNet
from gcfkit.config import settings
from gcfkit.core.models import Box
from gcfkit.exceptions import InputError, ResourceLimitError

logger = logging.getLogger(__name__)

# Guards ceil() against quotients like 1 / 0.2 landing a hair above an integer
_COUNT_SLACK = 1e-9


def build_epsilon_net(
    box: Box,
    epsilon: float,
    lipschitz: float,
    *,
    max_centers: Optional[int] = None,
) -> EpsilonNet:
    """Lattice whose balls of radius ``epsilon / (2 * lipschitz)`` cover ``box``.

    Cells have side at most ``2 * radius / sqrt(n)`` so their half-diagonal is
    at most ``radius``; centers sit at cell midpoints.
    """
    if not (epsilon > 0 and math.isfinite(epsilon)):
        raise InputError('epsilon must be a positive finite real')
    if not (lipschitz > 0 and math.isfinite(lipschitz)):
        raise InputError('lipschitz constant must be a positive finite real')

    radius = epsilon / (2.0 * lipschitz)
    if radius >= box.diameter / 2.0:
        counts = (1,) * box.dim
    else:
        side = 2.0 * radius / math.sqrt(box.dim)
        counts = tuple(
            max(1, math.ceil(width / side - _COUNT_SLACK)) for width in box.widths
        )

    cap = int(max_centers if max_centers is not None else settings.NET_MAX_CENTERS)
    total = math.prod(counts)
    if total > cap:
        logger.warning(
            'Epsilon net exceeds the center cap',
            extra={'event': 'approx.net_too_large', 'extra': {'requested': total, 'limit': cap, 'epsilon': epsilon}},
        )
        raise ResourceLimitError(total, cap, what='net centers')

    axes = [
        lo + (np.arange(count) + 0.5) * (hi - lo) / count
        for lo, hi, count in zip(box.lower, box.upper, counts)
    ]
    mesh = np.meshgrid(*axes, indexing='ij')
    centers = np.stack([axis.reshape(-1) for axis in mesh], axis=1)
    centers.setflags(write=False)
    return EpsilonNet(centers=centers, radius=radius, box=box, counts=counts)
