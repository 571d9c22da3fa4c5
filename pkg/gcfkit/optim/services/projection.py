"""Box projection of parameter vectors."""
from __future__ import annotations

from typing import Optional

import numpy as np

from gcfkit.exceptions import InputError


def project_box(params, lower, upper, mask: Optional[np.ndarray] = None) -> np.ndarray:
    """Clamp the masked coordinates into ``[lower, upper]``; others pass through."""
    params = np.asarray(params, dtype=float)
    lower = np.broadcast_to(np.asarray(lower, dtype=float), params.shape)
    upper = np.broadcast_to(np.asarray(upper, dtype=float), params.shape)
    if np.any(lower > upper):
        raise InputError('projection lower bound exceeds upper bound')
    clamped = np.clip(params, lower, upper)
    if mask is None:
        return clamped
    return np.where(np.asarray(mask, dtype=bool), clamped, params)
