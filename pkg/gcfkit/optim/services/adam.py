"""Adaptive per-coordinate moment rule with bias correction."""
from __future__ import annotations

from dataclasses import replace
from typing import Literal

import numpy as np

from gcfkit.exceptions import DimensionMismatchError, NonFiniteGradientError
from gcfkit.optim.models import OptState

Sense = Literal['maximize', 'minimize']


def _check_gradient(state: OptState, gradient: np.ndarray) -> np.ndarray:
    gradient = np.asarray(gradient, dtype=float).reshape(-1)
    if gradient.size != state.size:
        raise DimensionMismatchError(state.size, gradient.size, what='gradient')
    bad = np.flatnonzero(~np.isfinite(gradient))
    if bad.size:
        index = int(bad[0])
        raise NonFiniteGradientError(index, float(gradient[index]))
    return gradient


def step(state: OptState, gradient, sense: Sense = 'minimize') -> OptState:
    """One update; ascends when ``sense`` is ``'maximize'``."""
    gradient = _check_gradient(state, gradient)
    if sense not in ('maximize', 'minimize'):
        raise ValueError(f"sense must be 'maximize' or 'minimize', got {sense!r}")
    gradient = np.where(state.frozen, 0.0, gradient)

    cfg = state.config
    count = state.step_count + 1
    m = cfg.beta1 * state.m + (1.0 - cfg.beta1) * gradient
    v = cfg.beta2 * state.v + (1.0 - cfg.beta2) * gradient * gradient
    m_hat = m / (1.0 - cfg.beta1 ** count)
    v_hat = v / (1.0 - cfg.beta2 ** count)

    direction = 1.0 if sense == 'maximize' else -1.0
    update = direction * cfg.learning_rate * m_hat / (np.sqrt(v_hat) + cfg.eps)
    params = np.where(state.frozen, state.params, state.params + update)

    for array in (params, m, v):
        array.setflags(write=False)
    return replace(state, params=params, m=m, v=v, step_count=count)
