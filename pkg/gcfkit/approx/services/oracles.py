"""Reference computations written independently of the transform services.

Nothing here calls into ``gcfkit.core.services``: the oracles only use the
kernel callables and ``scipy.optimize.linprog``.
"""
from __future__ import annotations

import logging
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import linprog

from gcfkit.core.kernels import BaseKernel
from gcfkit.core.models import FiniteGCF
from gcfkit.exceptions import NumericalError, UnsupportedKernelError

logger = logging.getLogger(__name__)


def oracle_transform(support: Sequence, potentials: Sequence[float], kernel: BaseKernel, x) -> float:
    """``max_i Phi(x, y_i) - r_i`` by a plain loop over the support."""
    x = np.asarray(x, dtype=float)
    best = -np.inf
    for y, r in zip(support, potentials):
        value = float(kernel.evaluate(x, np.asarray(y, dtype=float))) - float(r)
        if value > best:
            best = value
    return best


def oracle_gradient(fn: Callable[[np.ndarray], float], x, step: float = 1e-6) -> np.ndarray:
    """Central differences of a scalar function."""
    x = np.asarray(x, dtype=float)
    grad = np.empty(x.size)
    for axis in range(x.size):
        offset = np.zeros(x.size)
        offset[axis] = step
        grad[axis] = (fn(x + offset) - fn(x - offset)) / (2.0 * step)
    return grad


def _require_bilinear(f: FiniteGCF) -> None:
    if f.kernel.kind != 'bilinear' or f.kernel.transposed_kind:
        raise UnsupportedKernelError(f.kernel.kind, 'bilinear')


def _solve_max_min(directions: np.ndarray, offsets: np.ndarray, f: FiniteGCF) -> tuple[float, np.ndarray]:
    """``max_{x in domain} min_k <x, directions[k]> + offsets[k]`` as an LP in ``(x, s)``."""
    dim = f.dim
    cost = np.zeros(dim + 1)
    cost[-1] = -1.0
    a_ub = np.hstack([-directions, np.ones((directions.shape[0], 1))])
    bounds = [(float(lo), float(hi)) for lo, hi in zip(f.domain.lower, f.domain.upper)] + [(None, None)]
    result = linprog(cost, A_ub=a_ub, b_ub=offsets, bounds=bounds, method='highs')
    if result.status != 0:
        logger.error(
            'Conjugate LP failed',
            extra={'event': 'approx.lp_failed', 'extra': {'status': int(result.status), 'message': result.message}},
        )
        raise NumericalError(f'conjugate LP failed: {result.message}')
    return float(-result.fun), np.asarray(result.x[:dim])


def lp_conjugate_oracle(f: FiniteGCF, y) -> float:
    """Exact ``sup_x <x, y> - f(x)`` over the box for a bilinear finite transform."""
    _require_bilinear(f)
    y = np.asarray(y, dtype=float).reshape(-1)
    value, _ = _solve_max_min(y[None, :] - f.support, f.potentials.copy(), f)
    return value


def lp_lean_witnesses(f: FiniteGCF) -> tuple[np.ndarray, np.ndarray]:
    """Per support index, the box point maximizing ``Phi(x, y_i) - r_i - f(x)``.

    Returns ``(points, slack)``; index ``i`` attains somewhere in the box exactly
    when ``slack[i]`` is (numerically) zero.
    """
    _require_bilinear(f)
    points = np.empty((f.size, f.dim))
    slack = np.empty(f.size)
    for index in range(f.size):
        directions = f.support[index][None, :] - f.support
        offsets = f.potentials - f.potentials[index]
        slack[index], points[index] = _solve_max_min(directions, offsets, f)
    return f.domain.clip(points), slack
