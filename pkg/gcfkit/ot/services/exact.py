"""Exact optima of fully discrete transport problems."""
from __future__ import annotations

import itertools
import logging
import math

import numpy as np
from scipy.optimize import linprog

from gcfkit.core.kernels import BaseKernel
from gcfkit.exceptions import InputError, NumericalError, ResourceLimitError
from gcfkit.ot.models import SampleMeasure

logger = logging.getLogger(__name__)

MAX_ENUMERATION = 8


def solve_transport_lp(mu: SampleMeasure, eta: SampleMeasure, kernel: BaseKernel) -> tuple[float, np.ndarray]:
    """Maximize ``sum pi_ki Phi(x_k, y_i)`` over couplings of ``mu`` and ``eta``.

    Returns the optimal value and the coupling matrix.
    """
    surplus = kernel.pairwise(mu.points, eta.points)
    sources, targets = surplus.shape
    rows = np.zeros((sources, sources * targets))
    for k in range(sources):
        rows[k, k * targets:(k + 1) * targets] = 1.0
    columns = np.zeros((targets, sources * targets))
    for i in range(targets):
        columns[i, i::targets] = 1.0
    result = linprog(
        -surplus.reshape(-1),
        A_eq=np.vstack([rows, columns]),
        b_eq=np.concatenate([mu.weights, eta.weights]),
        bounds=(0, None),
        method='highs',
    )
    if result.status != 0:
        logger.error('Transport LP failed', extra={'event': 'ot.lp_failed', 'extra': {'message': result.message}})
        raise NumericalError(f'transport LP failed: {result.message}')
    return float(-result.fun), result.x.reshape(sources, targets)


def enumerate_assignments(mu: SampleMeasure, eta: SampleMeasure, kernel: BaseKernel) -> tuple[float, tuple[int, ...]]:
    """Best permutation for uniform square instances.

    Uniform couplings of equal size have permutation matrices as extreme
    points, so the best permutation is the transport optimum.
    """
    if mu.size != eta.size or not (mu.is_uniform() and eta.is_uniform()):
        raise InputError('enumeration needs two uniform measures of equal size')
    if mu.size > MAX_ENUMERATION:
        raise ResourceLimitError(math.factorial(mu.size), math.factorial(MAX_ENUMERATION), what='permutations')
    surplus = kernel.pairwise(mu.points, eta.points)
    rows = np.arange(mu.size)
    best_value, best_perm = -np.inf, None
    for perm in itertools.permutations(range(mu.size)):
        value = float(np.sum(surplus[rows, perm])) / mu.size
        if value > best_value:
            best_value, best_perm = value, perm
    return best_value, best_perm


def random_discrete_instance(rng: np.random.Generator, sources: int, targets: int, dim: int = 1):
    """Random weighted instance on the unit cube; weights are Dirichlet draws."""
    mu = SampleMeasure(rng.uniform(size=(sources, dim)), _simplex(rng, sources))
    eta = SampleMeasure(rng.uniform(size=(targets, dim)), _simplex(rng, targets))
    return mu, eta


def _simplex(rng: np.random.Generator, size: int) -> np.ndarray:
    weights = rng.dirichlet(np.ones(size))
    # push the rounding residue onto the largest weight so the sum is 1 to within 1e-12
    weights[np.argmax(weights)] += 1.0 - float(np.sum(weights))
    return weights
