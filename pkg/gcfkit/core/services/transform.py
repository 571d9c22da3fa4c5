"""Evaluation of finite transforms: hard maximum, log-sum-exp smoothing, gradients.

Argmax ties go to the lowest support index everywhere in the toolkit.
"""
from __future__ import annotations

import numpy as np
from scipy.special import logsumexp, softmax

from gcfkit.core.models import FiniteGCF, Temperature
from gcfkit.exceptions import DimensionMismatchError, InputError

DOMAIN_TOLERANCE = 1e-9


def as_point(f: FiniteGCF, x, *, check_domain: bool = True) -> np.ndarray:
    """Validate a single evaluation point against ``f.domain``."""
    point = np.asarray(x, dtype=float).reshape(-1)
    if point.size != f.dim:
        raise DimensionMismatchError(f.dim, point.size)
    if check_domain and not f.domain.contains(point, tol=DOMAIN_TOLERANCE):
        raise InputError(f"point {point.tolist()} lies outside the domain {f.domain!r}")
    return point


def as_points(f: FiniteGCF, xs, *, check_domain: bool = True) -> np.ndarray:
    points = np.asarray(xs, dtype=float)
    if points.ndim == 1:
        points = points.reshape(-1, f.dim) if f.dim > 1 else points.reshape(-1, 1)
    if points.ndim != 2 or points.shape[1] != f.dim:
        raise DimensionMismatchError(f.dim, points.shape[-1] if points.ndim else 0)
    if check_domain and not f.domain.contains_all(points, tol=DOMAIN_TOLERANCE):
        raise InputError('evaluation points lie outside the domain')
    return points


def inner_values(f: FiniteGCF, x) -> np.ndarray:
    """``Phi(x, y_i) - r_i`` for every support index."""
    point = as_point(f, x)
    return f.kernel.evaluate(point[None, :], f.support) - f.potentials


def inner_values_many(f: FiniteGCF, xs) -> np.ndarray:
    """Matrix of inner values, one row per evaluation point."""
    points = as_points(f, xs)
    return f.kernel.pairwise(points, f.support) - f.potentials[None, :]


def gcf_eval(f: FiniteGCF, x) -> float:
    return float(np.max(inner_values(f, x)))


def gcf_eval_many(f: FiniteGCF, xs) -> np.ndarray:
    return np.max(inner_values_many(f, xs), axis=1)


def _lowest_argmax(values: np.ndarray, tie_tol: float) -> np.ndarray:
    if tie_tol <= 0.0:
        return np.argmax(values, axis=-1)
    # spread is unchanged by a constant shift of the potentials
    top = np.max(values, axis=-1, keepdims=True)
    spread = top - np.min(values, axis=-1, keepdims=True)
    cutoff = top - tie_tol * np.maximum(1.0, spread)
    return np.argmax(values >= cutoff, axis=-1)


def argmax_index(f: FiniteGCF, x, *, tie_tol: float = 0.0) -> int:
    """Argmax support index at ``x``.

    With ``tie_tol > 0`` every index whose inner value is within
    ``tie_tol * max(1, max - min)`` of the maximum counts as tied.
    """
    return int(_lowest_argmax(inner_values(f, x), tie_tol))


def argmax_many(f: FiniteGCF, xs, *, tie_tol: float = 0.0) -> np.ndarray:
    return _lowest_argmax(inner_values_many(f, xs), tie_tol)


def margin(f: FiniteGCF, x) -> float:
    """Gap between the best and second-best inner value (``inf`` when m = 1)."""
    values = inner_values(f, x)
    if values.size == 1:
        return float('inf')
    top_two = np.partition(values, -2)[-2:]
    return float(top_two[1] - top_two[0])


def margins(f: FiniteGCF, xs) -> np.ndarray:
    values = inner_values_many(f, xs)
    if values.shape[1] == 1:
        return np.full(values.shape[0], np.inf)
    top_two = np.partition(values, -2, axis=1)[:, -2:]
    return top_two[:, 1] - top_two[:, 0]


def _smooth_from_values(values: np.ndarray, tau: float) -> np.ndarray:
    # shift by the hard max first so hard <= smooth <= hard + ln(m)/tau holds in floating point
    hard = np.max(values, axis=-1, keepdims=True)
    return (hard + logsumexp(tau * (values - hard), axis=-1, keepdims=True) / tau)[..., 0]


def gcf_eval_smooth(f: FiniteGCF, x, t: Temperature) -> float:
    """``(1/tau) ln sum_i exp(tau (Phi(x, y_i) - r_i))``, overflow-free."""
    return float(_smooth_from_values(inner_values(f, x), t.tau))


def gcf_eval_smooth_many(f: FiniteGCF, xs, t: Temperature) -> np.ndarray:
    return _smooth_from_values(inner_values_many(f, xs), t.tau)


def softmax_weights(f: FiniteGCF, xs, t: Temperature) -> np.ndarray:
    """Row-stochastic weights ``softmax(tau * inner values)`` per point."""
    return softmax(t.tau * inner_values_many(f, xs), axis=1)


def gcf_grad(f: FiniteGCF, x) -> np.ndarray:
    """``grad_x Phi(x, y_{i*})`` at the lowest-index argmax ``i*``."""
    point = as_point(f, x)
    index = int(np.argmax(f.kernel.evaluate(point[None, :], f.support) - f.potentials))
    return np.asarray(f.kernel.grad_x(point, f.support[index]), dtype=float)


def gcf_grad_many(f: FiniteGCF, xs) -> np.ndarray:
    points = as_points(f, xs)
    indices = np.argmax(f.kernel.pairwise(points, f.support) - f.potentials[None, :], axis=1)
    return np.asarray(f.kernel.grad_x(points, f.support[indices]), dtype=float)


def gcf_grad_smooth(f: FiniteGCF, x, t: Temperature) -> np.ndarray:
    """``sum_i w_i grad_x Phi(x, y_i)`` with ``w`` the max-shifted softmax."""
    point = as_point(f, x)
    weights = softmax(t.tau * (f.kernel.evaluate(point[None, :], f.support) - f.potentials))
    return f.kernel.weighted_grad_x(point[None, :], f.support, weights[None, :])[0]


def gcf_grad_smooth_many(f: FiniteGCF, xs, t: Temperature) -> np.ndarray:
    points = as_points(f, xs)
    weights = softmax_weights(f, points, t)
    return f.kernel.weighted_grad_x(points, f.support, weights)
