"""Measured approximation error of nets and gradient convergence."""
from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np

from gcfkit.approx.models import EpsilonNet, GradCheckReport
from gcfkit.core.models import FiniteGCF, Temperature
from gcfkit.core.services import (
    conjugate_on_grid,
    gcf_eval,
    gcf_eval_many,
    gcf_eval_smooth,
    gcf_grad,
    gcf_grad_many,
    gcf_grad_smooth,
    margins,
)
from gcfkit.exceptions import DimensionMismatchError, InputError

from .oracles import oracle_gradient

logger = logging.getLogger(__name__)

DEFAULT_MARGIN = 0.05


def relative_error(value: np.ndarray, reference: np.ndarray) -> float:
    return float(np.linalg.norm(value - reference) / max(1.0, float(np.linalg.norm(reference))))


def restrict_to_net(f_dense: FiniteGCF, net: EpsilonNet, sample_points) -> FiniteGCF:
    """Finite transform supported on the net centers.

    Potentials are the conjugate of ``f_dense`` over the sample points, taken at
    the centers; the result never exceeds ``f_dense`` on the sample points.
    """
    if net.box.dim != f_dense.support_box.dim:
        raise DimensionMismatchError(f_dense.support_box.dim, net.box.dim, what='net box')
    conjugate = conjugate_on_grid(f_dense, sample_points)
    potentials = gcf_eval_many(conjugate, net.centers)
    return FiniteGCF(net.centers, potentials, f_dense.kernel, f_dense.domain, net.box)


def uap_error(f_dense: FiniteGCF, net: EpsilonNet, sample_points) -> float:
    """``max_p |f_dense(p) - g(p)|`` with ``g`` the net restriction of ``f_dense``."""
    sample_points = np.asarray(sample_points, dtype=float)
    g = restrict_to_net(f_dense, net, sample_points)
    error = float(np.max(np.abs(gcf_eval_many(f_dense, sample_points) - gcf_eval_many(g, sample_points))))
    logger.debug(
        'Measured net approximation error',
        extra={'event': 'approx.uap_error', 'extra': {'centers': net.size, 'radius': net.radius, 'error': error}},
    )
    return error


def grad_convergence_check(
    f_seq: Sequence[FiniteGCF],
    f_limit: FiniteGCF,
    sample_points,
    *,
    margin_threshold: float = DEFAULT_MARGIN,
) -> GradCheckReport:
    """Gradient error of each member against the limit at margin-separated sample points.

    Sample points closer than ``margin_threshold`` to an argmax tie of ``f_limit`` are
    skipped, since the limit has a kink there.
    """
    if not f_seq:
        raise InputError('gradient convergence needs at least one function')
    sample_points = np.atleast_2d(np.asarray(sample_points, dtype=float))
    keep = margins(f_limit, sample_points) >= margin_threshold
    points = sample_points[keep]
    if points.shape[0] == 0:
        raise InputError('no sample point clears the margin threshold')

    reference = gcf_grad_many(f_limit, points)
    scale = np.maximum(1.0, np.linalg.norm(reference, axis=1))
    errors = []
    worst_point = None
    for f in f_seq:
        per_point = np.linalg.norm(gcf_grad_many(f, points) - reference, axis=1) / scale
        errors.append(float(np.max(per_point)))
        worst_point = points[int(np.argmax(per_point))].copy()
    final_gap = float(np.max(np.abs(gcf_eval_many(f_seq[-1], points) - gcf_eval_many(f_limit, points))))
    return GradCheckReport(
        max_rel_error=errors[-1],
        worst_point=worst_point,
        step=final_gap,
        errors=tuple(errors),
        checked_points=int(points.shape[0]),
    )


def finite_difference_check(
    f: FiniteGCF,
    sample_points,
    *,
    temperature: Optional[Temperature] = None,
    step: float = 1e-6,
    margin_threshold: Optional[float] = None,
) -> GradCheckReport:
    """Analytic gradients against central differences of the evaluation.

    Hard gradients are only compared at sample points whose argmax margin is at least
    ``margin_threshold`` (default ``10 * step``).
    """
    sample_points = np.atleast_2d(np.asarray(sample_points, dtype=float))
    if temperature is None:
        threshold = 10 * step if margin_threshold is None else margin_threshold
        sample_points = sample_points[margins(f, sample_points) >= threshold]

        def value(x):
            return gcf_eval(f, x)

        def grad(x):
            return gcf_grad(f, x)
    else:
        def value(x):
            return gcf_eval_smooth(f, x, temperature)

        def grad(x):
            return gcf_grad_smooth(f, x, temperature)

    worst, worst_point = 0.0, None
    for x in sample_points:
        error = relative_error(grad(x), oracle_gradient(value, x, step))
        if error >= worst:
            worst, worst_point = error, x.copy()
    return GradCheckReport(max_rel_error=worst, worst_point=worst_point, step=step, checked_points=int(sample_points.shape[0]))
