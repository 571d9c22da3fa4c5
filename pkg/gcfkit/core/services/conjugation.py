"""Grid conjugation and lean projection.

Suprema over the continuous domain are replaced by maxima over a user grid; for a
kernel with Lipschitz constant ``lambda`` the error is at most ``lambda * h * sqrt(n)``
with ``h`` the grid spacing.
"""
from __future__ import annotations

import logging

import numpy as np

from gcfkit.core.models import FiniteGCF, LeanReport
from gcfkit.exceptions import EmptyGridError, InputError

from .transform import as_points, gcf_eval_many, inner_values_many

logger = logging.getLogger(__name__)


def _grid_points(f: FiniteGCF, grid) -> np.ndarray:
    points = np.asarray(grid, dtype=float)
    if points.size == 0:
        raise EmptyGridError('conjugation grid is empty')
    return as_points(f, points)


def conjugate_on_grid(f: FiniteGCF, grid) -> FiniteGCF:
    """Transform of ``f`` taken over the grid: ``y -> max_j Phi(x_j, y) - f(x_j)``.

    The result lives on ``f.support_box`` with the grid as its support and the
    kernel transposed, so every evaluation routine applies to it unchanged.
    """
    points = _grid_points(f, grid)
    return FiniteGCF(
        support=points,
        potentials=gcf_eval_many(f, points),
        kernel=f.kernel.transposed(),
        domain=f.support_box,
        support_box=f.domain,
    )


def lean_project(f: FiniteGCF, grid) -> FiniteGCF:
    """Replace ``r`` by the double transform restricted to the support.

    The projected potentials never exceed the originals and the represented
    function is unchanged on the grid.
    """
    conjugate = conjugate_on_grid(f, grid)
    projected = gcf_eval_many(conjugate, f.support)
    return f.with_potentials(projected)


def is_lean(f: FiniteGCF, grid, tol: float = 0.0) -> LeanReport:
    """Check that every support index attains the maximum somewhere on the grid."""
    if tol < 0:
        raise InputError('tolerance must be nonnegative')
    points = _grid_points(f, grid)
    values = inner_values_many(f, points)
    slack = values - np.max(values, axis=1, keepdims=True)
    best = np.argmax(slack, axis=0)
    best_slack = slack[best, np.arange(f.size)]
    witnesses = tuple(
        points[row].copy() if value >= -tol else None
        for row, value in zip(best, best_slack)
    )
    lean = bool(np.all(best_slack >= -tol))
    if not lean:
        logger.debug(
            'Support points never attain on the grid',
            extra={
                'event': 'core.not_lean',
                'extra': {'indices': [i for i, w in enumerate(witnesses) if w is None], 'tol': tol},
            },
        )
    return LeanReport(lean=lean, witnesses=witnesses, slack=best_slack, tol=float(tol))
