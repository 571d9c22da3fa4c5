"""Payments recovered from the indirect utility along a segment from an anchor type.

Along ``y(s) = y0 + s (y - y0)`` the utility changes by the integral of
``(y - y0) . grad v(y(s))``. Smoothed utilities are integrated by composite
Simpson quadrature; the hard utility of a bilinear menu is piecewise affine on the
segment and is integrated exactly piece by piece.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np
from scipy.integrate import simpson
from scipy.special import softmax

from gcfkit.auction.models import Anchor, Menu
from gcfkit.core.models import Temperature
from gcfkit.core.services import gcf_eval, gcf_eval_smooth, gcf_grad_smooth_many, inner_values
from gcfkit.core.services.transform import as_point
from gcfkit.exceptions import InputError, UnsupportedKernelError

from .mechanism import allocation, indirect_utility

DEFAULT_QUADRATURE_POINTS = 256


def _segment(menu: Menu, y, anchor: Optional[Anchor]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    y = as_point(menu.utility, y)
    y0 = (anchor or Anchor.origin(menu.items)).check(menu.type_box)
    return y0, y, y - y0


def _upper_envelope(intercepts: np.ndarray, slopes: np.ndarray) -> List[Tuple[float, float, int]]:
    """Pieces ``(start, stop, index)`` of ``max_i intercepts[i] + s * slopes[i]`` on [0, 1]."""
    tied = np.flatnonzero(intercepts == intercepts.max())
    current = int(tied[np.argmax(slopes[tied])])
    position = 0.0
    pieces = []
    while True:
        steeper = np.flatnonzero(slopes > slopes[current])
        if steeper.size == 0:
            pieces.append((position, 1.0, current))
            return pieces
        crossings = (intercepts[current] - intercepts[steeper]) / (slopes[steeper] - slopes[current])
        crossing = max(float(crossings.min()), position)
        if crossing >= 1.0:
            pieces.append((position, 1.0, current))
            return pieces
        pieces.append((position, crossing, current))
        reached = steeper[crossings <= crossing]
        current = int(reached[np.argmax(slopes[reached])])
        position = crossing


def _require_bilinear(menu: Menu) -> None:
    if menu.kernel.kind != 'bilinear':
        raise UnsupportedKernelError(menu.kernel.kind, 'bilinear')


def exact_path_integral(menu: Menu, y0: np.ndarray, direction: np.ndarray) -> float:
    """Integral of ``direction . grad v`` for the hard utility, split at the kinks."""
    _require_bilinear(menu)
    intercepts = menu.allocations @ y0 - menu.prices
    slopes = menu.allocations @ direction
    return float(sum((stop - start) * slopes[index] for start, stop, index in _upper_envelope(intercepts, slopes)))


def quadrature_path_integral(
    menu: Menu,
    t: Temperature,
    y0: np.ndarray,
    direction: np.ndarray,
    quadrature_points: int = DEFAULT_QUADRATURE_POINTS,
) -> float:
    """Composite Simpson rule for ``direction . grad v_tau`` on ``quadrature_points`` nodes."""
    if quadrature_points < 3:
        raise InputError('quadrature needs at least 3 points')
    nodes = np.linspace(0.0, 1.0, quadrature_points)
    path = menu.type_box.clip(y0[None, :] + nodes[:, None] * direction[None, :])
    integrand = gcf_grad_smooth_many(menu.utility, path, t) @ direction
    return float(simpson(integrand, x=nodes))


def payment_integral_residual(
    menu: Menu,
    t: Optional[Temperature],
    y,
    anchor: Optional[Anchor] = None,
    quadrature_points: int = DEFAULT_QUADRATURE_POINTS,
) -> float:
    """``|v(y) - v(y0) - integral|``; ``t=None`` checks the hard utility with kink splitting."""
    y0, y, direction = _segment(menu, y, anchor)
    if t is None:
        difference = indirect_utility(menu, y) - indirect_utility(menu, y0)
        integral = exact_path_integral(menu, y0, direction)
    else:
        difference = gcf_eval_smooth(menu.utility, y, t) - gcf_eval_smooth(menu.utility, y0, t)
        integral = quadrature_path_integral(menu, t, y0, direction, quadrature_points)
    return abs(difference - integral)


def reconstructed_payment(
    menu: Menu,
    y,
    anchor: Optional[Anchor] = None,
    t: Optional[Temperature] = None,
    quadrature_points: int = DEFAULT_QUADRATURE_POINTS,
) -> float:
    """``Phi(a(y), y) - v(y0) - integral``, the payment implied by the utility alone.

    With ``t`` the buyer is treated as randomizing over entries with softmax
    weights, so the surplus is the weighted mean of ``Phi(x_i, y)``.
    """
    y0, y, direction = _segment(menu, y, anchor)
    if t is None:
        surplus = float(menu.kernel.evaluate(allocation(menu, y), y))
        return surplus - gcf_eval(menu.utility, y0) - exact_path_integral(menu, y0, direction)
    weights = softmax(t.tau * inner_values(menu.utility, y))
    surplus = float(weights @ menu.kernel.evaluate(menu.allocations, y[None, :]))
    integral = quadrature_path_integral(menu, t, y0, direction, quadrature_points)
    return surplus - gcf_eval_smooth(menu.utility, y0, t) - integral
