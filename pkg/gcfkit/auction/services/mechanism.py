"""The menu mechanism: choice, allocation, payment and Monte Carlo evaluation."""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from gcfkit.auction.models import MechanismReport, Menu, MenuUsage
from gcfkit.core.services import argmax_index, gcf_eval, inner_values_many
from gcfkit.core.services.transform import as_points
from gcfkit.core.services.batching import map_chunks
from gcfkit.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


def production_cost_vector(menu: Menu, production_cost=None) -> np.ndarray:
    if production_cost is None:
        return np.zeros(menu.items)
    cost = np.asarray(production_cost, dtype=float).reshape(-1)
    if cost.size != menu.items:
        raise DimensionMismatchError(menu.items, cost.size, what='production cost')
    return cost


def indirect_utility(menu: Menu, y) -> float:
    """``v(y) = max_i Phi(x_i, y) - t_i``."""
    return gcf_eval(menu.utility, y)


def allocation(menu: Menu, y) -> np.ndarray:
    """Allocation of the chosen entry; ties go to the lowest index."""
    return menu.allocations[argmax_index(menu.utility, y)].copy()


def payment(menu: Menu, y) -> float:
    return float(menu.prices[argmax_index(menu.utility, y)])


def choices(menu: Menu, ys) -> np.ndarray:
    """Chosen entry index for every type in ``ys``."""
    return np.argmax(inner_values_many(menu.utility, ys), axis=1)


def _outcomes(menu: Menu, ys: np.ndarray, cost: np.ndarray):
    values = inner_values_many(menu.utility, ys)
    chosen = np.argmax(values, axis=1)
    utility = values[np.arange(ys.shape[0]), chosen]
    profit = menu.prices[chosen] - menu.allocations[chosen] @ cost
    return chosen, profit, utility


def hard_revenue(menu: Menu, ys, *, production_cost=None, threads: Optional[int] = None) -> float:
    """Mean seller profit when every type picks its best entry."""
    points = as_points(menu.utility, ys)
    cost = production_cost_vector(menu, production_cost)

    def chunk(start: int, stop: int) -> float:
        _, profit, _ = _outcomes(menu, points[start:stop], cost)
        return float(np.sum(profit))

    return sum(map_chunks(chunk, points.shape[0], threads=threads)) / points.shape[0]


def evaluate_mechanism(
    menu: Menu,
    samples,
    *,
    production_cost=None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
) -> MechanismReport:
    """Monte Carlo means of ``t(y)/n``, ``Phi(a(y), y)/n`` and ``v(y)/n`` over ``samples``.

    Sums run over fixed chunks in chunk order, so the report does not depend on
    the thread count.
    """
    points = as_points(menu.utility, samples)
    cost = production_cost_vector(menu, production_cost)
    total = points.shape[0]

    def chunk(start: int, stop: int) -> np.ndarray:
        chosen, profit, utility = _outcomes(menu, points[start:stop], cost)
        surplus = profit + utility
        stats = np.stack([profit, surplus, utility])
        return np.concatenate([stats.sum(axis=1), (stats * stats).sum(axis=1), [np.count_nonzero(chosen)]])

    sums = np.zeros(7)
    for part in map_chunks(chunk, total, threads=threads):
        sums += part
    means = sums[:3] / total
    if total > 1:
        variances = np.maximum(sums[3:6] - total * means * means, 0.0) / (total - 1)
        stderr = np.sqrt(variances / total)
    else:
        stderr = np.zeros(3)
    items = menu.items
    report = MechanismReport(
        items=items,
        samples=total,
        mean_profit_per_item=float(means[0] / items),
        mean_surplus_per_item=float(means[1] / items),
        mean_utility_per_item=float(means[2] / items),
        stderr_profit_per_item=float(stderr[0] / items),
        stderr_surplus_per_item=float(stderr[1] / items),
        stderr_utility_per_item=float(stderr[2] / items),
        purchase_rate=float(sums[6] / total),
        seed=seed,
    )
    logger.info(
        'Mechanism evaluated',
        extra={'event': 'auction.evaluated', 'extra': {'samples': total, 'revenue': report.revenue, 'menu_size': menu.size}},
    )
    return report


def menu_usage(menu: Menu, types, *, production_cost=None) -> MenuUsage:
    """Purchase share of every entry and the profit it contributes per type."""
    points = as_points(menu.utility, types)
    cost = production_cost_vector(menu, production_cost)
    chosen, profit, _ = _outcomes(menu, points, cost)
    total = points.shape[0]
    shares = np.bincount(chosen, minlength=menu.size) / total
    revenue = np.bincount(chosen, weights=profit, minlength=menu.size) / total
    return MenuUsage(shares=shares, revenue=revenue)


def effective_prices(menu: Menu, types, *, decimals: int = 6) -> np.ndarray:
    """Distinct prices paid by types that buy something, rounded to ``decimals``."""
    chosen = choices(menu, types)
    buying = chosen[np.any(menu.allocations[chosen] > 0, axis=1)]
    return np.unique(np.round(menu.prices[buying], decimals))


def prune_menu(menu: Menu, types) -> Menu:
    """Drop entries no type in ``types`` chooses; entry 0 always stays."""
    keep = np.zeros(menu.size, dtype=bool)
    keep[np.unique(choices(menu, types))] = True
    keep[0] = True
    return menu.with_entries(menu.allocations[keep], menu.prices[keep])
