"""Softmax relaxation of the buyer's choice and the annealed training loop."""
from __future__ import annotations

import logging
from dataclasses import replace
from typing import Optional, Tuple

import numpy as np
from scipy.special import softmax

from gcfkit import project_logging
from gcfkit.auction.models import MechanismReport, Menu, TrainConfig
from gcfkit.core.kernels import get_kernel
from gcfkit.core.models import Box, Temperature
from gcfkit.core.services import inner_values_many
from gcfkit.core.services.batching import map_chunks
from gcfkit.core.services.transform import as_points
from gcfkit.exceptions import NonFiniteGradientError, TrainingAbortedError
from gcfkit.optim.models import OptState
from gcfkit.optim.services import TraceRecorder, anneal, project_box
from gcfkit.optim.services import step as adam_step
from gcfkit.ot.models import SampleMeasure

from .mechanism import evaluate_mechanism, hard_revenue, production_cost_vector

logger = logging.getLogger(__name__)


def _types_and_weights(menu: Menu, types) -> Tuple[np.ndarray, np.ndarray]:
    if isinstance(types, SampleMeasure):
        return as_points(menu.utility, types.points), types.weights
    points = as_points(menu.utility, types)
    return points, np.full(points.shape[0], 1.0 / points.shape[0])


def soft_revenue(
    menu: Menu,
    types,
    t: Temperature,
    *,
    production_cost=None,
    threads: Optional[int] = None,
) -> Tuple[float, np.ndarray, np.ndarray]:
    """Expected profit when type ``y`` picks entry ``i`` with probability ``softmax(tau * u(y))_i``.

    Returns ``(value, d/d allocations, d/d prices)``. The gradient of a frozen
    entry 0 is zero.
    """
    points, weights = _types_and_weights(menu, types)
    cost = production_cost_vector(menu, production_cost)
    profit = menu.prices - menu.allocations @ cost
    tau = t.tau
    kernel = menu.utility.kernel

    def chunk(start: int, stop: int):
        ys = points[start:stop]
        mass = weights[start:stop]
        w = softmax(tau * inner_values_many(menu.utility, ys), axis=1)
        expected = w @ profit
        sensitivity = tau * mass[:, None] * w * (profit[None, :] - expected[:, None])
        chosen = mass @ w
        grad_prices = chosen - sensitivity.sum(axis=0)
        grad_allocations = kernel.weighted_grad_y(ys, menu.allocations, sensitivity) - chosen[:, None] * cost[None, :]
        return float(mass @ expected), grad_allocations, grad_prices

    value = 0.0
    grad_allocations = np.zeros_like(menu.allocations)
    grad_prices = np.zeros(menu.size)
    for part_value, part_allocations, part_prices in map_chunks(chunk, points.shape[0], threads=threads):
        value += part_value
        grad_allocations += part_allocations
        grad_prices += part_prices
    if menu.includes_zero:
        grad_allocations[0] = 0.0
        grad_prices[0] = 0.0
    return value, grad_allocations, grad_prices


def initial_menu(config: TrainConfig, rng: np.random.Generator) -> Menu:
    """Allocations uniform on the unit cube, prices uniform on ``[0, price_scale]``; entry 0 zero."""
    size, items = config.resolved_menu_size, config.items
    allocations = rng.uniform(0.0, 1.0, size=(size, items))
    prices = rng.uniform(0.0, config.price_scale, size=size)
    allocations[0] = 0.0
    prices[0] = 0.0
    box = Box.unit(items)
    return Menu(allocations, prices, kernel=get_kernel(config.kernel, box, box))


def train_auction(
    config: TrainConfig,
    *,
    trace: Optional[TraceRecorder] = None,
    threads: Optional[int] = None,
) -> Tuple[Menu, MechanismReport]:
    """Projected adaptive ascent on the soft revenue, annealed through ``config.tau_schedule``.

    The returned menu is the one with the best hard revenue on the training pool at
    a stage boundary; the report comes from a separate evaluation sample.
    """
    init_seq, pool_seq, eval_seq = np.random.SeedSequence(config.seed).spawn(3)
    items = config.items
    menu = initial_menu(config, np.random.default_rng(init_seq))
    pool_rng = np.random.default_rng(pool_seq)
    pool = pool_rng.uniform(0.0, 1.0, size=(config.samples, items))
    cost = production_cost_vector(menu, config.production_cost)

    state = OptState.create(menu.flatten(), config=config.adam, frozen=menu.frozen_mask())
    allocation_mask = menu.allocation_mask()
    best_menu = menu
    best_revenue = hard_revenue(menu, pool, production_cost=cost, threads=threads)
    previous_revenue = best_revenue
    batch = min(config.batch_size, config.samples)
    steps = 0

    with project_logging.log_context(items=items, menu_size=menu.size, seed=config.seed):
        logger.info(
            'Training started',
            extra={'event': 'auction.training_started', 'extra': {'initial_revenue': best_revenue, 'stages': config.stages}},
        )
        for stage in range(config.stages):
            temperature = anneal(config.tau_schedule, stage)
            with project_logging.log_context(stage=stage, tau=temperature.tau):
                for _ in range(config.epochs):
                    order = pool_rng.permutation(config.samples)
                    for start in range(0, config.samples, batch):
                        steps += 1
                        value, grad_allocations, grad_prices = soft_revenue(
                            menu, pool[order[start:start + batch]], temperature, production_cost=cost, threads=threads
                        )
                        if not np.isfinite(value):
                            logger.error(
                                'Soft revenue is not finite',
                                extra={'event': 'auction.training_aborted', 'extra': {'step': steps, 'value': value}},
                            )
                            raise TrainingAbortedError(stage, steps, temperature.tau)
                        gradient = np.concatenate([grad_allocations.reshape(-1), grad_prices])
                        try:
                            state = adam_step(state, gradient, 'maximize')
                        except NonFiniteGradientError as exc:
                            raise TrainingAbortedError(stage, steps, temperature.tau, reason=str(exc)) from exc
                        state = state.with_params(project_box(state.params, 0.0, 1.0, mask=allocation_mask))
                        menu = Menu.from_flat(state.params, items, kernel=menu.kernel)
                        if trace is not None:
                            trace.record(steps, value, float(np.linalg.norm(gradient)), temperature.tau)

                revenue = hard_revenue(menu, pool, production_cost=cost, threads=threads)
                logger.info(
                    'Stage completed',
                    extra={'event': 'auction.stage_completed', 'extra': {'hard_revenue': revenue, 'steps': steps}},
                )
                if revenue > best_revenue:
                    best_menu, best_revenue = menu, revenue
                if stage > 0 and revenue <= previous_revenue:
                    logger.warning(
                        'No improvement across a full stage, stopping early',
                        extra={'event': 'auction.early_stop', 'extra': {'hard_revenue': revenue, 'previous': previous_revenue}},
                    )
                    break
                previous_revenue = revenue

        eval_types = np.random.default_rng(eval_seq).uniform(0.0, 1.0, size=(config.eval_samples, items))
        report = evaluate_mechanism(best_menu, eval_types, production_cost=cost, seed=config.seed, threads=threads)
        final = anneal(config.tau_schedule, config.stages - 1)
        soft, _, _ = soft_revenue(best_menu, eval_types, final, production_cost=cost, threads=threads)
        report = replace(report, soft_revenue=soft, tau=final.tau)
        logger.info(
            'Training finished',
            extra={'event': 'auction.training_finished', 'extra': {'revenue': report.revenue, 'steps': steps}},
        )
    return best_menu, report
