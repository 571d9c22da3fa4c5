"""Dual objective, subgradient and the averaged descent solver."""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from gcfkit import project_logging
from gcfkit.config import settings
from gcfkit.core.kernels import BaseKernel
from gcfkit.core.models import FiniteGCF
from gcfkit.core.services import argmax_many, gcf_eval_many, inner_values_many, lean_project
from gcfkit.core.services.batching import map_chunks
from gcfkit.exceptions import DimensionMismatchError, InvalidMeasureError
from gcfkit.optim.services import AveragedSubgradient, TraceRecorder
from gcfkit.ot.models import DualSolution, DualSolveConfig, SampleMeasure, TransportAssignment

logger = logging.getLogger(__name__)


def _check_inputs(potential: FiniteGCF, mu: SampleMeasure, eta_weights) -> np.ndarray:
    eta_weights = np.asarray(eta_weights, dtype=float).reshape(-1)
    if eta_weights.size != potential.size:
        raise InvalidMeasureError(f'{eta_weights.size} target weights for {potential.size} potentials')
    if mu.dim != potential.dim:
        raise DimensionMismatchError(potential.dim, mu.dim, what='source measure')
    return eta_weights


def _objective_parts(potential: FiniteGCF, mu: SampleMeasure, threads: Optional[int] = None):
    """``(sum_k mu_k phi(x_k), mass assigned to each target)`` in chunk order."""

    def chunk(start: int, stop: int):
        values = inner_values_many(potential, mu.points[start:stop])
        best = np.argmax(values, axis=1)
        weights = mu.weights[start:stop]
        phi = values[np.arange(stop - start), best]
        return float(weights @ phi), np.bincount(best, weights=weights, minlength=potential.size)

    parts = map_chunks(chunk, mu.size, threads=threads)
    expectation = 0.0
    mass = np.zeros(potential.size)
    for partial, partial_mass in parts:
        expectation += partial
        mass += partial_mass
    return expectation, mass


def dual_objective(potential: FiniteGCF, mu: SampleMeasure, eta_weights) -> float:
    """``sum_k mu_k max_i (Phi(x_k, y_i) - r_i) + sum_i eta_i r_i``."""
    eta_weights = _check_inputs(potential, mu, eta_weights)
    expectation, _ = _objective_parts(potential, mu)
    return expectation + float(eta_weights @ potential.potentials)


def dual_subgradient(potential: FiniteGCF, mu: SampleMeasure, eta_weights) -> np.ndarray:
    """``eta_i`` minus the source mass whose (lowest-index) argmax is ``i``."""
    eta_weights = _check_inputs(potential, mu, eta_weights)
    _, mass = _objective_parts(potential, mu)
    return eta_weights - mass


def extract_map(solution: DualSolution, x) -> int:
    """Target index a source point is sent to: the argmax support point.

    Candidates within ``settings.TIE_TOL`` of the best go to the lowest index,
    so the map does not move when a constant is added to the potentials.
    """
    points = np.atleast_2d(np.asarray(x, dtype=float))
    return int(argmax_many(solution.potential, points, tie_tol=settings.TIE_TOL)[0])


def transport_assignment(solution: DualSolution) -> TransportAssignment:
    """Apply :func:`extract_map` to every source atom."""
    potential = solution.potential
    indices = argmax_many(potential, solution.mu.points, tie_tol=settings.TIE_TOL)
    surplus = potential.kernel.evaluate(solution.mu.points, potential.support[indices])
    return TransportAssignment(indices=indices, objective=float(solution.mu.weights @ surplus))


def _epigraph_polish(
    surplus: np.ndarray,
    mu: SampleMeasure,
    eta: SampleMeasure,
    anchor: np.ndarray,
) -> Optional[np.ndarray]:
    """Optimal potentials of the finite dual closest (sup norm) to ``anchor``.

    Variables are ``r`` and the epigraph values ``phi_k >= Phi_ki - r_i``. The
    first LP finds the optimal value; the second keeps it and minimizes
    ``max_i |r_i - anchor_i|``. Returns None when either LP fails.
    """
    sources, targets = surplus.shape
    rows = sources * targets
    a_ub = np.zeros((rows, targets + sources))
    a_ub[np.arange(rows), np.tile(np.arange(targets), sources)] = -1.0
    a_ub[np.arange(rows), targets + np.repeat(np.arange(sources), targets)] = -1.0
    b_ub = -surplus.reshape(-1)
    cost = np.concatenate([eta.weights, mu.weights])
    free = [(None, None)] * (targets + sources)

    first = linprog(cost, A_ub=a_ub, b_ub=b_ub, bounds=free, method='highs')
    if first.status != 0:
        logger.warning('Dual polish LP failed', extra={'event': 'ot.polish_failed', 'extra': {'message': first.message}})
        return None
    optimum = float(first.fun)
    slack = 1e-9 * max(1.0, abs(optimum))

    # variables (r, phi, d): min d with the optimal value kept and |r - anchor| <= d
    width = targets + sources + 1
    distance_rows = np.zeros((2 * targets, width))
    distance_rows[np.arange(targets), np.arange(targets)] = 1.0
    distance_rows[targets + np.arange(targets), np.arange(targets)] = -1.0
    distance_rows[:, -1] = -1.0
    a_second = np.vstack([
        np.hstack([a_ub, np.zeros((rows, 1))]),
        np.concatenate([cost, [0.0]])[None, :],
        distance_rows,
    ])
    b_second = np.concatenate([b_ub, [optimum + slack], anchor, -anchor])
    objective = np.zeros(width)
    objective[-1] = 1.0
    second = linprog(objective, A_ub=a_second, b_ub=b_second, bounds=free + [(0, None)], method='highs')
    if second.status != 0:
        logger.warning('Dual polish LP failed', extra={'event': 'ot.polish_failed', 'extra': {'message': second.message}})
        return None
    return np.asarray(second.x[:targets])


def _default_step_scale(surplus_range: float) -> float:
    return surplus_range if surplus_range > 0 else 1.0


def solve_dual(
    mu: SampleMeasure,
    eta: SampleMeasure,
    kernel: BaseKernel,
    config: Optional[DualSolveConfig] = None,
    *,
    threads: Optional[int] = None,
    trace: Optional[TraceRecorder] = None,
) -> DualSolution:
    """Minimize the dual over potentials on the atoms of ``eta``.

    Feasibility ``phi(x) + r_i >= Phi(x, y_i)`` holds for every iterate because
    ``phi`` is the transform of ``r``. The averaged subgradient phase is followed
    by the optional exact polish and a lean projection on the source atoms.
    """
    config = config or DualSolveConfig()
    domain = mu.bounding_box()
    support_box = eta.bounding_box()
    potential = FiniteGCF(eta.points, np.zeros(eta.size), kernel, domain, support_box)

    exact_size = mu.size * eta.size <= config.polish_max_constraints
    surplus = kernel.pairwise(mu.points if exact_size else mu.points[:4096], eta.points)
    scale = config.step_scale or _default_step_scale(float(np.ptp(surplus)))
    solver = AveragedSubgradient(np.zeros(eta.size), scale)

    history: list[float] = []
    best_value = np.inf
    best_params = solver.params.copy()
    iterations = 0
    converged = False
    with project_logging.log_context(solver='ot.dual', sources=mu.size, targets=eta.size):
        for iterations in range(1, config.max_iterations + 1):
            current = potential.with_potentials(solver.params)
            expectation, mass = _objective_parts(current, mu, threads)
            value = expectation + float(eta.weights @ solver.params)
            gradient = eta.weights - mass
            if value < best_value:
                best_value, best_params = value, solver.params.copy()
            history.append(best_value)
            if trace is not None:
                trace.record(iterations, best_value, float(np.linalg.norm(gradient)))
            if not np.any(gradient):
                converged = True
                break
            if iterations > config.window and history[-config.window - 1] - best_value <= config.tolerance:
                converged = True
                break
            solver.step(gradient)

        averaged = potential.with_potentials(solver.average)
        averaged_value = dual_objective(averaged, mu, eta.weights)
        candidate = solver.average if averaged_value <= best_value else best_params
        candidate_value = min(averaged_value, best_value)

        polished = False
        if config.polish:
            if not exact_size:
                logger.info(
                    'Instance too large for the exact polish',
                    extra={'event': 'ot.polish_skipped', 'extra': {'constraints': mu.size * eta.size}},
                )
            else:
                exact = _epigraph_polish(surplus, mu, eta, candidate)
                if exact is not None:
                    exact_value = dual_objective(potential.with_potentials(exact), mu, eta.weights)
                    if candidate_value - exact_value > 1e-9 * max(1.0, abs(exact_value)):
                        candidate, candidate_value = exact, exact_value
                    polished = converged = True

        final = lean_project(potential.with_potentials(candidate), mu.points)
        final_value = dual_objective(final, mu, eta.weights)
        if not converged:
            logger.warning(
                'Dual solver hit the iteration cap',
                extra={
                    'event': 'ot.not_converged',
                    'extra': {'iterations': iterations, 'value': final_value, 'max_iterations': config.max_iterations},
                },
            )
        logger.info(
            'Dual solved',
            extra={
                'event': 'ot.solved',
                'extra': {'value': final_value, 'iterations': iterations, 'polished': polished, 'converged': converged},
            },
        )
    return DualSolution(
        potential=final,
        value=final_value,
        iterations=iterations,
        trace=tuple(history),
        converged=converged,
        mu=mu,
        eta=eta,
        polished=polished,
    )


def feasibility_gap(solution: DualSolution, xs) -> float:
    """``min_{x, i} phi(x) - (Phi(x, y_i) - r_i)``; zero or positive by construction."""
    potential = solution.potential
    xs = np.atleast_2d(np.asarray(xs, dtype=float))
    phi = gcf_eval_many(potential, xs)
    gaps = phi[:, None] - inner_values_many(potential, xs)
    return float(np.min(gaps))
