"""Property suites behind ``gcfkit validate``.

Each suite draws its instances from a fixed seed and returns one
:class:`ValidationReport` per property; a report passes when its worst error is
within the tolerance recorded in ``details``.
"""
from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from gcfkit.approx.models import ValidationReport
from gcfkit.auction.models import Anchor, Menu
from gcfkit.auction.services import (
    allocation,
    indirect_utility,
    payment,
    payment_integral_residual,
    reconstructed_payment,
    soft_revenue,
)
from gcfkit.config import settings
from gcfkit.core.kernels import BilinearKernel, NegativeSquaredDistanceKernel, finite_difference_error
from gcfkit.core.models import Box, FiniteGCF, Temperature
from gcfkit.core.services import conjugate_on_grid, gcf_eval_many, is_lean, lean_project
from gcfkit.core.services.batching import worker_threads
from gcfkit.exceptions import InputError
from gcfkit.ot.fixtures import fixture_path
from gcfkit.ot.serializers import TransportInstanceSerializer
from gcfkit.ot.services import random_discrete_instance, solve_dual, solve_transport_lp

from .nets import build_epsilon_net
from .oracles import lp_lean_witnesses
from .uap import finite_difference_check, grad_convergence_check, restrict_to_net, uap_error

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240601
GRID_RESOLUTION = 11
LEMMA_INSTANCES = 1000
LEAN_INSTANCES = 100
LEMMA_TOL = 1e-12
LEAN_TOL = 1e-9
LP_TOL = 1e-7
FD_TOL = 1e-5
DUALITY_TOL = 1e-6
RESIDUAL_TOL = 1e-4
REFINEMENT_LEVELS = 4
GRAD_LIMIT = 0.05
MONOTONE_TOL = 1e-9
CONVEXITY_WEIGHTS = tuple(round(0.1 * k, 1) for k in range(1, 10))
KERNEL_CLASSES = (BilinearKernel, NegativeSquaredDistanceKernel)

Suite = Callable[[int], List[ValidationReport]]


def _report(name: str, instances: int, error: float, tolerance: float, **details) -> ValidationReport:
    error = float(error)
    return ValidationReport(
        check_name=name,
        instances=instances,
        max_error=error,
        passed=bool(np.isfinite(error) and error <= tolerance),
        details={'tolerance': tolerance, **details},
    )


def _random_gcf(rng: np.random.Generator, kernel_class=BilinearKernel, size: int = 6, dim: int = 2) -> FiniteGCF:
    box = Box.unit(dim)
    return FiniteGCF(
        rng.uniform(size=(size, dim)), rng.uniform(size=size), kernel_class.for_boxes(box, box), box
    )


def lemma_suite(seed: int = DEFAULT_SEED) -> List[ValidationReport]:
    """Fenchel-Young, order reversal, double-transform dominance and biconjugation on a grid."""
    rng = np.random.default_rng(seed)
    grid = Box.unit(2).grid(GRID_RESOLUTION)
    worst = {'fenchel_young': 0.0, 'order_reversal': 0.0, 'dominance': 0.0, 'biconjugation': 0.0}

    for trial in range(LEMMA_INSTANCES):
        f = _random_gcf(rng, KERNEL_CLASSES[trial % 2])
        g = conjugate_on_grid(f, grid)
        ys = rng.uniform(size=(16, 2))
        f_grid = gcf_eval_many(f, grid)
        g_sample = gcf_eval_many(g, ys)

        gap = f_grid[:, None] + g_sample[None, :] - f.kernel.pairwise(grid, ys)
        worst['fenchel_young'] = max(worst['fenchel_young'], -float(np.min(gap)))

        larger = f.with_potentials(f.potentials - rng.uniform(0.0, 0.5, size=f.size))
        reversed_gap = gcf_eval_many(conjugate_on_grid(larger, grid), ys) - g_sample
        worst['order_reversal'] = max(worst['order_reversal'], float(np.max(reversed_gap)))

        projected = lean_project(f, grid)
        worst['dominance'] = max(worst['dominance'], float(np.max(projected.potentials - f.potentials)))

        same_on_grid = np.max(np.abs(gcf_eval_many(projected, grid) - f_grid))
        same_conjugate = np.max(np.abs(gcf_eval_many(conjugate_on_grid(projected, grid), ys) - g_sample))
        worst['biconjugation'] = max(worst['biconjugation'], float(same_on_grid), float(same_conjugate))

    return [
        _report('lemmas.fenchel_young', LEMMA_INSTANCES, max(worst['fenchel_young'], 0.0), LEMMA_TOL),
        _report('lemmas.order_reversal', LEMMA_INSTANCES, max(worst['order_reversal'], 0.0), 0.0),
        _report('lemmas.double_transform_dominance', LEMMA_INSTANCES, max(worst['dominance'], 0.0), LEMMA_TOL),
        _report('lemmas.biconjugation', LEMMA_INSTANCES, worst['biconjugation'], LEMMA_TOL),
    ]


def lean_convexity_report(
    pairs: Sequence[Tuple[FiniteGCF, FiniteGCF]], grid: np.ndarray
) -> ValidationReport:
    """Worst attainment deficit over the weights in ``CONVEXITY_WEIGHTS`` for bilinear pairs.

    Candidate witnesses for a mixture are the grid, its LP witnesses and the same
    mixture of the two grid witnesses of each index.
    """
    deficit = 0.0
    for first, second in pairs:
        first_witnesses = is_lean(first, grid, tol=LEAN_TOL).witnesses
        second_witnesses = is_lean(second, grid, tol=LEAN_TOL).witnesses
        for weight in CONVEXITY_WEIGHTS:
            mixed = first.with_potentials(weight * first.potentials + (1.0 - weight) * second.potentials)
            lp_points, _ = lp_lean_witnesses(mixed)
            blocks = [grid, lp_points]
            blocks.extend(
                weight * a[None, :] + (1.0 - weight) * b[None, :]
                for a, b in zip(first_witnesses, second_witnesses)
                if a is not None and b is not None
            )
            report = is_lean(mixed, np.vstack(blocks), tol=LEAN_TOL)
            deficit = max(deficit, -float(np.min(report.slack)))
    return _report(
        'lean.convexity', len(pairs), max(deficit, 0.0), LEAN_TOL, weights=list(CONVEXITY_WEIGHTS)
    )


def lean_suite(seed: int = DEFAULT_SEED) -> List[ValidationReport]:
    """Projection idempotence, the fixed-point test for leanness and convexity of lean potentials."""
    rng = np.random.default_rng(seed)
    grid = Box.unit(2).grid(GRID_RESOLUTION)
    idempotence = 0.0
    mismatches = 0
    lean_count = 0
    pairs = []

    for trial in range(LEAN_INSTANCES):
        f = _random_gcf(rng, KERNEL_CLASSES[trial % 2])
        once = lean_project(f, grid)
        twice = lean_project(once, grid)
        idempotence = max(idempotence, float(np.max(np.abs(twice.potentials - once.potentials))))

        for candidate in (f, once):
            lean = bool(is_lean(candidate, grid, tol=LEAN_TOL))
            fixed = float(np.max(np.abs(lean_project(candidate, grid).potentials - candidate.potentials))) <= LEAN_TOL
            mismatches += int(lean != fixed)
            lean_count += int(lean)

        first = lean_project(_random_gcf(rng), grid)
        pairs.append((first, lean_project(first.with_potentials(rng.uniform(size=first.size)), grid)))

    return [
        _report('lean.idempotence', LEAN_INSTANCES, idempotence, LEAN_TOL),
        _report(
            'lean.fixed_point_equivalence', 2 * LEAN_INSTANCES, mismatches, 0, lean_instances=lean_count
        ),
        lean_convexity_report(pairs, grid),
    ]


def uap_suite(seed: int = DEFAULT_SEED) -> List[ValidationReport]:
    """Net restriction error against epsilon, and gradient error under net refinement."""
    rng = np.random.default_rng(seed)
    cases = []
    worst_ratio = 0.0
    for dim, resolution in ((1, 401), (2, 41)):
        box = Box.unit(dim)
        sample_points = box.grid(resolution)
        for epsilon in (0.2, 0.1, 0.05):
            errors = []
            for _ in range(3):
                f = FiniteGCF(
                    rng.uniform(size=(200, dim)), rng.uniform(size=200), BilinearKernel.for_boxes(box, box), box
                )
                net = build_epsilon_net(box, epsilon, f.kernel.lipschitz)
                errors.append(uap_error(f, net, sample_points))
            worst_ratio = max(worst_ratio, max(errors) / epsilon)
            cases.append({'dim': dim, 'epsilon': epsilon, 'max_error': max(errors)})
    # strict bound: a ratio of exactly 1 fails
    bound = _report('uap.bound', len(cases) * 3, worst_ratio, np.nextafter(1.0, 0.0), cases=cases)

    box = Box.unit(1)
    # kinks at x = 0.35 and 0.7; no slope lies on any of the lattices below
    limit = FiniteGCF([[0.17], [0.53], [0.86]], [0.0, 0.126, 0.357], BilinearKernel.for_boxes(box, box), box)
    # odd refinement factor keeps every coarse midpoint in the finer lattice
    epsilons = [0.2 / 3 ** k for k in range(REFINEMENT_LEVELS)]
    nets = [build_epsilon_net(box, epsilon, limit.kernel.lipschitz) for epsilon in epsilons]
    sequence = [restrict_to_net(limit, net, box.grid(4001)) for net in nets]
    check = grad_convergence_check(sequence, limit, box.grid(201)[1:-1])
    errors = list(check.errors)
    increases = [later - earlier for earlier, later in zip(errors, errors[1:])]
    over_spacing = [error - float(net.spacing[0]) for error, net in zip(errors, nets)]
    shrinks = errors[-1] < errors[0] and errors[-1] < GRAD_LIMIT
    refinement = _report(
        'uap.gradient_refinement',
        len(nets),
        max(max(increases + over_spacing), 0.0) if shrinks else float('inf'),
        MONOTONE_TOL,
        errors=errors,
        counts=[net.counts[0] for net in nets],
        checked_points=check.checked_points,
    )
    return [bound, refinement]


def _soft_revenue_fd_error(menu: Menu, types: np.ndarray, t: Temperature, step: float) -> float:
    _, grad_allocations, grad_prices = soft_revenue(menu, types, t)
    analytic = np.concatenate([grad_allocations.reshape(-1), grad_prices])
    params = menu.flatten()
    numeric = np.zeros(params.size)
    for index in np.flatnonzero(~menu.frozen_mask()):
        shift = np.zeros(params.size)
        shift[index] = step
        up = Menu.from_flat(params + shift, menu.items, includes_zero=False)
        down = Menu.from_flat(params - shift, menu.items, includes_zero=False)
        numeric[index] = (soft_revenue(up, types, t)[0] - soft_revenue(down, types, t)[0]) / (2 * step)
    return float(np.linalg.norm(analytic - numeric) / max(1.0, float(np.linalg.norm(numeric))))


def _random_menu(rng: np.random.Generator, items: int, size: int) -> Menu:
    allocations = rng.uniform(0.1, 0.9, size=(size, items))
    prices = rng.uniform(0.0, 1.0, size=size)
    allocations[0] = 0.0
    prices[0] = 0.0
    return Menu(allocations, prices)


def gradient_suite(seed: int = DEFAULT_SEED) -> List[ValidationReport]:
    """Analytic gradients against central differences, and the smoothed payment identity."""
    rng = np.random.default_rng(seed)
    step = settings.KERNEL_FD_STEP

    kernel_error = 0.0
    for kernel_class in KERNEL_CLASSES:
        for dim in (1, 2, 3):
            box = Box.unit(dim)
            kernel_error = max(
                kernel_error,
                finite_difference_error(
                    kernel_class.for_boxes(box, box), box, box, rng=rng, samples=settings.KERNEL_FD_SAMPLES, step=step
                ),
            )

    transform_error = 0.0
    inner = Box([0.05, 0.05], [0.95, 0.95])
    for trial in range(20):
        f = _random_gcf(rng, KERNEL_CLASSES[trial % 2], size=8)
        sample_points = inner.sample(rng, 50)
        transform_error = max(
            transform_error,
            finite_difference_check(f, sample_points, step=step).max_rel_error,
            finite_difference_check(f, sample_points, temperature=Temperature(20.0), step=step).max_rel_error,
        )

    revenue_error = 0.0
    for _ in range(5):
        menu = _random_menu(rng, items=2, size=4)
        revenue_error = max(revenue_error, _soft_revenue_fd_error(menu, rng.uniform(size=(64, 2)), Temperature(10.0), step))

    residual = 0.0
    t = Temperature(50.0)
    for _ in range(20):
        menu = _random_menu(rng, items=2, size=6)
        residual = max(residual, payment_integral_residual(menu, t, rng.uniform(size=2)))

    return [
        _report('gradients.kernels', 2 * 3 * settings.KERNEL_FD_SAMPLES, kernel_error, settings.KERNEL_FD_TOLERANCE),
        _report('gradients.transform', 20, transform_error, FD_TOL),
        _report('gradients.soft_revenue', 5, revenue_error, FD_TOL),
        _report('gradients.payment_integral', 20, residual, RESIDUAL_TOL, tau=t.tau),
    ]


def _bundled_instances():
    for name in ('two_by_two.json', 'self_transport.json'):
        instance = TransportInstanceSerializer.read(fixture_path(name))
        yield name, instance.mu, instance.eta, instance.kernel()


def duality_suite(seed: int = DEFAULT_SEED) -> List[ValidationReport]:
    """Dual optimum against the exact primal LP on small discrete instances."""
    rng = np.random.default_rng(seed)
    instances = list(_bundled_instances())
    for trial in range(10):
        sources, targets = rng.integers(2, 7, size=2)
        mu, eta = random_discrete_instance(rng, int(sources), int(targets), dim=1 + trial % 2)
        instances.append((f'random-{trial}', mu, eta, BilinearKernel.for_boxes(mu.bounding_box(), eta.bounding_box())))

    gaps = {}
    for name, mu, eta, kernel in instances:
        primal, _ = solve_transport_lp(mu, eta, kernel)
        gaps[name] = abs(solve_dual(mu, eta, kernel).value - primal)
    return [_report('duality.strong_duality', len(instances), max(gaps.values()), DUALITY_TOL, gaps=gaps)]


def auction_identity_suite(seed: int = DEFAULT_SEED) -> List[ValidationReport]:
    """Accounting, individual rationality, incentive compatibility and payment reconstruction."""
    rng = np.random.default_rng(seed)
    menus = 50
    accounting = rationality = incentive = reconstruction = 0.0

    for _ in range(menus):
        items = int(rng.integers(1, 4))
        menu = _random_menu(rng, items=items, size=8)
        for y in rng.uniform(size=(20, items)):
            chosen = allocation(menu, y)
            price = payment(menu, y)
            utility = indirect_utility(menu, y)
            value = float(menu.kernel.evaluate(chosen, y)) - price
            accounting = max(accounting, abs(value - utility))
            rationality = max(rationality, -utility)
            incentive = max(incentive, float(np.max(menu.kernel.evaluate(menu.allocations, y[None, :]) - menu.prices)) - value)
            reconstruction = max(reconstruction, abs(reconstructed_payment(menu, y, Anchor.origin(items)) - price))

    return [
        _report('auction.accounting', menus, accounting, 0.0),
        _report('auction.individual_rationality', menus, max(rationality, 0.0), 0.0),
        _report('auction.incentive_compatibility', menus, max(incentive, 0.0), 0.0),
        _report('auction.payment_reconstruction', menus, reconstruction, LP_TOL),
    ]


SUITES: Dict[str, Suite] = {
    'lemmas': lemma_suite,
    'lean': lean_suite,
    'uap': uap_suite,
    'gradients': gradient_suite,
    'duality': duality_suite,
    'auction-identities': auction_identity_suite,
}
SUITE_NAMES = tuple(SUITES) + ('all',)


def run_suite(name: str, seed: int = DEFAULT_SEED, threads: Optional[int] = None) -> List[ValidationReport]:
    """Run one named suite, or every suite in order for ``'all'``.

    ``threads`` sets the worker count of every chunked reduction the suites run.
    """
    if name not in SUITE_NAMES:
        raise InputError(f"unknown suite '{name}'; choose from {', '.join(SUITE_NAMES)}")
    names = list(SUITES) if name == 'all' else [name]
    reports: List[ValidationReport] = []
    for suite_name in names:
        with worker_threads(threads):
            results = SUITES[suite_name](seed)
        failed = [report.check_name for report in results if not report.passed]
        log = logger.warning if failed else logger.info
        log(
            'Suite finished',
            extra={'event': 'approx.suite_finished', 'extra': {'suite': suite_name, 'seed': seed, 'failed': failed}},
        )
        reports.extend(results)
    return reports
