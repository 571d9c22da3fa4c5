"""Choice, payment and Monte Carlo accounting of menu mechanisms."""
import numpy as np
import pytest

from gcfkit.approx.services import oracle_gradient
from gcfkit.auction.models import Menu
from gcfkit.auction.services import (
    allocation,
    choices,
    effective_prices,
    evaluate_mechanism,
    hard_revenue,
    indirect_utility,
    menu_usage,
    payment,
    prune_menu,
)
from gcfkit.config import settings
from gcfkit.core.services import margins


class TestMenuChoice:
    def test_buyer_above_price(self, posted_price_menu):
        assert indirect_utility(posted_price_menu, [0.7]) == pytest.approx(0.2, abs=1e-15)
        np.testing.assert_array_equal(allocation(posted_price_menu, [0.7]), [1.0])
        assert payment(posted_price_menu, [0.7]) == 0.5

    def test_buyer_walks_away(self, posted_price_menu):
        assert indirect_utility(posted_price_menu, [0.3]) == 0.0
        np.testing.assert_array_equal(allocation(posted_price_menu, [0.3]), [0.0])
        assert payment(posted_price_menu, [0.3]) == 0.0

    def test_utility_identity_is_exact(self, rng, make_menu):
        for _ in range(200):
            menu = make_menu(rng, items=3, size=8)
            y = rng.uniform(size=3)
            a = allocation(menu, y)
            assert float(menu.kernel.evaluate(a, y)) - payment(menu, y) - indirect_utility(menu, y) == 0.0

    def test_individually_rational(self, rng, make_menu):
        menu = make_menu(rng, items=2, size=10, price_scale=2.0)
        for y in rng.uniform(size=(500, 2)):
            assert indirect_utility(menu, y) >= 0.0

    def test_incentive_compatible(self, rng, make_menu):
        """The chosen entry is at least as good as every other entry."""
        menu = make_menu(rng, items=2, size=10)
        for y in rng.uniform(size=(200, 2)):
            chosen_value = float(menu.kernel.evaluate(allocation(menu, y), y)) - payment(menu, y)
            assert np.all(chosen_value >= menu.kernel.evaluate(menu.allocations, y[None, :]) - menu.prices)

    def test_envelope_gradient_is_allocation(self, rng, make_menu):
        menu = make_menu(rng, items=2, size=8)
        sample_points = rng.uniform(0.05, 0.95, size=(300, 2))
        checked = 0
        for y in sample_points[margins(menu.utility, sample_points) >= 1e-4]:
            numeric = oracle_gradient(lambda z: indirect_utility(menu, z), y)
            expected = allocation(menu, y)
            assert np.linalg.norm(numeric - expected) / max(1.0, np.linalg.norm(expected)) <= 1e-5
            checked += 1
        assert checked > 100

    def test_batched_choices(self, rng, make_menu):
        menu = make_menu(rng, items=2)
        ys = rng.uniform(size=(50, 2))
        expected = [int(np.argmax(menu.allocations @ y - menu.prices)) for y in ys]
        np.testing.assert_array_equal(choices(menu, ys), expected)


class TestEvaluateMechanism:
    def test_posted_price(self, rng, posted_price_menu):
        report = evaluate_mechanism(posted_price_menu, rng.uniform(size=(1_000_000, 1)), seed=11)

        assert report.mean_profit_per_item == pytest.approx(0.25, abs=0.002)
        assert report.mean_surplus_per_item == pytest.approx(0.375, abs=0.002)
        assert report.mean_utility_per_item == pytest.approx(0.125, abs=0.002)
        assert report.purchase_rate == pytest.approx(0.5, abs=0.002)
        assert 0 < report.stderr_surplus_per_item < 0.001
        assert report.seed == 11

    def test_zero_menu(self, rng):
        report = evaluate_mechanism(Menu.zero(2), rng.uniform(size=(1000, 2)))

        assert report.mean_profit_per_item == 0.0
        assert report.mean_surplus_per_item == 0.0
        assert report.mean_utility_per_item == 0.0
        assert report.purchase_rate == 0.0

    def test_surplus_is_profit_plus_utility(self, rng, make_menu):
        menu = make_menu(rng, items=3, size=12)
        report = evaluate_mechanism(menu, rng.uniform(size=(20_000, 3)), production_cost=[0.1, 0.0, 0.2])
        assert report.mean_surplus_per_item == pytest.approx(
            report.mean_profit_per_item + report.mean_utility_per_item, abs=1e-12
        )

    def test_production_cost_lowers_profit(self, rng, posted_price_menu):
        types = rng.uniform(size=(10_000, 1))
        plain = hard_revenue(posted_price_menu, types)
        costly = hard_revenue(posted_price_menu, types, production_cost=[0.2])
        purchase = np.mean(types[:, 0] > 0.5)
        assert costly == pytest.approx(plain - 0.2 * purchase, abs=1e-12)

    def test_independent_of_thread_count(self, rng, make_menu, monkeypatch):
        monkeypatch.setattr(settings, 'MC_CHUNK_SIZE', 997)
        menu = make_menu(rng, items=2, size=16)
        types = rng.uniform(size=(10_000, 2))
        assert evaluate_mechanism(menu, types, threads=1) == evaluate_mechanism(menu, types, threads=4)


class TestMenuUsage:
    def test_shares(self, rng, make_menu):
        menu = make_menu(rng, items=2, size=8)
        types = rng.uniform(size=(5000, 2))
        usage = menu_usage(menu, types)

        assert usage.shares.sum() == pytest.approx(1.0)
        assert usage.revenue.sum() == pytest.approx(hard_revenue(menu, types), abs=1e-12)

    def test_posted_price_effective_prices(self, rng, posted_price_menu):
        np.testing.assert_array_equal(effective_prices(posted_price_menu, rng.uniform(size=(1000, 1))), [0.5])

    def test_prune_keeps_zero_entry(self, rng):
        menu = Menu([[0.0], [1.0], [1.0]], [0.0, 0.5, 2.0])
        pruned = prune_menu(menu, rng.uniform(size=(1000, 1)))

        assert pruned.size == 2
        np.testing.assert_array_equal(pruned.prices, [0.0, 0.5])
