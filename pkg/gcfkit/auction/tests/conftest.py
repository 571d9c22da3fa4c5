import numpy as np
import pytest

from gcfkit.auction.models import Menu


@pytest.fixture
def make_menu():
    """Random menus with the zero entry first; allocations kept off the box faces."""

    def factory(rng: np.random.Generator, *, items: int = 2, size: int = 6, price_scale: float = 1.0) -> Menu:
        allocations = rng.uniform(0.1, 0.9, size=(size, items))
        prices = rng.uniform(0.0, price_scale, size=size)
        allocations[0] = 0.0
        prices[0] = 0.0
        return Menu(allocations, prices)

    return factory


@pytest.fixture
def posted_price_menu() -> Menu:
    """Walk away, or buy the single item at 0.5."""
    return Menu([[0.0], [1.0]], [0.0, 0.5])
