import json

import pytest
from click.testing import CliRunner

SMALL_AUCTION = {
    'menu_size': 4,
    'samples': 2000,
    'batch_size': 500,
    'epochs': 3,
    'tau_schedule': [10.0, 100.0],
    'eval_samples': 5000,
}


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def write_config(tmp_path):
    """Write a flat JSON config and return its path."""

    def factory(name: str = 'config.json', **values):
        path = tmp_path / name
        path.write_text(json.dumps(values))
        return path

    return factory


@pytest.fixture
def small_auction_config(write_config):
    return write_config('auction.json', **SMALL_AUCTION)
