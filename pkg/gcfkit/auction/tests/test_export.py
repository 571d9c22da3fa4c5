import csv
import json

import numpy as np
import pytest

from gcfkit.auction.models import Menu
from gcfkit.auction.serializers import MechanismSerializer
from gcfkit.auction.services import evaluate_mechanism, grid_rows, write_grid_csv
from gcfkit.exceptions import InstanceParseError


class TestGridExport:
    def test_rows_and_header(self, rng, make_menu):
        menu = make_menu(rng, items=2, size=5)
        header, rows = grid_rows(menu, 64)

        assert header == ['y1', 'y2', 'v', 't', 'a1', 'a2']
        assert rows.shape == (64 * 64, 6)
        np.testing.assert_allclose(rows[:, 2], np.max(menu.allocations @ rows[:, :2].T - menu.prices[:, None], axis=0), atol=1e-12)

    def test_posted_price_rows(self, posted_price_menu):
        _, rows = grid_rows(posted_price_menu, 5)
        np.testing.assert_allclose(rows[:, 0], [0.0, 0.25, 0.5, 0.75, 1.0])
        np.testing.assert_allclose(rows[:, 2], [0.0, 0.0, 0.0, 0.25, 0.5], atol=1e-12)
        np.testing.assert_array_equal(rows[:, 3], [0.0, 0.0, 0.0, 0.5, 0.5])
        np.testing.assert_array_equal(rows[:, 4], [0.0, 0.0, 0.0, 1.0, 1.0])

    def test_csv(self, tmp_path, posted_price_menu):
        path = write_grid_csv(posted_price_menu, 11, tmp_path / 'grid.csv')
        with path.open() as handle:
            lines = list(csv.reader(handle))

        assert lines[0] == ['y1', 'v', 't', 'a1']
        assert len(lines) == 12
        assert float(lines[-1][1]) == 0.5


class TestMechanismSerializer:
    def test_payload(self, rng, posted_price_menu):
        report = evaluate_mechanism(posted_price_menu, rng.uniform(size=(1000, 1)), seed=5)
        payload = MechanismSerializer.to_representation(posted_price_menu, report)

        assert payload['items'] == 1
        assert payload['menu'] == [{'allocation': [0.0], 'price': 0.0}, {'allocation': [1.0], 'price': 0.5}]
        assert payload['report']['seed'] == 5
        json.dumps(payload)

    def test_load(self, rng, make_menu):
        menu = make_menu(rng, items=3, size=4)
        loaded = MechanismSerializer.loads(json.dumps(MechanismSerializer.to_representation(menu)))

        np.testing.assert_array_equal(loaded.allocations, menu.allocations)
        np.testing.assert_array_equal(loaded.prices, menu.prices)

    def test_allocation_length(self):
        payload = {'items': 2, 'menu': [{'allocation': [0.0, 0.0], 'price': 0.0}, {'allocation': [1.0], 'price': 0.5}]}
        with pytest.raises(InstanceParseError) as excinfo:
            MechanismSerializer.load(payload)
        assert excinfo.value.field == 'menu.1.allocation'

    def test_allocation_range(self):
        payload = {'items': 1, 'menu': [{'allocation': [0.0], 'price': 0.0}, {'allocation': [1.5], 'price': 0.5}]}
        with pytest.raises(InstanceParseError) as excinfo:
            MechanismSerializer.load(payload)
        assert excinfo.value.field == 'menu.1.allocation.0'

    def test_nonzero_first_entry(self):
        payload = {'items': 1, 'menu': [{'allocation': [1.0], 'price': 0.5}]}
        with pytest.raises(InstanceParseError) as excinfo:
            MechanismSerializer.load(payload)
        assert excinfo.value.field == 'menu'

    def test_unknown_kernel(self):
        payload = {'items': 1, 'kernel': 'cosine', 'menu': [{'allocation': [0.0], 'price': 0.0}]}
        with pytest.raises(InstanceParseError) as excinfo:
            MechanismSerializer.load(payload)
        assert excinfo.value.field == 'kernel'
