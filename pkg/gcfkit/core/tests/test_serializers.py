"""Tests for the JSON form of finite transforms."""
import json

import numpy as np
import pytest

from gcfkit.core.serializers import FiniteGCFSerializer
from gcfkit.core.services import conjugate_on_grid, gcf_eval_many
from gcfkit.core.models import Box
from gcfkit.exceptions import InstanceParseError


class TestFiniteGCFSerializer:
    def test_round_trip_is_bit_faithful(self, rng, make_gcf):
        f = make_gcf(rng, size=9, dim=3, kind='negative-squared-distance')
        restored = FiniteGCFSerializer.loads(FiniteGCFSerializer.dumps(f))

        assert restored.support.tobytes() == f.support.tobytes()
        assert restored.potentials.tobytes() == f.potentials.tobytes()
        assert restored.domain == f.domain
        assert restored.kernel.kind == f.kernel.kind

    def test_payload_fields(self, rng, make_gcf):
        payload = FiniteGCFSerializer.to_representation(make_gcf(rng, size=3, dim=2))

        assert payload['dim'] == 2
        assert payload['kernel_kind'] == 'bilinear'
        assert len(payload['support']) == 3
        assert payload['domain'] == {'lower': [0.0, 0.0], 'upper': [1.0, 1.0]}

    def test_conjugate_round_trip(self, rng, make_gcf):
        """Transposed kernels survive serialization."""
        conjugate = conjugate_on_grid(make_gcf(rng, size=4, dim=2), Box.unit(2).grid(3))
        restored = FiniteGCFSerializer.loads(FiniteGCFSerializer.dumps(conjugate))
        ys = rng.uniform(size=(10, 2))

        assert restored.kernel.transposed_kind
        np.testing.assert_array_equal(gcf_eval_many(restored, ys), gcf_eval_many(conjugate, ys))

    def test_missing_field_is_named(self, rng, make_gcf):
        payload = FiniteGCFSerializer.to_representation(make_gcf(rng))
        del payload['potentials']

        with pytest.raises(InstanceParseError) as excinfo:
            FiniteGCFSerializer.load(payload)
        assert excinfo.value.field == 'potentials'

    def test_wrong_type_is_named(self, rng, make_gcf):
        payload = FiniteGCFSerializer.to_representation(make_gcf(rng))
        payload['domain']['lower'] = 'zero'

        with pytest.raises(InstanceParseError) as excinfo:
            FiniteGCFSerializer.load(payload)
        assert excinfo.value.field == 'domain.lower'

    def test_invalid_json(self):
        with pytest.raises(InstanceParseError):
            FiniteGCFSerializer.loads('{"dim": 2,')

    def test_dim_must_match_domain(self, rng, make_gcf):
        payload = json.loads(FiniteGCFSerializer.dumps(make_gcf(rng, dim=2)))
        payload['dim'] = 3

        with pytest.raises(InstanceParseError) as excinfo:
            FiniteGCFSerializer.load(payload)
        assert excinfo.value.field == 'dim'
