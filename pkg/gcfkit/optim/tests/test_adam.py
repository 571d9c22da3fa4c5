"""Tests for the adaptive moment rule."""
import numpy as np
import pytest

from gcfkit.exceptions import DimensionMismatchError, NonFiniteGradientError
from gcfkit.optim.models import AdamConfig, OptState
from gcfkit.optim.services import step


class TestStep:
    def test_zero_gradient_leaves_parameters(self, rng):
        state = OptState.create(rng.uniform(size=5))
        updated = step(state, np.zeros(5))

        np.testing.assert_array_equal(updated.params, state.params)
        assert updated.step_count == 1

    def test_quadratic_bowl(self, rng):
        """Minimizing |p - p*|^2 from a random start gets within 1e-3 in 500 steps."""
        target = rng.uniform(-1.0, 1.0, size=4)
        state = OptState.create(rng.uniform(-1.0, 1.0, size=4), config=AdamConfig(learning_rate=0.05))
        for _ in range(500):
            state = step(state, 2.0 * (state.params - target), sense='minimize')

        assert np.linalg.norm(state.params - target) <= 1e-3

    def test_maximize_ascends(self):
        state = OptState.create([0.0, 0.0])
        updated = step(state, [1.0, -2.0], sense='maximize')

        assert updated.params[0] > 0.0
        assert updated.params[1] < 0.0

    def test_frozen_coordinates_never_move(self, rng):
        mask = np.array([True, False, False])
        state = OptState.create([0.25, 0.5, 0.75], frozen=mask)
        for _ in range(100):
            state = step(state, rng.standard_normal(3), sense='maximize')

        assert state.params[0] == 0.25
        assert state.m[0] == 0.0
        assert state.v[0] == 0.0
        assert state.params[1] != 0.5

    def test_second_moments_nonnegative(self, rng):
        state = OptState.create(np.zeros(6))
        for _ in range(20):
            state = step(state, rng.standard_normal(6))
        assert np.all(state.v >= 0.0)

    def test_deterministic(self, rng):
        gradients = rng.standard_normal((30, 3))

        def run():
            state = OptState.create([0.1, 0.2, 0.3])
            for gradient in gradients:
                state = step(state, gradient, sense='maximize')
            return state.params

        assert run().tobytes() == run().tobytes()

    @pytest.mark.parametrize('bad', [np.nan, np.inf, -np.inf])
    def test_non_finite_gradient_names_index(self, bad):
        state = OptState.create(np.zeros(4))
        with pytest.raises(NonFiniteGradientError) as excinfo:
            step(state, [0.0, 0.0, bad, 1.0])
        assert excinfo.value.index == 2

    def test_gradient_length_checked(self):
        with pytest.raises(DimensionMismatchError):
            step(OptState.create(np.zeros(3)), np.zeros(4))

    def test_config_rejects_unknown_keys(self):
        with pytest.raises(ValueError):
            AdamConfig(learning_rate=0.1, momentum=0.5)
