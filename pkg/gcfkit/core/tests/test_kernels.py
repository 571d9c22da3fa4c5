"""Tests for surplus kernels and the kernel registry."""
import numpy as np
import pytest

from gcfkit.core.kernels import (
    BilinearKernel,
    KernelService,
    NegativeSquaredDistanceKernel,
    finite_difference_error,
    get_kernel,
    register_kernel,
)
from gcfkit.core.models import Box
from gcfkit.exceptions import InputError, KernelValidationError


def _sine_value(x, y):
    return np.sum(np.sin(x * y), axis=-1)


def _sine_grad_x(x, y):
    return y * np.cos(x * y)


def _sine_grad_y(x, y):
    return x * np.cos(x * y)


class TestBilinearKernel:
    def setup_method(self):
        self.box = Box.unit(3)
        self.kernel = BilinearKernel.for_boxes(self.box, self.box)

    def test_constants(self):
        """On the unit cube the Lipschitz bound is sqrt(3) and there is no semiconvexity."""
        assert self.kernel.lipschitz == pytest.approx(np.sqrt(3.0))
        assert self.kernel.semiconvexity == 0.0

    def test_evaluate_is_inner_product(self, rng):
        x = rng.uniform(size=3)
        y = rng.uniform(size=3)
        assert self.kernel.evaluate(x, y) == pytest.approx(float(x @ y), abs=1e-15)

    def test_gradients_swap_arguments(self, rng):
        x = rng.uniform(size=3)
        y = rng.uniform(size=3)
        np.testing.assert_array_equal(self.kernel.grad_x(x, y), y)
        np.testing.assert_array_equal(self.kernel.grad_y(x, y), x)

    def test_gradients_match_finite_differences(self, rng):
        error = finite_difference_error(self.kernel, self.box, self.box, rng=rng, samples=16, step=1e-6)
        assert error <= 1e-5

    def test_pairwise_matches_broadcast(self, rng):
        xs = rng.uniform(size=(5, 3))
        ys = rng.uniform(size=(4, 3))
        np.testing.assert_allclose(
            self.kernel.pairwise(xs, ys), self.kernel.evaluate(xs[:, None, :], ys[None, :, :]), atol=1e-15
        )


class TestNegativeSquaredDistanceKernel:
    def setup_method(self):
        self.box = Box.unit(2)
        self.kernel = NegativeSquaredDistanceKernel.for_boxes(self.box, self.box)

    def test_constants(self):
        assert self.kernel.semiconvexity == 2.0
        assert self.kernel.lipschitz == pytest.approx(2.0 * np.sqrt(2.0))

    def test_gradients_match_finite_differences(self, rng):
        error = finite_difference_error(self.kernel, self.box, self.box, rng=rng, samples=16, step=1e-6)
        assert error <= 1e-5

    def test_weighted_gradients_match_generic_reduction(self, rng):
        """The closed-form weighted sums agree with the einsum defaults."""
        xs = rng.uniform(size=(6, 2))
        ys = rng.uniform(size=(3, 2))
        weights = rng.uniform(size=(6, 3))
        generic_x = np.einsum('pi,pin->pn', weights, self.kernel.grad_x(xs[:, None, :], ys[None, :, :]))
        generic_y = np.einsum('pi,pin->in', weights, self.kernel.grad_y(xs[:, None, :], ys[None, :, :]))

        np.testing.assert_allclose(self.kernel.weighted_grad_x(xs, ys, weights), generic_x, atol=1e-13)
        np.testing.assert_allclose(self.kernel.weighted_grad_y(xs, ys, weights), generic_y, atol=1e-13)


class TestTransposedKernel:
    def test_swaps_roles(self, rng):
        box = Box.unit(2)
        kernel = NegativeSquaredDistanceKernel.for_boxes(box, box)
        transposed = kernel.transposed()
        x = rng.uniform(size=2)
        y = rng.uniform(size=2)

        assert transposed.evaluate(y, x) == kernel.evaluate(x, y)
        np.testing.assert_array_equal(transposed.grad_x(y, x), kernel.grad_y(x, y))
        np.testing.assert_array_equal(transposed.grad_y(y, x), kernel.grad_x(x, y))
        assert transposed.transposed() is kernel
        assert transposed.to_dict()['transposed'] is True

    def test_pairwise_is_transpose(self, rng):
        box = Box.unit(2)
        kernel = BilinearKernel.for_boxes(box, box)
        xs = rng.uniform(size=(4, 2))
        ys = rng.uniform(size=(3, 2))
        np.testing.assert_array_equal(kernel.transposed().pairwise(ys, xs), kernel.pairwise(xs, ys).T)


class TestKernelRegistry:
    def teardown_method(self):
        KernelService.unregister('sine')

    def test_builtin_lookup(self):
        kernel = get_kernel('bilinear', Box.unit(2))
        assert isinstance(kernel, BilinearKernel)

    def test_unknown_kind_is_input_error(self):
        with pytest.raises(InputError):
            get_kernel('no-such-kernel', Box.unit(2))

    def test_register_validated_kernel(self):
        """Consistent gradients register and resolve by name."""
        box = Box.unit(2)
        kernel = register_kernel(
            'sine', _sine_value, _sine_grad_x, _sine_grad_y, x_box=box, y_box=box, lipschitz=2.0
        )

        assert get_kernel('sine', box) is kernel
        assert 'sine' in KernelService.registered_names()
        assert kernel.evaluate(np.array([0.5, 0.5]), np.array([1.0, 0.0])) == pytest.approx(np.sin(0.5))

    def test_register_rejects_wrong_gradient(self):
        box = Box.unit(2)
        with pytest.raises(KernelValidationError) as excinfo:
            register_kernel(
                'sine', _sine_value, lambda x, y: y, _sine_grad_y, x_box=box, y_box=box, lipschitz=2.0
            )

        assert excinfo.value.relative_error > 1e-5
        assert 'sine' not in KernelService.registered_names()

    def test_cannot_shadow_builtin(self):
        box = Box.unit(1)
        with pytest.raises(InputError):
            register_kernel('bilinear', _sine_value, _sine_grad_x, _sine_grad_y, x_box=box, y_box=box, lipschitz=1.0)
