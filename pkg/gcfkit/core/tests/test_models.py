"""Tests for boxes, temperatures and finite transform values."""
import math

import numpy as np
import pytest

from gcfkit.core.kernels import BilinearKernel
from gcfkit.core.models import Box, FiniteGCF, Temperature
from gcfkit.exceptions import DimensionMismatchError, InputError


class TestBox:
    def test_rejects_inverted_bounds(self):
        """Lower bounds may not exceed upper bounds."""
        with pytest.raises(InputError):
            Box([0.0, 1.0], [1.0, 0.5])

    def test_rejects_mismatched_bounds(self):
        with pytest.raises(DimensionMismatchError):
            Box([0.0, 0.0], [1.0])

    def test_grid_includes_faces(self):
        """A resolution-3 grid on [0,1]^2 has 9 points including every corner."""
        grid = Box.unit(2).grid(3)

        assert grid.shape == (9, 2)
        for corner in Box.unit(2).vertices():
            assert any(np.array_equal(corner, point) for point in grid)

    def test_single_point_grid_is_midpoint(self):
        grid = Box([0.0, 2.0], [1.0, 4.0]).grid(1)
        np.testing.assert_array_equal(grid, [[0.5, 3.0]])

    def test_vertices_count(self):
        assert Box.unit(3).vertices().shape == (8, 3)

    def test_max_norm_of_unit_box(self):
        assert Box.unit(4).max_norm() == pytest.approx(2.0)

    def test_round_trip_dict(self):
        box = Box([-1.0, 0.25], [0.5, 3.0])
        assert Box.from_dict(box.to_dict()) == box

    def test_bounds_are_read_only(self):
        box = Box.unit(2)
        with pytest.raises(ValueError):
            box.lower[0] = 5.0


class TestTemperature:
    @pytest.mark.parametrize('tau', [0.0, -1.0, float('inf'), float('nan')])
    def test_rejects_invalid(self, tau):
        """Temperatures must be positive and finite."""
        with pytest.raises(InputError):
            Temperature(tau)

    def test_smoothing_bound(self):
        assert Temperature(1000.0).smoothing_bound(1024) == pytest.approx(math.log(1024) / 1000)


class TestFiniteGCF:
    def setup_method(self):
        self.box = Box.unit(2)
        self.kernel = BilinearKernel.for_boxes(self.box, self.box)

    def test_requires_one_support_point(self):
        with pytest.raises(InputError):
            FiniteGCF(np.empty((0, 2)), np.empty(0), self.kernel, self.box)

    def test_potential_length_must_match(self):
        with pytest.raises(InputError):
            FiniteGCF([[0.1, 0.2], [0.3, 0.4]], [0.0], self.kernel, self.box)

    def test_support_must_lie_in_box(self):
        with pytest.raises(InputError):
            FiniteGCF([[0.1, 1.5]], [0.0], self.kernel, self.box)

    def test_kernel_dimension_checked(self):
        """A kernel built for [0,1]^2 refuses a three-dimensional domain."""
        with pytest.raises(DimensionMismatchError):
            FiniteGCF([[0.1, 0.2, 0.3]], [0.0], self.kernel, Box.unit(3))

    def test_values_are_immutable(self):
        f = FiniteGCF([[0.1, 0.2]], [0.5], self.kernel, self.box)
        with pytest.raises(ValueError):
            f.potentials[0] = 1.0

    def test_with_potentials_keeps_support(self):
        f = FiniteGCF([[0.1, 0.2], [0.3, 0.4]], [0.0, 1.0], self.kernel, self.box)
        g = f.with_potentials([2.0, 3.0])

        np.testing.assert_array_equal(g.support, f.support)
        np.testing.assert_array_equal(g.potentials, [2.0, 3.0])
        np.testing.assert_array_equal(f.potentials, [0.0, 1.0])
