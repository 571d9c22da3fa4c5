"""Menus of (allocation, price) pairs and the payment anchor."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from gcfkit.core.kernels import BaseKernel, BilinearKernel
from gcfkit.core.models import Box, FiniteGCF
from gcfkit.exceptions import DimensionMismatchError, InputError

ALLOCATION_TOLERANCE = 1e-12


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Menu:
    """Entries ``(allocations[i], prices[i])`` offered to a buyer of type ``y``.

    ``kernel`` is the surplus ``Phi(x, y)`` with the allocation first. With
    ``includes_zero`` entry 0 is the zero allocation at price 0 and training never
    moves it, so the indirect utility is nonnegative.
    """

    allocations: np.ndarray
    prices: np.ndarray
    kernel: Optional[BaseKernel] = None
    type_box: Optional[Box] = None
    includes_zero: bool = True
    _gcf: Optional[FiniteGCF] = field(default=None, init=False, repr=False)

    def __post_init__(self) -> None:
        allocations = np.array(self.allocations, dtype=float)
        if allocations.ndim == 1:
            allocations = allocations.reshape(-1, 1)
        prices = np.array(self.prices, dtype=float).reshape(-1)
        if allocations.shape[0] < 1:
            raise InputError('a menu needs at least one entry')
        if prices.size != allocations.shape[0]:
            raise InputError(f'{prices.size} prices for {allocations.shape[0]} allocations')
        if not (np.all(np.isfinite(allocations)) and np.all(np.isfinite(prices))):
            raise InputError('allocations and prices must be finite')
        if np.any(allocations < -ALLOCATION_TOLERANCE) or np.any(allocations > 1 + ALLOCATION_TOLERANCE):
            raise InputError('allocation probabilities must lie in [0, 1]')
        if self.includes_zero and (np.any(allocations[0] != 0.0) or prices[0] != 0.0):
            raise InputError('entry 0 must be the zero allocation at price 0')

        items = allocations.shape[1]
        type_box = self.type_box or Box.unit(items)
        if type_box.dim != items:
            raise DimensionMismatchError(items, type_box.dim, what='type box')
        kernel = self.kernel or BilinearKernel.for_boxes(Box.unit(items), type_box)

        object.__setattr__(self, 'allocations', _readonly(np.clip(allocations, 0.0, 1.0)))
        object.__setattr__(self, 'prices', _readonly(prices))
        object.__setattr__(self, 'type_box', type_box)
        object.__setattr__(self, 'kernel', kernel)
        object.__setattr__(
            self,
            '_gcf',
            FiniteGCF(self.allocations, self.prices, kernel.transposed(), type_box, Box.unit(items)),
        )

    @classmethod
    def zero(cls, items: int, **kwargs) -> 'Menu':
        """The menu that only offers to walk away."""
        return cls(np.zeros((1, items)), np.zeros(1), **kwargs)

    @classmethod
    def from_flat(cls, params: np.ndarray, items: int, **kwargs) -> 'Menu':
        """Inverse of :meth:`flatten`: allocations row-major, then prices."""
        params = np.asarray(params, dtype=float)
        size = params.size // (items + 1)
        return cls(params[:size * items].reshape(size, items), params[size * items:], **kwargs)

    @property
    def items(self) -> int:
        return int(self.allocations.shape[1])

    @property
    def size(self) -> int:
        return int(self.allocations.shape[0])

    @property
    def utility(self) -> FiniteGCF:
        """Indirect utility ``v(y) = max_i Phi(x_i, y) - t_i`` as a finite transform on the type box."""
        return self._gcf

    def flatten(self) -> np.ndarray:
        return np.concatenate([self.allocations.reshape(-1), self.prices])

    def frozen_mask(self) -> np.ndarray:
        """Flat mask of the coordinates training must not move."""
        mask = np.zeros((self.size, self.items + 1), dtype=bool)
        if self.includes_zero:
            mask[0] = True
        return np.concatenate([mask[:, :-1].reshape(-1), mask[:, -1]])

    def allocation_mask(self) -> np.ndarray:
        """Flat mask of the allocation coordinates (clamped into [0, 1])."""
        return np.concatenate([np.ones(self.size * self.items, dtype=bool), np.zeros(self.size, dtype=bool)])

    def with_entries(self, allocations, prices) -> 'Menu':
        return Menu(allocations, prices, self.kernel, self.type_box, self.includes_zero)

    def __repr__(self) -> str:
        return f'Menu(items={self.items}, size={self.size}, kernel={self.kernel.name!r})'


@dataclass(frozen=True, eq=False)
class Anchor:
    """Base type ``y0`` the payment integral starts from."""

    y0: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, 'y0', _readonly(np.array(self.y0, dtype=float).reshape(-1)))

    @classmethod
    def origin(cls, items: int) -> 'Anchor':
        return cls(np.zeros(items))

    def check(self, box: Box) -> np.ndarray:
        if self.y0.size != box.dim:
            raise DimensionMismatchError(box.dim, self.y0.size, what='anchor')
        if not box.contains(self.y0):
            raise InputError('the anchor type lies outside the type box')
        return self.y0
