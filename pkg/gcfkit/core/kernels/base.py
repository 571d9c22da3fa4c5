"""Base surplus kernel interface.

A kernel is the bivariate surplus ``Phi(x, y)``. Every method is vectorised over
leading axes: ``x`` and ``y`` broadcast against each other and the trailing axis
holds coordinates.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from gcfkit.exceptions import DimensionMismatchError

# Elements per temporary array in the chunked default reductions
_CHUNK_ELEMENTS = 4_000_000


class BaseKernel(ABC):
    """Abstract surplus kernel with analytic partial gradients."""

    kind: str = 'abstract'

    def __init__(
        self,
        *,
        lipschitz: float,
        semiconvexity: float = 0.0,
        dim_x: Optional[int] = None,
        dim_y: Optional[int] = None,
        name: Optional[str] = None,
    ):
        if lipschitz < 0 or semiconvexity < 0:
            raise ValueError('lipschitz and semiconvexity constants must be nonnegative')
        self.lipschitz = float(lipschitz)
        self.semiconvexity = float(semiconvexity)
        self.dim_x = dim_x
        self.dim_y = dim_y
        self.name = name or self.kind

    @abstractmethod
    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Return ``Phi(x, y)``; shape is the broadcast of the leading axes."""

    @abstractmethod
    def grad_x(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Return the partial gradient in ``x``."""

    @abstractmethod
    def grad_y(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Return the partial gradient in ``y``."""

    def __call__(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.evaluate(x, y)

    @property
    def transposed_kind(self) -> bool:
        return False

    @property
    def base_kernel(self) -> 'BaseKernel':
        return self

    def check_dims(self, dim_x: int, dim_y: int) -> None:
        if self.dim_x is not None and dim_x != self.dim_x:
            raise DimensionMismatchError(self.dim_x, dim_x, what=f'{self.name} x argument')
        if self.dim_y is not None and dim_y != self.dim_y:
            raise DimensionMismatchError(self.dim_y, dim_y, what=f'{self.name} y argument')

    def _row_chunk(self, cols: int, width: int) -> int:
        return max(1, _CHUNK_ELEMENTS // max(1, cols * width))

    def pairwise(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Matrix ``M[p, i] = Phi(xs[p], ys[i])``."""
        xs = np.atleast_2d(xs)
        ys = np.atleast_2d(ys)
        out = np.empty((xs.shape[0], ys.shape[0]))
        step = self._row_chunk(ys.shape[0], max(xs.shape[1], ys.shape[1]))
        for start in range(0, xs.shape[0], step):
            block = xs[start:start + step]
            out[start:start + step] = self.evaluate(block[:, None, :], ys[None, :, :])
        return out

    def weighted_grad_x(self, xs: np.ndarray, ys: np.ndarray, weights: np.ndarray) -> np.ndarray:
        """``G[p] = sum_i weights[p, i] * grad_x Phi(xs[p], ys[i])``."""
        xs = np.atleast_2d(xs)
        ys = np.atleast_2d(ys)
        out = np.empty((xs.shape[0], xs.shape[1]))
        step = self._row_chunk(ys.shape[0], xs.shape[1])
        for start in range(0, xs.shape[0], step):
            block = xs[start:start + step]
            grads = self.grad_x(block[:, None, :], ys[None, :, :])
            out[start:start + step] = np.einsum('pi,pin->pn', weights[start:start + step], grads)
        return out

    def weighted_grad_y(self, xs: np.ndarray, ys: np.ndarray, weights: np.ndarray) -> np.ndarray:
        """``H[i] = sum_p weights[p, i] * grad_y Phi(xs[p], ys[i])``."""
        xs = np.atleast_2d(xs)
        ys = np.atleast_2d(ys)
        out = np.zeros((ys.shape[0], ys.shape[1]))
        step = self._row_chunk(ys.shape[0], ys.shape[1])
        for start in range(0, xs.shape[0], step):
            block = xs[start:start + step]
            grads = self.grad_y(block[:, None, :], ys[None, :, :])
            out += np.einsum('pi,pin->in', weights[start:start + step], grads)
        return out

    def transposed(self) -> 'BaseKernel':
        """View with the roles of the two arguments swapped."""
        return TransposedKernel(self)

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'name': self.name,
            'lipschitz': self.lipschitz,
            'semiconvexity': self.semiconvexity,
        }

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, lipschitz={self.lipschitz:g}, semiconvexity={self.semiconvexity:g})"


class TransposedKernel(BaseKernel):
    """``Psi(a, b) = Phi(b, a)`` for an underlying kernel ``Phi``."""

    def __init__(self, base: BaseKernel):
        super().__init__(
            lipschitz=base.lipschitz,
            semiconvexity=base.semiconvexity,
            dim_x=base.dim_y,
            dim_y=base.dim_x,
            name=base.name,
        )
        self._base = base
        self.kind = base.kind

    @property
    def transposed_kind(self) -> bool:
        return True

    @property
    def base_kernel(self) -> BaseKernel:
        return self._base

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self._base.evaluate(y, x)

    def grad_x(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self._base.grad_y(y, x)

    def grad_y(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self._base.grad_x(y, x)

    def pairwise(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return self._base.pairwise(ys, xs).T

    def weighted_grad_x(self, xs: np.ndarray, ys: np.ndarray, weights: np.ndarray) -> np.ndarray:
        return self._base.weighted_grad_y(ys, xs, np.asarray(weights).T)

    def weighted_grad_y(self, xs: np.ndarray, ys: np.ndarray, weights: np.ndarray) -> np.ndarray:
        return self._base.weighted_grad_x(ys, xs, np.asarray(weights).T)

    def transposed(self) -> BaseKernel:
        return self._base

    def to_dict(self) -> dict:
        payload = self._base.to_dict()
        payload['transposed'] = True
        return payload
