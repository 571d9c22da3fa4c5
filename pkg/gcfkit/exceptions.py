"""Exception hierarchy shared by every gcfkit module."""
from __future__ import annotations

from typing import Optional


class GCFKitError(Exception):
    """Base exception for the toolkit."""
    pass


class InputError(GCFKitError, ValueError):
    """Arguments violate an operation's preconditions."""
    pass


class DimensionMismatchError(InputError):
    """A point, box or kernel disagree on dimension."""

    def __init__(self, expected: int, actual: int, what: str = 'point'):
        self.expected = expected
        self.actual = actual
        self.what = what
        super().__init__(f"{what} has dimension {actual}, expected {expected}")


class EmptyGridError(InputError):
    """A conjugation or leanness grid has no points."""
    pass


class InvalidMeasureError(InputError):
    """Weights are negative, mismatched in length or do not sum to one."""
    pass


class ResourceLimitError(GCFKitError):
    """A construction would exceed a configured size cap."""

    def __init__(self, requested: int, limit: int, what: str = 'centers'):
        self.requested = requested
        self.limit = limit
        super().__init__(f"{requested} {what} requested, limit is {limit}")


class UnsupportedKernelError(GCFKitError):
    """The operation is only defined for a different kernel kind."""

    def __init__(self, kind: str, required: str):
        self.kind = kind
        self.required = required
        super().__init__(f"kernel kind '{kind}' is not supported here (requires '{required}')")


class KernelValidationError(GCFKitError):
    """User-supplied gradients disagree with finite differences of the kernel."""

    def __init__(self, name: str, relative_error: float, tolerance: float):
        self.name = name
        self.relative_error = relative_error
        self.tolerance = tolerance
        super().__init__(
            f"kernel '{name}' gradient check failed: relative error {relative_error:.3e} > {tolerance:.1e}"
        )


class NumericalError(GCFKitError):
    """A computation produced NaN/Inf or diverged."""
    pass


class NonFiniteGradientError(NumericalError):
    """Gradient handed to the optimizer contains NaN or Inf."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(f"non-finite gradient component {value!r} at index {index}")


class TrainingAbortedError(NumericalError):
    """Training objective became NaN; carries the stage diagnostic."""

    def __init__(self, stage: int, step: int, tau: float, reason: str = 'objective is NaN'):
        self.stage = stage
        self.step = step
        self.tau = tau
        super().__init__(f"training aborted at stage {stage}, step {step} (tau={tau:g}): {reason}")


class ConfigError(GCFKitError):
    """Invalid run configuration."""
    pass


class InstanceParseError(ConfigError):
    """An input file is malformed; names the offending field."""

    def __init__(self, field: Optional[str], message: str):
        self.field = field
        location = field or '<root>'
        super().__init__(f"{location}: {message}")


class ValidationFailure(GCFKitError):
    """A property suite reported at least one failing check."""

    def __init__(self, failed: list[str]):
        self.failed = failed
        super().__init__(f"{len(failed)} check(s) failed: {', '.join(failed)}")
