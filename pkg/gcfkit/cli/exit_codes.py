"""Exit status and one-line message for every error a command can surface."""
from __future__ import annotations

from typing import Optional

from pydantic import ValidationError as ConfigValidationError

from gcfkit.exceptions import ConfigError, GCFKitError, NumericalError, ValidationFailure

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_ABORT = 3
EXIT_VALIDATION_FAILURE = 4

# First match wins, so subclasses come before their bases
EXIT_CODES = (
    (ValidationFailure, EXIT_VALIDATION_FAILURE),
    (NumericalError, EXIT_NUMERICAL_ABORT),
    (ConfigError, EXIT_CONFIG_ERROR),
    (ConfigValidationError, EXIT_CONFIG_ERROR),
    (GCFKitError, EXIT_CONFIG_ERROR),
)


def exit_code_for(exc: BaseException) -> Optional[int]:
    """``None`` for exceptions that are bugs rather than user-facing failures."""
    for exc_type, code in EXIT_CODES:
        if isinstance(exc, exc_type):
            return code
    return None


def error_message(exc: BaseException) -> str:
    if isinstance(exc, ConfigValidationError):
        parts = []
        for error in exc.errors():
            location = '.'.join(str(part) for part in error['loc']) or '<root>'
            parts.append(f"{location}: {error['msg']}")
        return 'invalid config: ' + '; '.join(parts)
    if isinstance(exc, ConfigError):
        return f'invalid input: {exc}'
    if isinstance(exc, NumericalError):
        return f'numerical abort: {exc}'
    if isinstance(exc, ValidationFailure):
        return f'validation failed: {exc}'
    return str(exc)


__all__ = [
    'EXIT_OK', 'EXIT_CONFIG_ERROR', 'EXIT_NUMERICAL_ABORT', 'EXIT_VALIDATION_FAILURE',
    'exit_code_for', 'error_message',
]
