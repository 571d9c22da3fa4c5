"""Shared base for JSON payload serializers.

Each serializer pairs a JSON schema with a conversion in both directions:
``to_representation`` turns a domain object into plain JSON types and
``to_internal_value`` builds the domain object from a payload that already passed
schema validation.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, ClassVar, Generic, Mapping, TypeVar

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from gcfkit.exceptions import InstanceParseError

T = TypeVar('T')

NUMBER_VECTOR = {'type': 'array', 'items': {'type': 'number'}, 'minItems': 1}
NUMBER_MATRIX = {'type': 'array', 'items': NUMBER_VECTOR, 'minItems': 1}
BOX_SCHEMA = {
    'type': 'object',
    'properties': {'lower': NUMBER_VECTOR, 'upper': NUMBER_VECTOR},
    'required': ['lower', 'upper'],
}


def _error_field(error) -> str | None:
    path = [str(part) for part in error.absolute_path]
    if error.validator == 'required':
        missing = [name for name in error.validator_value if name not in error.instance]
        if missing:
            path.append(missing[0])
    return '.'.join(path) or None


class PayloadSerializer(Generic[T]):
    """Validate and convert one JSON payload type."""

    schema: ClassVar[Mapping[str, Any]] = {'type': 'object'}

    @classmethod
    def validate(cls, payload: Any) -> Mapping[str, Any]:
        """Raise :class:`InstanceParseError` naming the first offending field."""
        error = best_match(Draft202012Validator(cls.schema).iter_errors(payload))
        if error is not None:
            raise InstanceParseError(_error_field(error), error.message)
        return payload

    @classmethod
    def to_representation(cls, instance: T) -> dict:
        raise NotImplementedError

    @classmethod
    def to_internal_value(cls, payload: Mapping[str, Any]) -> T:
        raise NotImplementedError

    @classmethod
    def load(cls, payload: Any) -> T:
        return cls.to_internal_value(cls.validate(payload))

    @classmethod
    def dumps(cls, instance: T, **kwargs: Any) -> str:
        return json.dumps(cls.to_representation(instance), **kwargs)

    @classmethod
    def loads(cls, text: str) -> T:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InstanceParseError(None, f'invalid JSON: {exc.msg} (line {exc.lineno})') from exc
        return cls.load(payload)

    @classmethod
    def read(cls, path: Path) -> T:
        path = Path(path)
        if not path.is_file():
            raise InstanceParseError(None, f'file not found: {path}')
        return cls.loads(path.read_text())


def floats(values) -> list:
    """Nested lists of Python floats; ``repr`` keeps every finite double exact."""
    if hasattr(values, 'tolist'):
        values = values.tolist()
    if isinstance(values, (list, tuple)):
        return [floats(value) for value in values]
    return float(values)
