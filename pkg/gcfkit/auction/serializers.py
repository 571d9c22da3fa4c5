"""JSON form of menu mechanisms."""
from __future__ import annotations

from typing import Any, Mapping, Optional

import numpy as np

from gcfkit.auction.models import MechanismReport, Menu
from gcfkit.core.kernels import get_kernel
from gcfkit.core.models import Box
from gcfkit.exceptions import InputError, InstanceParseError
from gcfkit.serializers import NUMBER_VECTOR, PayloadSerializer, floats

ENTRY_SCHEMA = {
    'type': 'object',
    'properties': {
        'allocation': {**NUMBER_VECTOR, 'items': {'type': 'number', 'minimum': 0, 'maximum': 1}},
        'price': {'type': 'number'},
    },
    'required': ['allocation', 'price'],
    'additionalProperties': False,
}


class MechanismSerializer(PayloadSerializer[Menu]):
    """``{items, kernel, menu: [{allocation, price}], report}``; the report is write-only."""

    schema = {
        'type': 'object',
        'properties': {
            'items': {'type': 'integer', 'minimum': 1},
            'kernel': {'type': 'string', 'minLength': 1},
            'includes_zero': {'type': 'boolean'},
            'menu': {'type': 'array', 'items': ENTRY_SCHEMA, 'minItems': 1},
            'report': {'type': ['object', 'null']},
        },
        'required': ['items', 'menu'],
        'additionalProperties': False,
    }

    @classmethod
    def to_representation(cls, instance: Menu, report: Optional[MechanismReport] = None) -> dict:
        return {
            'items': instance.items,
            'kernel': instance.kernel.name,
            'includes_zero': instance.includes_zero,
            'menu': [
                {'allocation': floats(x), 'price': float(t)}
                for x, t in zip(instance.allocations, instance.prices)
            ],
            'report': report.to_dict() if report is not None else None,
        }

    @classmethod
    def to_internal_value(cls, payload: Mapping[str, Any]) -> Menu:
        items = payload['items']
        allocations = [entry['allocation'] for entry in payload['menu']]
        for index, allocation in enumerate(allocations):
            if len(allocation) != items:
                raise InstanceParseError(f'menu.{index}.allocation', f'expected {items} components, got {len(allocation)}')
        box = Box.unit(items)
        try:
            kernel = get_kernel(payload.get('kernel', 'bilinear'), box, box)
        except InputError as exc:
            raise InstanceParseError('kernel', str(exc)) from exc
        try:
            return Menu(
                np.asarray(allocations, dtype=float),
                np.asarray([entry['price'] for entry in payload['menu']], dtype=float),
                kernel=kernel,
                includes_zero=payload.get('includes_zero', True),
            )
        except InputError as exc:
            raise InstanceParseError('menu', str(exc)) from exc
