"""JSON form of finite transforms."""
from __future__ import annotations

from typing import Any, Mapping

import numpy as np

from gcfkit.core.kernels import get_kernel
from gcfkit.core.models import Box, FiniteGCF
from gcfkit.exceptions import InstanceParseError
from gcfkit.serializers import BOX_SCHEMA, NUMBER_MATRIX, NUMBER_VECTOR, PayloadSerializer, floats


class BoxSerializer(PayloadSerializer[Box]):
    schema = BOX_SCHEMA

    @classmethod
    def to_representation(cls, instance: Box) -> dict:
        return instance.to_dict()

    @classmethod
    def to_internal_value(cls, payload: Mapping[str, Any]) -> Box:
        return Box.from_dict(payload)


class FiniteGCFSerializer(PayloadSerializer[FiniteGCF]):
    """``{dim, kernel_kind, support, potentials, domain}`` plus the support box.

    ``kernel_transposed`` marks functions produced by conjugation, whose kernel
    arguments are swapped; custom kernels are looked up by registered name.
    """

    schema = {
        'type': 'object',
        'properties': {
            'dim': {'type': 'integer', 'minimum': 1},
            'kernel_kind': {'type': 'string', 'minLength': 1},
            'kernel_transposed': {'type': 'boolean'},
            'support': NUMBER_MATRIX,
            'potentials': NUMBER_VECTOR,
            'domain': BOX_SCHEMA,
            'support_box': BOX_SCHEMA,
        },
        'required': ['dim', 'kernel_kind', 'support', 'potentials', 'domain'],
        'additionalProperties': False,
    }

    @classmethod
    def to_representation(cls, instance: FiniteGCF) -> dict:
        return {
            'dim': instance.dim,
            'kernel_kind': instance.kernel.name,
            'kernel_transposed': instance.kernel.transposed_kind,
            'support': floats(instance.support),
            'potentials': floats(instance.potentials),
            'domain': instance.domain.to_dict(),
            'support_box': instance.support_box.to_dict(),
        }

    @classmethod
    def to_internal_value(cls, payload: Mapping[str, Any]) -> FiniteGCF:
        domain = Box.from_dict(payload['domain'])
        if domain.dim != payload['dim']:
            raise InstanceParseError('dim', f"dim {payload['dim']} does not match the domain")
        support = np.asarray(payload['support'], dtype=float)
        support_box = Box.from_dict(payload['support_box']) if 'support_box' in payload else None
        transposed = payload.get('kernel_transposed', False)
        y_box = support_box or domain
        if transposed:
            kernel = get_kernel(payload['kernel_kind'], y_box, domain).transposed()
        else:
            kernel = get_kernel(payload['kernel_kind'], domain, y_box)
        return FiniteGCF(support, np.asarray(payload['potentials'], dtype=float), kernel, domain, support_box)
