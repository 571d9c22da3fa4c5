"""JSON forms of transport instances and dual solutions."""
from __future__ import annotations

from typing import Any, Mapping

import numpy as np

from gcfkit.exceptions import InputError, InvalidMeasureError, InstanceParseError
from gcfkit.ot.models import DualSolution, SampleMeasure, TransportAssignment, TransportInstance
from gcfkit.serializers import NUMBER_MATRIX, NUMBER_VECTOR, PayloadSerializer, floats

MEASURE_SCHEMA = {
    'type': 'object',
    'properties': {
        'points': NUMBER_MATRIX,
        'weights': {'type': 'array', 'items': {'type': 'number', 'minimum': 0}, 'minItems': 1},
    },
    'required': ['points', 'weights'],
    'additionalProperties': False,
}


def _measure(payload: Mapping[str, Any], field: str) -> SampleMeasure:
    try:
        return SampleMeasure(np.asarray(payload['points'], dtype=float), np.asarray(payload['weights'], dtype=float))
    except (InvalidMeasureError, ValueError) as exc:
        raise InstanceParseError(field, str(exc)) from exc


class TransportInstanceSerializer(PayloadSerializer[TransportInstance]):
    """``{mu: {points, weights}, eta: {points, weights}, kernel}``."""

    schema = {
        'type': 'object',
        'properties': {
            'mu': MEASURE_SCHEMA,
            'eta': MEASURE_SCHEMA,
            'kernel': {'type': 'string', 'minLength': 1},
        },
        'required': ['mu', 'eta', 'kernel'],
        'additionalProperties': False,
    }

    @classmethod
    def to_representation(cls, instance: TransportInstance) -> dict:
        return {
            'mu': {'points': floats(instance.mu.points), 'weights': floats(instance.mu.weights)},
            'eta': {'points': floats(instance.eta.points), 'weights': floats(instance.eta.weights)},
            'kernel': instance.kernel_kind,
        }

    @classmethod
    def to_internal_value(cls, payload: Mapping[str, Any]) -> TransportInstance:
        mu = _measure(payload['mu'], 'mu')
        eta = _measure(payload['eta'], 'eta')
        if mu.dim != eta.dim:
            raise InstanceParseError('eta.points', f'dimension {eta.dim} differs from mu dimension {mu.dim}')
        return TransportInstance(mu=mu, eta=eta, kernel_kind=payload['kernel'])


class DualSolutionSerializer(PayloadSerializer[DualSolution]):
    """``{value, potentials, assignment}`` with solver bookkeeping alongside.

    Export only: the payload drops the measures, kernel and trace a
    :class:`DualSolution` is built from, so ``schema`` describes what
    ``to_representation`` writes and loading is refused.
    """

    schema = {
        'type': 'object',
        'properties': {
            'value': {'type': 'number'},
            'potentials': NUMBER_VECTOR,
            'support': NUMBER_MATRIX,
            'iterations': {'type': 'integer', 'minimum': 0},
            'converged': {'type': 'boolean'},
            'polished': {'type': 'boolean'},
            'assignment': {'type': 'array', 'items': {'type': 'integer', 'minimum': 0}},
            'assignment_objective': {'type': 'number'},
        },
        'required': ['value', 'potentials', 'support', 'iterations', 'converged', 'polished'],
        'dependentRequired': {'assignment': ['assignment_objective']},
        'additionalProperties': False,
    }

    @classmethod
    def to_representation(cls, instance: DualSolution, assignment: TransportAssignment | None = None) -> dict:
        payload = {
            'value': float(instance.value),
            'potentials': floats(instance.potential.potentials),
            'support': floats(instance.potential.support),
            'iterations': int(instance.iterations),
            'converged': bool(instance.converged),
            'polished': bool(instance.polished),
        }
        if assignment is not None:
            payload['assignment'] = [int(index) for index in assignment.indices]
            payload['assignment_objective'] = float(assignment.objective)
        return payload

    @classmethod
    def to_internal_value(cls, payload: Mapping[str, Any]) -> DualSolution:
        raise InputError('solution payloads are write-only; re-run the solver on the instance instead')
