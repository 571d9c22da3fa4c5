from .adam import step
from .projection import project_box
from .schedule import anneal, geometric_schedule
from .subgradient import AveragedSubgradient
from .trace import TraceRecorder

__all__ = [
    'step', 'project_box', 'anneal', 'geometric_schedule', 'AveragedSubgradient', 'TraceRecorder',
]
