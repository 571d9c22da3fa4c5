from .instance import TransportInstance
from .measure import SampleMeasure
from .solution import DualSolution, DualSolveConfig, TransportAssignment

__all__ = ['TransportInstance', 'SampleMeasure', 'DualSolution', 'DualSolveConfig', 'TransportAssignment']
