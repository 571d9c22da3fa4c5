from .epsilon_net import EpsilonNet
from .reports import GradCheckReport, ValidationReport

__all__ = ['EpsilonNet', 'GradCheckReport', 'ValidationReport']
