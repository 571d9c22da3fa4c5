from .box import Box
from .temperature import Temperature
from .finite_gcf import FiniteGCF
from .lean_report import LeanReport

__all__ = ['Box', 'Temperature', 'FiniteGCF', 'LeanReport']
