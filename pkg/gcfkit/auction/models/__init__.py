from .config import DEFAULT_MENU_SIZES, TrainConfig, default_menu_size
from .menu import Anchor, Menu
from .report import MechanismReport, MenuUsage

__all__ = [
    'DEFAULT_MENU_SIZES', 'TrainConfig', 'default_menu_size', 'Anchor', 'Menu', 'MechanismReport', 'MenuUsage',
]
