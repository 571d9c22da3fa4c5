"""Subcommands registered on the ``gcfkit`` group."""
from .auction import auction_command
from .export_grid import export_grid_command
from .ot import ot_command
from .validate import validate_command

__all__ = ['auction_command', 'export_grid_command', 'ot_command', 'validate_command']
