"""The ``gcfkit`` command group."""
from __future__ import annotations

import click

from gcfkit import __version__, project_logging
from gcfkit.config import settings

from .commands import auction_command, export_grid_command, ot_command, validate_command


@click.group()
@click.version_option(__version__, prog_name='gcfkit')
def main() -> None:
    """Generalized-convex function toolkit: auctions, transport and checks."""
    project_logging.configure_logging(settings.LOGGING)


main.add_command(auction_command)
main.add_command(ot_command)
main.add_command(validate_command)
main.add_command(export_grid_command)
