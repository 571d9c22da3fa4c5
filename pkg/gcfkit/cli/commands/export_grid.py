"""``gcfkit export-grid``: tabulate a saved mechanism over the type box."""
from __future__ import annotations

from pathlib import Path
from typing import List, Optional

import click

from gcfkit.auction.serializers import MechanismSerializer
from gcfkit.auction.services import write_grid_csv
from gcfkit.cli.config import ExportGridRunConfig
from gcfkit.cli.runs import run_command
from gcfkit.exceptions import ConfigError

from .options import common_options


def _run(config: ExportGridRunConfig, out_dir: Path, outputs: List[Path]) -> None:
    if config.mechanism is None:
        raise ConfigError('a mechanism file is required')
    menu = MechanismSerializer.read(config.mechanism)
    path = write_grid_csv(menu, config.resolution, out_dir / 'grid.csv')
    outputs.append(path)
    click.echo(f'{config.resolution ** menu.items} rows written to {path}')


@click.command('export-grid')
@click.argument('mechanism', required=False, type=click.Path(dir_okay=False, path_type=Path))
@click.option('--resolution', type=int, default=None, help='Grid points per axis (default 64).')
@common_options
@click.pass_context
def export_grid_command(
    ctx: click.Context,
    mechanism: Optional[Path],
    resolution: Optional[int],
    seed: Optional[int],
    out: Optional[Path],
    threads: Optional[int],
    config_file: Optional[Path],
) -> None:
    """Write grid.csv with (y, v, t, a) rows for the mechanism in MECHANISM."""
    flags = dict(mechanism=mechanism, resolution=resolution, seed=seed, out=out, threads=threads)
    run_command(ctx, 'export-grid', ExportGridRunConfig, config_file, flags, _run)
