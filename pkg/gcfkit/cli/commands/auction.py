"""``gcfkit auction``: train a menu mechanism and report its revenue."""
from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional

import click

from gcfkit.auction.serializers import MechanismSerializer
from gcfkit.auction.services import train_auction, write_grid_csv
from gcfkit.cli.config import AuctionRunConfig
from gcfkit.cli.runs import run_command
from gcfkit.optim.services import TraceRecorder

from .options import common_options


def _run(config: AuctionRunConfig, out_dir: Path, outputs: List[Path]) -> None:
    trace = TraceRecorder()
    try:
        menu, report = train_auction(config.train_config(), trace=trace, threads=config.worker_threads())
    finally:
        outputs.append(trace.write_csv(out_dir / 'trace.csv'))

    mechanism_path = out_dir / 'mechanism.json'
    mechanism_path.write_text(json.dumps(MechanismSerializer.to_representation(menu, report), indent=2))
    outputs.append(mechanism_path)
    report_path = out_dir / 'report.json'
    report_path.write_text(json.dumps(report.to_dict(), indent=2))
    outputs.append(report_path)
    if config.export_grid:
        outputs.append(write_grid_csv(menu, config.export_grid, out_dir / 'grid.csv'))
    click.echo(report.table_row())


@click.command('auction')
@click.option('--items', type=int, default=None, help='Number of items for sale.')
@click.option('--menu-size', type=int, default=None, help='Menu entries including the zero entry.')
@click.option('--export-grid', type=int, default=None, metavar='RESOLUTION', help='Also write grid.csv at this resolution.')
@common_options
@click.pass_context
def auction_command(
    ctx: click.Context,
    items: Optional[int],
    menu_size: Optional[int],
    export_grid: Optional[int],
    seed: Optional[int],
    out: Optional[Path],
    threads: Optional[int],
    config_file: Optional[Path],
) -> None:
    """Train a menu against uniform buyer types on the unit cube."""
    flags = dict(items=items, menu_size=menu_size, export_grid=export_grid, seed=seed, out=out, threads=threads)
    run_command(ctx, 'auction', AuctionRunConfig, config_file, flags, _run)
