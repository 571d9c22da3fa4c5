"""Flags shared by every subcommand."""
from __future__ import annotations

from pathlib import Path

import click

COMMON_OPTIONS = (
    click.option('--seed', type=int, default=None, help='Seed for every random stream of the run.'),
    click.option(
        '--out', type=click.Path(file_okay=False, path_type=Path), default=None,
        help='Output directory (default: runs/<command>).',
    ),
    click.option('--threads', type=click.IntRange(min=1), default=None, help='Worker threads for chunked reductions.'),
    click.option(
        '--config', 'config_file', type=click.Path(dir_okay=False, path_type=Path), default=None,
        help='Flat JSON config; flags override its values.',
    ),
)


def common_options(func):
    for option in reversed(COMMON_OPTIONS):
        func = option(func)
    return func
