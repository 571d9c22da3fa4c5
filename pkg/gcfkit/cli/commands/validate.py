"""``gcfkit validate``: run a property suite with fixed seeds."""
from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional

import click

from gcfkit.approx.services import SUITE_NAMES, run_suite
from gcfkit.cli.config import ValidateRunConfig
from gcfkit.cli.runs import run_command
from gcfkit.exceptions import ValidationFailure

from .options import common_options


def _run(config: ValidateRunConfig, out_dir: Path, outputs: List[Path]) -> None:
    reports = run_suite(config.suite, seed=config.seed, threads=config.threads)
    failed = [report.check_name for report in reports if not report.passed]

    report_path = out_dir / 'validation.json'
    payload = {
        'suite': config.suite,
        'seed': config.seed,
        'pass': not failed,
        'reports': [report.to_dict() for report in reports],
    }
    report_path.write_text(json.dumps(payload, indent=2))
    outputs.append(report_path)
    for report in reports:
        click.echo(f"{'PASS' if report.passed else 'FAIL'} {report.check_name} max_error={report.max_error:.3e}")
    if failed:
        raise ValidationFailure(failed)


@click.command('validate')
@click.argument('suite', type=click.Choice(SUITE_NAMES), required=False)
@common_options
@click.pass_context
def validate_command(
    ctx: click.Context,
    suite: Optional[str],
    seed: Optional[int],
    out: Optional[Path],
    threads: Optional[int],
    config_file: Optional[Path],
) -> None:
    """Run SUITE (default: all) and exit 4 if any check fails."""
    flags = dict(suite=suite, seed=seed, out=out, threads=threads)
    run_command(ctx, 'validate', ValidateRunConfig, config_file, flags, _run)
