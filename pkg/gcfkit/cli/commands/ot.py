"""``gcfkit ot``: solve the transport dual of an instance file."""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import List, Optional

import click

from gcfkit.cli.config import OtRunConfig
from gcfkit.cli.runs import run_command
from gcfkit.exceptions import ConfigError
from gcfkit.optim.services import TraceRecorder
from gcfkit.ot.serializers import DualSolutionSerializer, TransportInstanceSerializer
from gcfkit.ot.services import solve_dual, transport_assignment

from .options import common_options


def _write_assignment(path: Path, indices) -> Path:
    with path.open('w', newline='') as handle:
        writer = csv.writer(handle)
        writer.writerow(['source', 'target'])
        for source, target in enumerate(indices):
            writer.writerow([source, int(target)])
    return path


def _run(config: OtRunConfig, out_dir: Path, outputs: List[Path]) -> None:
    if config.instance is None:
        raise ConfigError('an instance file is required')
    instance = TransportInstanceSerializer.read(config.instance)
    trace = TraceRecorder()
    solution = solve_dual(
        instance.mu, instance.eta, instance.kernel(), config.solve_config(), threads=config.worker_threads(), trace=trace
    )
    assignment = transport_assignment(solution)

    solution_path = out_dir / 'solution.json'
    solution_path.write_text(json.dumps(DualSolutionSerializer.to_representation(solution, assignment), indent=2))
    outputs.append(solution_path)
    outputs.append(_write_assignment(out_dir / 'assignment.csv', assignment.indices))
    outputs.append(trace.write_csv(out_dir / 'trace.csv'))
    click.echo(f'value={solution.value:.9f} iterations={solution.iterations} converged={solution.converged}')


@click.command('ot')
@click.argument('instance', required=False, type=click.Path(dir_okay=False, path_type=Path))
@common_options
@click.pass_context
def ot_command(
    ctx: click.Context,
    instance: Optional[Path],
    seed: Optional[int],
    out: Optional[Path],
    threads: Optional[int],
    config_file: Optional[Path],
) -> None:
    """Solve the Kantorovich dual of INSTANCE and write potentials and the assignment."""
    flags = dict(instance=instance, seed=seed, out=out, threads=threads)
    run_command(ctx, 'ot', OtRunConfig, config_file, flags, _run)
