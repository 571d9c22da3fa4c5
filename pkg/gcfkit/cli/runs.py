"""Shared driver for every command: parse config, run, record a manifest, exit."""
from __future__ import annotations

import logging
import tempfile
from pathlib import Path
from typing import Any, Callable, List, Mapping, Optional, Type

import click

from gcfkit import project_logging
from gcfkit.exceptions import ConfigError
from gcfkit.manifest import RunManifest, log_run_event

from .config import RunConfig, load_run_config
from .exit_codes import EXIT_OK, error_message, exit_code_for

logger = logging.getLogger(__name__)

Body = Callable[[Any, Path, List[Path]], None]


def ensure_writable(out_dir: Path) -> Path:
    """Create ``out_dir`` and prove a file can be written there before any long run."""
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(dir=out_dir, prefix='.write-check-'):
            pass
    except OSError as exc:
        raise ConfigError(f'output directory {out_dir} is not writable: {exc}') from exc
    return out_dir


def _fail(ctx: click.Context, exc: BaseException, manifest: Optional[RunManifest], out_dir: Optional[Path]) -> None:
    code = exit_code_for(exc)
    if code is None:
        raise exc
    message = error_message(exc)
    if manifest is not None:
        manifest.status = 'failed'
        manifest.exit_code = code
        manifest.description = message
        if out_dir is not None:
            manifest.write(out_dir)
        log_run_event(manifest)
    else:
        logger.warning(message, extra={'event': 'cli.rejected', 'extra': {'command': ctx.info_name, 'exit_code': code}})
    click.echo(message, err=True)
    ctx.exit(code)


def run_command(
    ctx: click.Context,
    command: str,
    config_cls: Type[RunConfig],
    config_file: Optional[Path],
    flags: Mapping[str, Any],
    body: Body,
) -> None:
    """Run ``body(config, out_dir, outputs)`` and exit with the mapped status.

    ``body`` appends every file it writes to ``outputs`` so the manifest lists
    them even when a later step fails.
    """
    manifest: Optional[RunManifest] = None
    out_dir: Optional[Path] = None
    try:
        config = load_run_config(config_cls, config_file, flags)
        manifest = RunManifest(command=command, seed=config.seed, config=config.model_dump(mode='json'))
        with project_logging.log_context(run_id=manifest.run_id, command=command, seed=config.seed):
            out_dir = ensure_writable(config.output_dir(command))
            outputs: List[Path] = []
            try:
                body(config, out_dir, outputs)
            finally:
                manifest.outputs = [str(path) for path in outputs]
    except click.exceptions.Exit:
        raise
    except Exception as exc:  # noqa: BLE001 - mapped or re-raised in _fail
        _fail(ctx, exc, manifest, out_dir)
        return

    manifest.outputs.append(str(out_dir / 'manifest.json'))
    manifest.write(out_dir)
    log_run_event(manifest)
    ctx.exit(EXIT_OK)


__all__ = ['ensure_writable', 'run_command']
