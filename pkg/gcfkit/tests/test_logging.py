from __future__ import annotations

import json
import logging

import numpy as np

from gcfkit import project_logging
from gcfkit.manifest import RunManifest, log_run_event
from gcfkit.project_logging import JsonLogFormatter, LoggingContextFilter


def make_record(**attributes) -> logging.LogRecord:
    record = logging.LogRecord(
        name='gcfkit.test',
        level=logging.INFO,
        pathname=__file__,
        lineno=10,
        msg='hello world',
        args=(),
        exc_info=None,
    )
    for key, value in attributes.items():
        setattr(record, key, value)
    return record


def test_json_formatter_includes_context():
    token = project_logging.push_context(run_id='run-123', command='auction', stage=2)
    try:
        record = make_record()
        LoggingContextFilter(service_name='test-service', environment='test').filter(record)
        payload = json.loads(JsonLogFormatter().format(record))

        assert payload['message'] == 'hello world'
        assert payload['run_id'] == 'run-123'
        assert payload['command'] == 'auction'
        assert payload['context']['stage'] == 2
        assert payload['service'] == 'test-service'
        assert payload['environment'] == 'test'
    finally:
        project_logging.pop_context(token)


def test_json_formatter_serializes_arrays():
    record = make_record(event='core.test', extra={'weights': np.array([0.5, 0.5]), 'tau': np.float64(10.0)})
    payload = json.loads(JsonLogFormatter().format(record))

    assert payload['event'] == 'core.test'
    assert payload['extra'] == {'weights': [0.5, 0.5], 'tau': 10.0}


def test_log_context_is_scoped():
    with project_logging.log_context(seed=7, tau=None):
        with project_logging.log_context(stage=1):
            record = make_record()
            LoggingContextFilter(service_name='s', environment='test').filter(record)
            assert record.context == {'seed': 7, 'stage': 1}
    record = make_record()
    LoggingContextFilter(service_name='s', environment='test').filter(record)
    assert record.context == {}


def test_null_handlers_when_console_disabled():
    config = project_logging.get_logging_config(environment='test', enable_console=False, enable_runs_console=False)

    assert config['handlers']['console']['class'] == 'logging.NullHandler'
    assert config['handlers']['runs_console']['class'] == 'logging.NullHandler'
    assert config['loggers']['gcfkit.runs']['propagate'] is False


def test_log_run_event_records_manifest(caplog):
    manifest = RunManifest(command='validate', seed=3, config={'suite': 'lean'}, outputs=['runs/validation.json'])

    with caplog.at_level(logging.INFO, logger='gcfkit.runs'):
        log_run_event(manifest)

    matching = [record for record in caplog.records if record.name == 'gcfkit.runs']
    assert matching, 'expected run log record'
    record = matching[-1]
    assert record.event == 'runs.validate.success'
    assert record.extra['config'] == {'suite': 'lean'}
    assert record.extra['run_id'] == manifest.run_id


def test_failed_run_logs_warning(caplog):
    manifest = RunManifest(command='auction', seed=0, config={}, status='failed', exit_code=3)

    with caplog.at_level(logging.INFO, logger='gcfkit.runs'):
        log_run_event(manifest)

    record = [record for record in caplog.records if record.name == 'gcfkit.runs'][-1]
    assert record.levelno == logging.WARNING
    assert record.event == 'runs.auction.failed'
