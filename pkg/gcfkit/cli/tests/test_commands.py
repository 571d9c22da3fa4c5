"""End-to-end behavior of the ``gcfkit`` commands."""
import csv
import json

import pytest

from gcfkit import __version__
from gcfkit.approx.models import ValidationReport
from gcfkit.approx.services import suites
from gcfkit.auction.models import Menu
from gcfkit.auction.serializers import MechanismSerializer
from gcfkit.cli import main
from gcfkit.cli.exit_codes import EXIT_CONFIG_ERROR, EXIT_NUMERICAL_ABORT, EXIT_OK, EXIT_VALIDATION_FAILURE
from gcfkit.core.services.batching import current_threads
from gcfkit.ot.fixtures import fixture_path


def read_json(path):
    return json.loads(path.read_text())


def read_csv(path):
    with path.open() as handle:
        return list(csv.reader(handle))


class TestGroup:
    def test_version(self, runner):
        result = runner.invoke(main, ['--version'])
        assert result.exit_code == EXIT_OK
        assert __version__ in result.output

    def test_lists_commands(self, runner):
        result = runner.invoke(main, ['--help'])
        for name in ('auction', 'ot', 'validate', 'export-grid'):
            assert name in result.output


class TestAuctionCommand:
    def test_small_run_writes_outputs(self, runner, tmp_path, small_auction_config):
        out = tmp_path / 'run'
        result = runner.invoke(main, ['auction', '--items', '1', '--seed', '7', '--out', str(out), '--config', str(small_auction_config)])

        assert result.exit_code == EXIT_OK, result.output
        assert 'profit/item=' in result.output
        for name in ('mechanism.json', 'report.json', 'trace.csv', 'manifest.json'):
            assert (out / name).is_file()

        mechanism = read_json(out / 'mechanism.json')
        assert mechanism['items'] == 1
        assert len(mechanism['menu']) == 4
        assert mechanism['report']['seed'] == 7

        manifest = read_json(out / 'manifest.json')
        assert manifest['command'] == 'auction'
        assert manifest['seed'] == 7
        assert manifest['status'] == 'success'
        assert manifest['config']['menu_size'] == 4
        assert str(out / 'mechanism.json') in manifest['outputs']
        assert set(manifest['versions']) >= {'gcfkit', 'numpy', 'scipy'}

        assert read_csv(out / 'trace.csv')[0] == ['step', 'objective', 'grad_norm', 'tau']

    def test_identical_seeds_give_identical_files(self, runner, tmp_path, small_auction_config):
        for name in ('first', 'second'):
            args = ['auction', '--items', '2', '--seed', '11', '--out', str(tmp_path / name), '--config', str(small_auction_config)]
            assert runner.invoke(main, args).exit_code == EXIT_OK

        for name in ('mechanism.json', 'report.json', 'trace.csv'):
            assert (tmp_path / 'first' / name).read_bytes() == (tmp_path / 'second' / name).read_bytes()

    def test_flags_override_config_file(self, runner, tmp_path, write_config):
        config = write_config(items=3, menu_size=5, samples=500, batch_size=250, epochs=1, tau_schedule=[10.0], eval_samples=1000)
        out = tmp_path / 'run'
        result = runner.invoke(main, ['auction', '--items', '1', '--out', str(out), '--config', str(config)])

        assert result.exit_code == EXIT_OK, result.output
        assert read_json(out / 'mechanism.json')['items'] == 1

    def test_export_grid(self, runner, tmp_path, small_auction_config):
        out = tmp_path / 'run'
        args = ['auction', '--items', '2', '--export-grid', '64', '--out', str(out), '--config', str(small_auction_config)]
        result = runner.invoke(main, args)

        assert result.exit_code == EXIT_OK, result.output
        rows = read_csv(out / 'grid.csv')
        assert rows[0] == ['y1', 'y2', 'v', 't', 'a1', 'a2']
        assert len(rows) == 64 * 64 + 1

    def test_menu_size_one_is_rejected(self, runner, tmp_path):
        result = runner.invoke(main, ['auction', '--items', '1', '--menu-size', '1', '--out', str(tmp_path / 'run')])

        assert result.exit_code == EXIT_CONFIG_ERROR
        assert 'menu_size' in result.output
        assert not (tmp_path / 'run').exists()

    def test_items_required(self, runner, tmp_path):
        result = runner.invoke(main, ['auction', '--out', str(tmp_path / 'run')])
        assert result.exit_code == EXIT_CONFIG_ERROR
        assert 'items' in result.output

    def test_unknown_config_key(self, runner, tmp_path, write_config):
        config = write_config(items=1, learning_rate=0.1)
        result = runner.invoke(main, ['auction', '--out', str(tmp_path / 'run'), '--config', str(config)])

        assert result.exit_code == EXIT_CONFIG_ERROR
        assert 'learning_rate' in result.output

    def test_missing_config_file(self, runner, tmp_path):
        result = runner.invoke(main, ['auction', '--items', '1', '--config', str(tmp_path / 'absent.json')])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_numerical_abort(self, runner, tmp_path):
        config = tmp_path / 'nan.json'
        # json.dumps writes NaN, which json.loads reads back
        config.write_text(json.dumps({'items': 1, 'production_cost': [float('nan')], 'samples': 500, 'batch_size': 250, 'epochs': 1}))
        out = tmp_path / 'run'
        result = runner.invoke(main, ['auction', '--out', str(out), '--config', str(config)])

        assert result.exit_code == EXIT_NUMERICAL_ABORT
        assert 'stage 0' in result.output
        manifest = read_json(out / 'manifest.json')
        assert manifest['status'] == 'failed'
        assert manifest['exit_code'] == EXIT_NUMERICAL_ABORT
        assert (out / 'trace.csv').is_file()

    def test_output_directory_must_be_writable(self, runner, tmp_path, small_auction_config):
        blocker = tmp_path / 'taken'
        blocker.write_text('')
        result = runner.invoke(main, ['auction', '--items', '1', '--out', str(blocker / 'run'), '--config', str(small_auction_config)])
        assert result.exit_code == EXIT_CONFIG_ERROR

    @pytest.mark.slow
    def test_single_item_revenue(self, runner, tmp_path):
        out = tmp_path / 'run'
        result = runner.invoke(main, ['auction', '--items', '1', '--seed', '7', '--out', str(out)])

        assert result.exit_code == EXIT_OK, result.output
        report = read_json(out / 'report.json')
        assert report['mean_profit_per_item'] == pytest.approx(0.250, abs=0.005)


class TestOtCommand:
    def test_two_by_two(self, runner, tmp_path):
        out = tmp_path / 'run'
        result = runner.invoke(main, ['ot', str(fixture_path('two_by_two.json')), '--out', str(out)])

        assert result.exit_code == EXIT_OK, result.output
        solution = read_json(out / 'solution.json')
        assert solution['value'] == pytest.approx(0.5, abs=1e-6)
        assert solution['assignment'] == [0, 1]
        assert read_csv(out / 'assignment.csv') == [['source', 'target'], ['0', '0'], ['1', '1']]
        assert read_json(out / 'manifest.json')['command'] == 'ot'

    def test_self_transport(self, runner, tmp_path):
        out = tmp_path / 'run'
        result = runner.invoke(main, ['ot', str(fixture_path('self_transport.json')), '--out', str(out)])

        assert result.exit_code == EXIT_OK, result.output
        solution = read_json(out / 'solution.json')
        assert solution['value'] == pytest.approx(0.0, abs=1e-7)
        assert solution['assignment'] == [0, 1, 2, 3]

    def test_instance_from_config(self, runner, tmp_path, write_config):
        config = write_config(instance=str(fixture_path('two_by_two.json')), polish=False, max_iterations=50)
        out = tmp_path / 'run'
        result = runner.invoke(main, ['ot', '--out', str(out), '--config', str(config)])

        assert result.exit_code == EXIT_OK, result.output
        assert read_json(out / 'solution.json')['polished'] is False

    def test_missing_weights(self, runner, tmp_path):
        result = runner.invoke(main, ['ot', str(fixture_path('missing_weights.json')), '--out', str(tmp_path / 'run')])

        assert result.exit_code == EXIT_CONFIG_ERROR
        assert 'mu.weights' in result.output
        assert read_json(tmp_path / 'run' / 'manifest.json')['status'] == 'failed'

    def test_instance_required(self, runner, tmp_path):
        result = runner.invoke(main, ['ot', '--out', str(tmp_path / 'run')])
        assert result.exit_code == EXIT_CONFIG_ERROR


class TestValidateCommand:
    def test_duality_suite(self, runner, tmp_path):
        out = tmp_path / 'run'
        result = runner.invoke(main, ['validate', 'duality', '--out', str(out)])

        assert result.exit_code == EXIT_OK, result.output
        assert 'PASS duality.strong_duality' in result.output
        payload = read_json(out / 'validation.json')
        assert payload['pass'] is True
        assert payload['seed'] == suites.DEFAULT_SEED
        assert payload['reports'][0]['check_name'] == 'duality.strong_duality'

    def test_failure_exit_code(self, runner, tmp_path, monkeypatch):
        failing = ValidationReport(check_name='uap.bound', instances=1, max_error=2.0, passed=False)
        monkeypatch.setitem(suites.SUITES, 'uap', lambda seed: [failing])
        out = tmp_path / 'run'
        result = runner.invoke(main, ['validate', 'uap', '--out', str(out)])

        assert result.exit_code == EXIT_VALIDATION_FAILURE
        assert 'FAIL uap.bound' in result.output
        assert read_json(out / 'validation.json')['pass'] is False
        manifest = read_json(out / 'manifest.json')
        assert manifest['exit_code'] == EXIT_VALIDATION_FAILURE
        assert str(out / 'validation.json') in manifest['outputs']

    def test_suite_from_config(self, runner, tmp_path, write_config, monkeypatch):
        seen = []
        monkeypatch.setitem(suites.SUITES, 'lean', lambda seed: seen.append(seed) or [])
        config = write_config(suite='lean', seed=3)
        result = runner.invoke(main, ['validate', '--out', str(tmp_path / 'run'), '--config', str(config)])

        assert result.exit_code == EXIT_OK, result.output
        assert seen == [3]

    def test_threads_reach_suites(self, runner, tmp_path, monkeypatch):
        seen = []
        monkeypatch.setitem(suites.SUITES, 'lean', lambda seed: seen.append(current_threads()) or [])
        result = runner.invoke(main, ['validate', 'lean', '--threads', '3', '--out', str(tmp_path / 'run')])

        assert result.exit_code == EXIT_OK, result.output
        assert seen == [3]
        assert current_threads() == 1

    def test_unknown_suite(self, runner, tmp_path):
        result = runner.invoke(main, ['validate', 'everything', '--out', str(tmp_path / 'run')])
        assert result.exit_code == 2


class TestExportGridCommand:
    def test_posted_price_grid(self, runner, tmp_path):
        mechanism = tmp_path / 'mechanism.json'
        mechanism.write_text(json.dumps(MechanismSerializer.to_representation(Menu([[0.0], [1.0]], [0.0, 0.5]))))
        out = tmp_path / 'run'
        result = runner.invoke(main, ['export-grid', str(mechanism), '--resolution', '5', '--out', str(out)])

        assert result.exit_code == EXIT_OK, result.output
        rows = read_csv(out / 'grid.csv')
        assert rows[0] == ['y1', 'v', 't', 'a1']
        assert [row[2] for row in rows[1:]] == ['0.0', '0.0', '0.0', '0.5', '0.5']

    def test_malformed_mechanism(self, runner, tmp_path):
        mechanism = tmp_path / 'mechanism.json'
        mechanism.write_text(json.dumps({'items': 1, 'menu': [{'allocation': [2.0], 'price': 0.0}]}))
        result = runner.invoke(main, ['export-grid', str(mechanism), '--out', str(tmp_path / 'run')])

        assert result.exit_code == EXIT_CONFIG_ERROR
        assert 'menu.0.allocation.0' in result.output
