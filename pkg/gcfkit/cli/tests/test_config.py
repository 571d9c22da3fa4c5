import json

import pytest
from pydantic import ValidationError

from gcfkit.cli.config import AuctionRunConfig, OtRunConfig, load_run_config, read_config_file
from gcfkit.cli.exit_codes import exit_code_for, error_message
from gcfkit.cli.runs import ensure_writable
from gcfkit.exceptions import (
    ConfigError,
    InputError,
    InstanceParseError,
    NonFiniteGradientError,
    TrainingAbortedError,
    ValidationFailure,
)


class TestLoadRunConfig:
    def test_flags_win(self, tmp_path):
        path = tmp_path / 'config.json'
        path.write_text(json.dumps({'items': 2, 'seed': 4, 'epochs': 3}))
        config = load_run_config(AuctionRunConfig, path, {'items': 5, 'seed': None})

        assert config.items == 5
        assert config.seed == 4
        assert config.epochs == 3

    def test_train_config_keeps_defaults(self):
        config = AuctionRunConfig(items=2, seed=9, export_grid=16)
        train = config.train_config()

        assert train.items == 2
        assert train.seed == 9
        assert train.resolved_menu_size == 32
        assert train.samples == 100_000

    def test_solve_config(self):
        solve = OtRunConfig(max_iterations=10, polish=False).solve_config()
        assert solve.max_iterations == 10
        assert solve.polish is False

    def test_unknown_keys(self):
        with pytest.raises(ValidationError):
            AuctionRunConfig(items=1, learnig_rate=0.1)

    def test_file_must_be_an_object(self, tmp_path):
        path = tmp_path / 'config.json'
        path.write_text('[1, 2]')
        with pytest.raises(InstanceParseError):
            read_config_file(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / 'config.json'
        path.write_text('{items: 1}')
        with pytest.raises(InstanceParseError):
            read_config_file(path)

    def test_no_file(self):
        assert read_config_file(None) == {}


class TestExitCodes:
    @pytest.mark.parametrize('exc, code', [
        (ConfigError('bad'), 2),
        (InstanceParseError('mu.weights', 'missing'), 2),
        (InputError('bad'), 2),
        (TrainingAbortedError(1, 2, 10.0), 3),
        (NonFiniteGradientError(0, float('nan')), 3),
        (ValidationFailure(['lean.convexity']), 4),
    ])
    def test_mapping(self, exc, code):
        assert exit_code_for(exc) == code

    def test_pydantic_errors_are_config_errors(self):
        with pytest.raises(ValidationError) as excinfo:
            AuctionRunConfig(items=1, menu_size=1)
        assert exit_code_for(excinfo.value) == 2
        assert 'menu_size' in error_message(excinfo.value)

    def test_bugs_are_not_mapped(self):
        assert exit_code_for(KeyError('x')) is None


class TestEnsureWritable:
    def test_creates_directory(self, tmp_path):
        target = tmp_path / 'a' / 'b'
        assert ensure_writable(target) == target
        assert target.is_dir()
        assert list(target.iterdir()) == []

    def test_file_in_the_way(self, tmp_path):
        blocker = tmp_path / 'file'
        blocker.write_text('')
        with pytest.raises(ConfigError):
            ensure_writable(blocker / 'out')
