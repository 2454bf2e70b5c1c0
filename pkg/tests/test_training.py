from dataclasses import (
    replace,
)

import pandas as pd

from ranked_packing.config import (
    config_from_dict,
)
from ranked_packing.exceptions import (
    NonFiniteLossError,
)
from ranked_packing.nnet.checkpoints import (
    load_checkpoint,
)
from ranked_packing.nnet.training import (
    ModelTrainer,
)
from ranked_packing.presenters import (
    EvaluationReportPresenter,
)
from ranked_packing.selfplay.evaluation import (
    evaluate,
)
from ranked_packing.selfplay.managers import (
    run_training,
)
from ranked_packing.utils import (
    read_json,
)


def test_training_writes_run_directory(tmp_path, tiny_config):
    result = run_training(tiny_config, tmp_path)

    assert result.has_not_errors
    assert config_from_dict(read_json(tmp_path / 'config.json')) == tiny_config

    metrics = pd.read_csv(tmp_path / 'metrics.csv')
    assert metrics.columns.tolist() == [
        'iteration', 'mean_reward', 'reward_std', 'optimality_ratio', 'loss', 'wall_seconds',
    ]
    assert metrics['iteration'].tolist() == [1]
    assert metrics['wall_seconds'].tolist() == [0.0]
    assert 0.0 <= metrics['mean_reward'][0] <= 1.0

    for name in ('iter_0000.bin', 'iter_0000.json', 'iter_0001.bin', 'iter_0001.json'):
        assert (tmp_path / 'checkpoints' / name).exists()


def test_checkpoint_carries_training_state(tmp_path, tiny_config):
    run_training(tiny_config, tmp_path)

    model, sidecar = load_checkpoint(tmp_path / 'checkpoints' / 'iter_0001.bin')

    assert model.shape == (2, 3, 3)
    assert model.version == 1
    assert sidecar['iteration'] == 1
    assert sidecar['percentile'] == 75.0
    assert len(sidecar['reward_buffer']['committed']) == 1
    assert 0.0 <= sidecar['reward_threshold'] <= 1.0


def test_deterministic_runs_give_equal_metrics(tmp_path, tiny_config):
    run_training(tiny_config, tmp_path / 'first')
    run_training(tiny_config, tmp_path / 'second')

    assert (tmp_path / 'first' / 'metrics.csv').read_text() == (tmp_path / 'second' / 'metrics.csv').read_text()


def test_zero_iterations_writes_initial_checkpoint_only(tmp_path, tiny_config):
    config = replace(tiny_config, train=replace(tiny_config.train, iterations=0))

    result = run_training(config, tmp_path)

    assert result.has_not_errors
    assert pd.read_csv(tmp_path / 'metrics.csv').empty
    assert sorted(path.name for path in (tmp_path / 'checkpoints').iterdir()) == [
        'iter_0000.bin', 'iter_0000.json',
    ]


def test_non_finite_loss_stops_with_checkpoint(tmp_path, tiny_config, monkeypatch):
    def broken_fit(self, *args, iteration=None, **kwargs):
        raise NonFiniteLossError(f'iteration {iteration}: loss is nan')

    monkeypatch.setattr(ModelTrainer, 'fit', broken_fit)
    config = replace(tiny_config, train=replace(tiny_config.train, iterations=3))

    result = run_training(config, tmp_path)

    assert result.first_error().exit_code == 7
    assert (tmp_path / 'checkpoints' / 'iter_0001.bin').exists()
    assert not (tmp_path / 'checkpoints' / 'iter_0002.bin').exists()
    assert pd.read_csv(tmp_path / 'metrics.csv').empty


def test_trained_model_solves_greedily(tmp_path, tiny_config, two_unit_items):
    run_training(tiny_config, tmp_path)
    model, sidecar = load_checkpoint(tmp_path / 'checkpoints' / 'iter_0001.bin')
    instance = replace(two_unit_items, w_star=3)

    result, rows = evaluate(
        'selfplay',
        [instance],
        height=3,
        model=model,
        reward_threshold=sidecar['reward_threshold'],
        search_config=replace(tiny_config.search, temperature=0.0),
    )

    assert result.has_not_errors
    assert EvaluationReportPresenter(rows, solver='selfplay').represent().summary['n_instances'] == 1
