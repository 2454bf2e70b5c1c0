import json
from pathlib import (
    Path,
)

import pytest

from ranked_packing.config import (
    RunConfig,
    apply_overrides,
    config_from_dict,
    load_run_config,
    parse_override,
)
from ranked_packing.exceptions import (
    ConfigurationError,
)


PRESETS_DIR = Path(__file__).resolve().parent.parent / 'ranked_packing' / 'presets'


def test_defaults_are_valid():
    RunConfig().validate()


def test_overrides_are_parsed_as_json():
    config = load_run_config(overrides=['search.simulations=8', 'net.architecture=impala', 'deterministic=true'])

    assert config.search.simulations == 8
    assert config.net.architecture == 'impala'
    assert config.deterministic is True


def test_parse_override_falls_back_to_string():
    assert parse_override('net.dtype=float64') == (('net', 'dtype'), 'float64')
    assert parse_override('train.percentile=90') == (('train', 'percentile'), 90)


@pytest.mark.parametrize('override', ['search.simulations', '=3'])
def test_malformed_override_is_rejected(override):
    with pytest.raises(ConfigurationError):
        load_run_config(overrides=[override])


def test_override_into_scalar_is_rejected():
    with pytest.raises(ConfigurationError):
        apply_overrides({'seed': 1}, ['seed.value=2'])


def test_unknown_key_is_rejected():
    with pytest.raises(ConfigurationError):
        config_from_dict({'search': {'simulation': 10}})


@pytest.mark.parametrize('override', [
    'train.percentile=100',
    'search.simulations=0',
    'net.kernel_size=2',
    'net.architecture=resnet',
    'train.n_items=100',
    'train.h_star_max=20',
    'scenario.t_max=20',
    'scenario.peak_hour=24',
])
def test_out_of_range_values_are_rejected(override):
    with pytest.raises(ConfigurationError):
        load_run_config(overrides=[override])


def test_virtual_height_defaults_to_width():
    config = load_run_config(overrides=['train.width=6', 'train.h_star_max=6'])

    assert config.train.virtual_height == 6


def test_dumped_config_loads_back():
    config = load_run_config(overrides=['seed=9', 'scenario.extent_km=[10, 8]'])

    restored = config_from_dict(json.loads(config.dumps()))

    assert restored == config
    assert restored.scenario.extent_km == (10.0, 8.0)


@pytest.mark.parametrize('preset', ['desk.json', 'paper.json'])
def test_presets_are_valid(preset):
    config = load_run_config(PRESETS_DIR / preset)

    assert config.train.percentile == 75.0
