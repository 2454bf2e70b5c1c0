import os

import numpy as np
import pytest

from ranked_packing.config import (
    config_from_dict,
)
from ranked_packing.packing.instances import (
    dump_instance,
    make_instance,
)
from ranked_packing.utils import (
    atomic_write_text,
)


def pytest_collection_modifyitems(config, items):
    if os.environ.get('RANKED_PACKING_SLOW_TESTS') == '1':
        return

    skip_slow = pytest.mark.skip(reason='RANKED_PACKING_SLOW_TESTS=1 для запуска')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def three_items():
    """
    Экземпляр W* = 5 с предметами (3, 2), (2, 3), (2, 1): HVRAA дает H~ = 3,
    Lego дает H~ = 4, точная высота 3
    """
    return make_instance([(3, 2), (2, 3), (2, 1)], w_star=5)


@pytest.fixture
def two_unit_items():
    return make_instance([(1, 1), (1, 1)], w_star=2)


@pytest.fixture
def instance_file(tmp_path, three_items):
    path = tmp_path / 'three_items.json'
    atomic_write_text(path, dump_instance(three_items))

    return path


@pytest.fixture
def generator():
    return np.random.default_rng(0)


@pytest.fixture
def tiny_config():
    """
    Самая маленькая конфигурация обучения: одна итерация, один эпизод,
    две симуляции
    """
    return config_from_dict({
        'seed': 3,
        'deterministic': True,
        'net': {
            'conv_layers': 1,
            'channels': 4,
        },
        'search': {
            'simulations': 2,
        },
        'train': {
            'iterations': 1,
            'episodes_per_iteration': 1,
            'train_steps': 1,
            'batch_size': 2,
            'width': 3,
            'n_items': 2,
            'h_star_min': 2,
            'h_star_max': 3,
        },
    })
