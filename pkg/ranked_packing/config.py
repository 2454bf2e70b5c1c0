import json
from dataclasses import (
    asdict,
    dataclass,
    field,
    fields,
    is_dataclass,
)
from pathlib import (
    Path,
)
from typing import (
    Any,
    Dict,
    Iterable,
    Optional,
    Tuple,
    Type,
    TypeVar,
    Union,
)

from ranked_packing.consts import (
    DEFAULT_CONNECTED_RUS,
    FIBRE_REDUCTION_FACTOR,
    PEAK_HOUR,
)
from ranked_packing.enums import (
    ArchitectureEnum,
    DTypeEnum,
)
from ranked_packing.exceptions import (
    ConfigurationError,
)
from ranked_packing.strings import (
    CONFIG_OVERRIDE_FORMAT_ERROR,
    CONFIG_VALUE_ERROR,
    PERCENTILE_ERROR,
    UNKNOWN_CONFIG_KEYS_ERROR,
)
from ranked_packing.utils import (
    read_json,
    to_json,
)


_C = TypeVar('_C')


@dataclass
class NetConfig:
    """
    Архитектура сети стратегии и ценности и параметры оптимизатора
    """
    architecture: str = ArchitectureEnum.PLAIN
    conv_layers: int = 3
    channels: int = 32
    kernel_size: int = 3
    dtype: str = DTypeEnum.FLOAT32
    learning_rate: float = 1e-3
    momentum: float = 0.9
    weight_decay: float = 0.0

    def validate(self):
        if self.architecture not in ArchitectureEnum.values:
            _raise_value_error('net.architecture', f'допустимые {sorted(ArchitectureEnum.values)}')

        if self.dtype not in DTypeEnum.values:
            _raise_value_error('net.dtype', f'допустимые {sorted(DTypeEnum.values)}')

        if self.conv_layers < 1 or self.channels < 1:
            _raise_value_error('net.conv_layers', 'количество слоев и каналов должно быть не меньше 1')

        if self.kernel_size < 1 or self.kernel_size % 2 == 0:
            _raise_value_error('net.kernel_size', 'ожидается нечетное положительное число')

        if self.learning_rate < 0 or self.weight_decay < 0 or not 0 <= self.momentum < 1:
            _raise_value_error('net.learning_rate', 'параметры оптимизатора вне допустимого диапазона')


@dataclass
class SearchConfig:
    """
    Параметры MCTS: бюджет симуляций, константа PUCT, шум Дирихле в корне и
    температура выбора действия
    """
    simulations: int = 64
    c_puct: float = 1.5
    dirichlet_epsilon: float = 0.25
    dirichlet_alpha: float = 1.0
    temperature: float = 1.0
    reuse_tree: bool = False

    def validate(self):
        if self.simulations < 1:
            _raise_value_error('search.simulations', 'ожидается M >= 1')

        if self.c_puct <= 0:
            _raise_value_error('search.c_puct', 'ожидается c_puct > 0')

        if not 0 <= self.dirichlet_epsilon <= 1:
            _raise_value_error('search.dirichlet_epsilon', 'ожидается значение из [0, 1]')

        if self.dirichlet_alpha <= 0:
            _raise_value_error('search.dirichlet_alpha', 'ожидается alpha > 0')

        if self.temperature < 0:
            _raise_value_error('search.temperature', 'ожидается неотрицательная температура')


@dataclass
class TrainConfig:
    """
    Параметры цикла самоигры с ранжированной наградой и распределение
    генерируемых экземпляров
    """
    iterations: int = 50
    episodes_per_iteration: int = 10
    percentile: float = 75.0
    buffer_capacity: int = 100
    train_steps: int = 200
    batch_size: int = 64
    width: int = 8
    height: Optional[int] = None
    n_items: int = 5
    h_star_min: int = 2
    h_star_max: int = 8
    checkpoint_every: int = 1
    jobs: int = 1

    @property
    def virtual_height(self) -> int:
        return self.height if self.height is not None else self.width

    def validate(self):
        if not 0 < self.percentile < 100:
            raise ConfigurationError(PERCENTILE_ERROR.format(alpha=self.percentile))

        if self.iterations < 0 or self.episodes_per_iteration < 1:
            _raise_value_error('train.episodes_per_iteration', 'ожидается K >= 0 и J >= 1')

        if self.buffer_capacity < 1 or self.batch_size < 1 or self.train_steps < 0:
            _raise_value_error('train.batch_size', 'размеры буферов и пакетов должны быть положительными')

        if self.width < 1 or self.n_items < 1:
            _raise_value_error('train.width', 'ожидается W* >= 1 и N >= 1')

        if not 1 <= self.h_star_min <= self.h_star_max <= self.virtual_height:
            _raise_value_error('train.h_star_min', "ожидается 1 <= h_star_min <= h_star_max <= H'")

        if self.n_items > self.width * self.h_star_min:
            _raise_value_error('train.n_items', 'N превышает площадь наименьшего разрезаемого прямоугольника')

        if self.checkpoint_every < 1 or self.jobs < 1:
            _raise_value_error('train.checkpoint_every', 'ожидается значение не меньше 1')


@dataclass
class ScenarioConfig:
    """
    Параметры синтетического региона ORAN и выборки запросов RU
    """
    n_sites: int = 100
    n_dus: int = 10
    extent_km: Tuple[float, float] = (14.0, 13.0)
    w_star: int = 15
    t_max: int = 8
    capacity: int = 15
    connected_rus: int = DEFAULT_CONNECTED_RUS
    reduction_factor: float = FIBRE_REDUCTION_FACTOR
    peak_hour: int = PEAK_HOUR
    mu_min: float = 3.0
    mu_max: float = 5.0
    delta_max: int = 2

    def validate(self):
        if self.n_sites < self.connected_rus or self.n_dus < 1:
            _raise_value_error('scenario.n_sites', 'сайтов должно быть не меньше connected_rus')

        if len(self.extent_km) != 2 or min(self.extent_km) <= 0:
            _raise_value_error('scenario.extent_km', 'ожидается пара положительных размеров')

        if not 1 <= self.t_max <= self.w_star or self.capacity < 1:
            _raise_value_error('scenario.t_max', "ожидается 1 <= T' <= W* и C >= 1")

        if self.reduction_factor < 1:
            _raise_value_error('scenario.reduction_factor', 'ожидается F >= 1')

        if not 0 <= self.peak_hour < 24:
            _raise_value_error('scenario.peak_hour', 'ожидается час из [0, 24)')

        if self.delta_max < 0 or not 1 + self.delta_max <= self.mu_min <= self.mu_max:
            _raise_value_error('scenario.mu_min', 'ожидается 1 + delta_max <= mu_min <= mu_max')


@dataclass
class RunConfig:
    """
    Полная конфигурация запуска
    """
    seed: int = 0
    deterministic: bool = False
    net: NetConfig = field(default_factory=NetConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    train: TrainConfig = field(default_factory=TrainConfig)
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)

    def validate(self):
        for section in (self.net, self.search, self.train, self.scenario):
            section.validate()

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['scenario']['extent_km'] = list(self.scenario.extent_km)

        return data

    def dumps(self) -> str:
        return to_json(self.as_dict())


def _raise_value_error(key: str, reason: str):
    raise ConfigurationError(CONFIG_VALUE_ERROR.format(key=key, reason=reason))


def _build(
    config_class: Type[_C],
    data: Dict[str, Any],
    section: str,
) -> _C:
    """
    Создание раздела конфигурации из словаря с отказом на неизвестных ключах
    """
    if not isinstance(data, dict):
        _raise_value_error(section or '<root>', 'ожидается объект JSON')

    known = {config_field.name: config_field for config_field in fields(config_class)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise ConfigurationError(
            UNKNOWN_CONFIG_KEYS_ERROR.format(section=section or '<root>', keys=', '.join(unknown))
        )

    values = {}
    for key, value in data.items():
        default = known[key].default_factory() if callable(known[key].default_factory) else None

        if is_dataclass(default):
            values[key] = _build(type(default), value, key)
        elif key == 'extent_km':
            values[key] = tuple(float(side) for side in value)
        else:
            values[key] = value

    try:
        return config_class(**values)
    except TypeError as exception:
        raise ConfigurationError(CONFIG_VALUE_ERROR.format(key=section, reason=exception))


def config_from_dict(data: Dict[str, Any]) -> RunConfig:
    config = _build(RunConfig, data, '')

    try:
        config.validate()
    except TypeError as exception:
        raise ConfigurationError(CONFIG_VALUE_ERROR.format(key='<type>', reason=exception))

    return config


def parse_override(override: str) -> Tuple[Tuple[str, ...], Any]:
    """
    Разбор переопределения вида раздел.ключ=значение. Значение читается как
    JSON, при ошибке разбора используется строка
    """
    path, separator, raw_value = override.partition('=')
    if not separator or not path:
        raise ConfigurationError(CONFIG_OVERRIDE_FORMAT_ERROR.format(override=override))

    try:
        value = json.loads(raw_value)
    except ValueError:
        value = raw_value

    return tuple(path.split('.')), value


def apply_overrides(
    data: Dict[str, Any],
    overrides: Iterable[str],
) -> Dict[str, Any]:
    """
    Наложение переопределений на словарь конфигурации. Неизвестные ключи
    отсекаются при построении конфигурации
    """
    for override in overrides:
        keys, value = parse_override(override)

        target = data
        for key in keys[:-1]:
            target = target.setdefault(key, {})
            if not isinstance(target, dict):
                raise ConfigurationError(CONFIG_OVERRIDE_FORMAT_ERROR.format(override=override))

        target[keys[-1]] = value

    return data


def load_run_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Iterable[str] = (),
) -> RunConfig:
    """
    Загрузка конфигурации запуска из JSON-файла с переопределениями
    """
    data = read_json(path) if path is not None else {}

    return config_from_dict(apply_overrides(data, overrides))
